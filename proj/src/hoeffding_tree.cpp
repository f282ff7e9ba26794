#include "recur/hoeffding_tree.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace recur::tree {

namespace {

double entropy(std::uint64_t a, std::uint64_t b) {
    const double n = static_cast<double>(a + b);
    if (n == 0.0) return 0.0;
    double h = 0.0;
    for (double c : {static_cast<double>(a), static_cast<double>(b)}) {
        if (c > 0.0) h -= (c / n) * std::log2(c / n);
    }
    return h;
}

int majority(const std::array<std::uint64_t, 2>& counts) { return counts[1] > counts[0] ? 1 : 0; }

}  // namespace

double information_gain(const std::array<std::uint64_t, 2>& parent,
                        std::span<const std::array<std::uint64_t, 2>> branches) {
    const double n = static_cast<double>(parent[0] + parent[1]);
    if (n == 0.0) return 0.0;
    double remainder = 0.0;
    for (const auto& b : branches) {
        const double nb = static_cast<double>(b[0] + b[1]);
        if (nb > 0.0) remainder += (nb / n) * entropy(b[0], b[1]);
    }
    return entropy(parent[0], parent[1]) - remainder;
}

double hoeffding_bound(double delta, double n) { return std::sqrt(std::log(1.0 / delta) / (2.0 * n)); }

HoeffdingTree::HoeffdingTree(AttributeSpace space, std::size_t root_attribute, TreeParams params)
    : space_(std::move(space)), root_attribute_(root_attribute), params_(params) {
    if (root_attribute_ >= space_.dimension()) throw std::invalid_argument("root attribute out of range");
    if (!(params_.split_confidence > 0.0 && params_.split_confidence < 1.0)) {
        throw std::invalid_argument("split confidence must lie in (0, 1)");
    }
    if (params_.grace_period == 0) throw std::invalid_argument("grace period must be positive");
    offsets_.resize(space_.dimension());
    for (std::size_t m = 0; m < space_.dimension(); ++m) {
        offsets_[m] = stats_size_;
        stats_size_ += 2 * static_cast<std::size_t>(space_.cardinality(m));
    }
    reset();
}

void HoeffdingTree::reset() {
    nodes_.clear();
    splits_ = 0;
    seen_ = 0;
    nodes_.emplace_back();
    split(0, static_cast<std::uint32_t>(root_attribute_));
}

std::uint32_t HoeffdingTree::add_leaf(std::uint32_t parent) {
    Node leaf;
    leaf.parent = parent;
    leaf.stats.assign(stats_size_, 0);
    nodes_.push_back(std::move(leaf));
    return static_cast<std::uint32_t>(nodes_.size() - 1);
}

void HoeffdingTree::split(std::uint32_t leaf, std::uint32_t attribute) {
    nodes_[leaf].split_attribute = attribute;
    nodes_[leaf].stats.clear();
    nodes_[leaf].stats.shrink_to_fit();
    nodes_[leaf].first_child = static_cast<std::uint32_t>(nodes_.size());
    for (std::uint32_t v = 0; v < space_.cardinality(attribute); ++v) add_leaf(leaf);
    ++splits_;
}

std::uint32_t HoeffdingTree::leaf_for(std::span<const Value> x) const {
    std::uint32_t node = 0;
    while (nodes_[node].split_attribute != kNoSplit) {
        node = nodes_[node].first_child + x[nodes_[node].split_attribute];
    }
    return node;
}

int HoeffdingTree::prediction(std::uint32_t node) const {
    while (true) {
        const auto& n = nodes_[node];
        if (n.counts[0] + n.counts[1] > 0) return majority(n.counts);
        if (n.parent == kNoSplit) return 0;
        node = n.parent;
    }
}

LearnOutcome HoeffdingTree::learn(const Record& r, bool may_split) {
    if (!space_.contains(r.values) || r.label > 1) {
        ++rejected_;
        return LearnOutcome::kRejected;
    }
    ++seen_;
    std::uint32_t node = 0;
    while (nodes_[node].split_attribute != kNoSplit) {
        ++nodes_[node].counts[r.label];
        node = nodes_[node].first_child + r.values[nodes_[node].split_attribute];
    }
    auto& leaf = nodes_[node];
    ++leaf.counts[r.label];
    for (std::size_t m = 0; m < r.values.size(); ++m) {
        ++leaf.stats[offsets_[m] + 2 * r.values[m] + r.label];
    }
    if (++leaf.since_attempt < params_.grace_period) return LearnOutcome::kLearned;
    leaf.since_attempt = 0;
    if (may_split && try_split(node)) return LearnOutcome::kSplit;
    return LearnOutcome::kLearned;
}

bool HoeffdingTree::try_split(std::uint32_t leaf) {
    const auto counts = nodes_[leaf].counts;
    const auto n = counts[0] + counts[1];
    if (counts[0] == n || counts[1] == n) return false;

    std::vector<bool> on_path(space_.dimension(), false);
    for (auto p = nodes_[leaf].parent; p != kNoSplit; p = nodes_[p].parent) {
        on_path[nodes_[p].split_attribute] = true;
    }

    const auto& stats = nodes_[leaf].stats;
    double best = -1.0;
    double second = 0.0;
    std::uint32_t best_attribute = kNoSplit;
    std::vector<std::array<std::uint64_t, 2>> branches;
    for (std::size_t m = 0; m < space_.dimension(); ++m) {
        if (on_path[m]) continue;
        branches.assign(space_.cardinality(m), {0, 0});
        for (std::uint32_t v = 0; v < space_.cardinality(m); ++v) {
            branches[v] = {stats[offsets_[m] + 2 * v], stats[offsets_[m] + 2 * v + 1]};
        }
        const double gain = information_gain(counts, branches);
        if (gain > best) {
            if (best_attribute != kNoSplit) second = std::max(second, best);
            best = gain;
            best_attribute = static_cast<std::uint32_t>(m);
        } else {
            second = std::max(second, gain);
        }
    }
    if (best_attribute == kNoSplit || best <= 1e-12) return false;
    const double eps = hoeffding_bound(params_.split_confidence, static_cast<double>(n));
    if (best - second > eps || eps < params_.tie_threshold) {
        split(leaf, best_attribute);
        return true;
    }
    return false;
}

int HoeffdingTree::classify(std::span<const Value> x) const {
    if (!space_.contains(x)) throw std::invalid_argument("assignment outside the attribute space");
    return prediction(leaf_for(x));
}

std::array<std::uint64_t, 2> HoeffdingTree::leaf_counts(std::span<const Value> x) const {
    if (!space_.contains(x)) throw std::invalid_argument("assignment outside the attribute space");
    return nodes_[leaf_for(x)].counts;
}

void HoeffdingTree::collect_paths(std::uint32_t node, std::vector<std::uint32_t>& symbols,
                                  std::vector<fourier::Schema>& out) const {
    const auto& n = nodes_[node];
    if (n.split_attribute == kNoSplit) {
        out.push_back({symbols, static_cast<double>(prediction(node))});
        return;
    }
    for (std::uint32_t v = 0; v < space_.cardinality(n.split_attribute); ++v) {
        symbols[n.split_attribute] = v;
        collect_paths(n.first_child + v, symbols, out);
    }
    symbols[n.split_attribute] = fourier::kWildcard;
}

std::vector<fourier::Schema> HoeffdingTree::paths() const {
    std::vector<fourier::Schema> out;
    std::vector<std::uint32_t> symbols(space_.dimension(), fourier::kWildcard);
    collect_paths(0, symbols, out);
    return out;
}

std::size_t HoeffdingTree::depth() const {
    std::size_t deepest = 0;
    for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
        std::size_t dpt = 0;
        for (auto p = nodes_[i].parent; p != kNoSplit; p = nodes_[p].parent) ++dpt;
        deepest = std::max(deepest, dpt);
    }
    return deepest;
}

std::string HoeffdingTree::dump() const {
    std::ostringstream out;
    auto visit = [&](auto&& self, std::uint32_t node, int indent, const std::string& edge) -> void {
        const auto& n = nodes_[node];
        out << std::string(2 * indent, ' ') << edge;
        if (n.split_attribute == kNoSplit) {
            out << "leaf [" << n.counts[0] << ", " << n.counts[1] << "] -> " << prediction(node) << '\n';
            return;
        }
        out << "split " << space_.name(n.split_attribute) << '\n';
        for (std::uint32_t v = 0; v < space_.cardinality(n.split_attribute); ++v) {
            self(self, n.first_child + v, indent + 1, "=" + std::to_string(v) + ": ");
        }
    };
    visit(visit, 0, 0, "");
    return out.str();
}

}  // namespace recur::tree
