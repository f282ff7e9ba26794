#include "recur/forest.hpp"

#include <stdexcept>

namespace recur::tree {

Forest::Forest(AttributeSpace space, std::size_t node_budget, TreeParams params) : budget_(node_budget) {
    const auto d = space.dimension();
    if (d == 0) throw std::invalid_argument("forest needs at least one attribute");
    if (node_budget < d) throw std::invalid_argument("node budget is smaller than the number of attributes");
    trees_.reserve(d);
    for (std::size_t m = 0; m < d; ++m) {
        trees_.emplace_back(space, m, params);
        splits_ += trees_.back().split_count();
    }
}

std::size_t Forest::learn(const Record& r) {
    if (!space().contains(r.values) || r.label > 1) {
        ++rejected_;
        return 0;
    }
    std::size_t made = 0;
    for (auto& t : trees_) {
        if (t.learn(r, splits_ < budget_) == LearnOutcome::kSplit) {
            ++splits_;
            ++made;
        }
    }
    return made;
}

void Forest::reset_tree(std::size_t i) {
    auto& t = trees_.at(i);
    splits_ -= t.split_count();
    t.reset();
    splits_ += t.split_count();
}

}  // namespace recur::tree
