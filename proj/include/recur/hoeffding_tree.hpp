#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "recur/attribute_space.hpp"
#include "recur/fourier.hpp"
#include "recur/record.hpp"

namespace recur::tree {

struct TreeParams {
    double split_confidence = 1e-7;  // delta in the Hoeffding bound
    std::uint32_t grace_period = 200;
    double tie_threshold = 0.05;
};

enum class LearnOutcome { kLearned, kSplit, kRejected };

/// Incrementally grown decision tree over discrete attributes with a fixed
/// root split. Leaves predict their majority class (ties: 0); an empty leaf
/// defers to the nearest ancestor that has seen data, and to class 0 when
/// nothing has been seen.
class HoeffdingTree {
  public:
    HoeffdingTree(AttributeSpace space, std::size_t root_attribute, TreeParams params = {});

    /// Routes the record to a leaf and updates statistics. When may_split is
    /// false the structure is left unchanged.
    LearnOutcome learn(const Record& r, bool may_split = true);

    int classify(std::span<const Value> x) const;

    /// One schema per leaf: path values fixed, wildcards elsewhere, label =
    /// the leaf's prediction.
    std::vector<fourier::Schema> paths() const;

    /// Back to a single root split with empty leaves.
    void reset();

    std::size_t root_attribute() const { return root_attribute_; }
    const AttributeSpace& space() const { return space_; }
    const TreeParams& params() const { return params_; }

    /// Internal (split) nodes; this is what the forest budget counts.
    std::size_t split_count() const { return splits_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t leaf_count() const { return nodes_.size() - splits_; }
    std::size_t depth() const;
    /// Records learned since construction or the last reset().
    std::uint64_t instances_seen() const { return seen_; }
    std::uint64_t rejected() const { return rejected_; }

    /// Indented text, one node per line. Debugging aid only.
    std::string dump() const;

    /// Number of records routed to the leaf reached by x since that leaf was
    /// created, and its class counts.
    std::array<std::uint64_t, 2> leaf_counts(std::span<const Value> x) const;

  private:
    static constexpr std::uint32_t kNoSplit = 0xffffffff;

    struct Node {
        std::uint32_t split_attribute = kNoSplit;
        std::uint32_t parent = kNoSplit;
        std::uint32_t first_child = 0;  // children are contiguous
        std::array<std::uint64_t, 2> counts{};
        // Leaf only: per (attribute, value, class) counts, and records since
        // the last split attempt.
        std::vector<std::uint32_t> stats;
        std::uint32_t since_attempt = 0;
    };

    std::uint32_t add_leaf(std::uint32_t parent);
    void split(std::uint32_t leaf, std::uint32_t attribute);
    bool try_split(std::uint32_t leaf);
    std::uint32_t leaf_for(std::span<const Value> x) const;
    int prediction(std::uint32_t node) const;
    void collect_paths(std::uint32_t node, std::vector<std::uint32_t>& symbols,
                       std::vector<fourier::Schema>& out) const;

    AttributeSpace space_;
    std::size_t root_attribute_;
    TreeParams params_;
    std::vector<std::size_t> offsets_;  // into Node::stats, per attribute
    std::size_t stats_size_ = 0;
    std::vector<Node> nodes_;
    std::size_t splits_ = 0;
    std::uint64_t seen_ = 0;
    std::uint64_t rejected_ = 0;
};

/// Information gain of splitting class counts into per-value class counts.
double information_gain(const std::array<std::uint64_t, 2>& parent,
                        std::span<const std::array<std::uint64_t, 2>> branches);

/// sqrt(ln(1/delta) / (2n)) for a unit-range merit.
double hoeffding_bound(double delta, double n);

}  // namespace recur::tree
