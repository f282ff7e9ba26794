#pragma once

#include <cstdint>
#include <vector>

#include "recur/hoeffding_tree.hpp"

namespace recur::tree {

inline constexpr std::size_t kDefaultNodeBudget = 5000;

/// One Hoeffding tree rooted on each attribute, sharing a split-node budget.
/// Once the budget is spent no tree splits again; trees keep updating their
/// leaf statistics.
class Forest {
  public:
    Forest(AttributeSpace space, std::size_t node_budget = kDefaultNodeBudget, TreeParams params = {});

    std::size_t size() const { return trees_.size(); }
    const HoeffdingTree& tree(std::size_t i) const { return trees_.at(i); }
    const std::vector<HoeffdingTree>& trees() const { return trees_; }
    const AttributeSpace& space() const { return trees_.front().space(); }

    /// Every tree learns the record. Returns the number of splits made.
    std::size_t learn(const Record& r);

    /// Re-plants tree i as a single root split, returning its nodes to the budget.
    void reset_tree(std::size_t i);

    std::size_t node_count() const { return splits_; }
    std::size_t node_budget() const { return budget_; }
    bool budget_exhausted() const { return splits_ >= budget_; }
    std::uint64_t rejected() const { return rejected_; }

  private:
    std::vector<HoeffdingTree> trees_;
    std::size_t budget_;
    std::size_t splits_ = 0;
    std::uint64_t rejected_ = 0;
};

}  // namespace recur::tree
