#pragma once

#include <deque>

#include "recur/drift_detector.hpp"

namespace recur::drift {

/// Sequential block detector. Outcomes are grouped into fixed-size blocks;
/// each completed block is compared with a reservoir of earlier blocks using
/// a Bernstein bound on the difference of means. On a change the reservoir
/// is replaced by the block that triggered it.
///
/// This is a stand-in for SeqDrift2 with parameters of our own choosing
/// (block 200, reservoir 5000 outcomes); it is not a reimplementation.
class BlockSeq final : public DriftDetector {
  public:
    explicit BlockSeq(double significance = 0.01, std::uint32_t block_size = 200,
                      std::uint32_t reservoir_capacity = 5000);

    bool add(bool error) override;
    double accuracy() const override;
    std::uint64_t width() const override { return reservoir_outcomes_ + block_outcomes_; }
    void reset() override;
    std::unique_ptr<DriftDetector> clone() const override { return std::make_unique<BlockSeq>(*this); }
    std::string_view name() const override { return "block-seq"; }

    /// Bound on |mean(block) - mean(reservoir)| under no change.
    double threshold(double reservoir_n, double block_n, double pooled_mean) const;

  private:
    double significance_;
    std::uint32_t block_size_;
    std::uint32_t max_blocks_;
    std::deque<std::uint32_t> reservoir_;  // error count per stored block
    std::uint64_t reservoir_outcomes_ = 0;
    std::uint64_t reservoir_errors_ = 0;
    std::uint32_t block_outcomes_ = 0;
    std::uint32_t block_errors_ = 0;
};

}  // namespace recur::drift
