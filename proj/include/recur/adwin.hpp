#pragma once

#include <deque>
#include <vector>

#include "recur/drift_detector.hpp"

namespace recur::drift {

/// Adaptive windowing: keeps a window of recent outcomes compressed into
/// exponential-histogram buckets and drops its oldest part whenever two
/// sub-windows have means that differ by more than a Bernstein-style bound.
class Adwin final : public DriftDetector {
  public:
    explicit Adwin(double delta = 0.01, std::size_t max_buckets = 5, std::uint32_t clock = 32);

    bool add(bool error) override;
    double accuracy() const override;
    std::uint64_t width() const override { return width_; }
    void reset() override;
    std::unique_ptr<DriftDetector> clone() const override { return std::make_unique<Adwin>(*this); }
    std::string_view name() const override { return "adwin"; }

    double mean() const { return width_ == 0 ? 0.0 : total_ / static_cast<double>(width_); }

  private:
    struct Bucket {
        double total;
        double variance;  // sum of squared deviations inside the bucket
    };

    void insert(double value);
    void compress();
    bool detect_change();
    void drop_oldest();
    bool cut(double n0, double n1, double u0, double u1) const;

    double delta_;
    std::size_t max_buckets_;
    std::uint32_t clock_;
    std::uint64_t ticks_ = 0;
    // rows_[i] holds buckets of 2^i outcomes, oldest at the front.
    std::vector<std::deque<Bucket>> rows_;
    std::uint64_t width_ = 0;
    double total_ = 0.0;
    double variance_ = 0.0;
};

}  // namespace recur::drift
