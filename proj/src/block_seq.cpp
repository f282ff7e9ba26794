#include "recur/block_seq.hpp"

#include <cmath>
#include <stdexcept>

namespace recur::drift {

BlockSeq::BlockSeq(double significance, std::uint32_t block_size, std::uint32_t reservoir_capacity)
    : significance_(significance), block_size_(block_size), max_blocks_(reservoir_capacity / block_size) {
    if (!(significance > 0.0 && significance < 1.0)) throw std::invalid_argument("significance must lie in (0, 1)");
    if (block_size == 0 || max_blocks_ == 0) throw std::invalid_argument("reservoir must hold at least one block");
}

void BlockSeq::reset() {
    reservoir_.clear();
    reservoir_outcomes_ = 0;
    reservoir_errors_ = 0;
    block_outcomes_ = 0;
    block_errors_ = 0;
}

double BlockSeq::accuracy() const {
    const auto n = width();
    if (n == 0) return 0.5;
    return 1.0 - static_cast<double>(reservoir_errors_ + block_errors_) / static_cast<double>(n);
}

double BlockSeq::threshold(double reservoir_n, double block_n, double pooled_mean) const {
    const double variance = pooled_mean * (1.0 - pooled_mean);
    const double m = 1.0 / reservoir_n + 1.0 / block_n;
    const double log_term = std::log(4.0 / significance_);
    return std::sqrt(2.0 * variance * m * log_term) + 2.0 / 3.0 * m * log_term;
}

bool BlockSeq::add(bool error) {
    ++block_outcomes_;
    if (error) ++block_errors_;
    if (block_outcomes_ < block_size_) return false;

    bool change = false;
    if (reservoir_outcomes_ > 0) {
        const double nr = static_cast<double>(reservoir_outcomes_);
        const double nb = static_cast<double>(block_outcomes_);
        const double mr = static_cast<double>(reservoir_errors_) / nr;
        const double mb = static_cast<double>(block_errors_) / nb;
        const double pooled = static_cast<double>(reservoir_errors_ + block_errors_) / (nr + nb);
        change = std::abs(mb - mr) > threshold(nr, nb, pooled);
    }
    if (change) {
        ++detections_;
        reservoir_.clear();
        reservoir_outcomes_ = 0;
        reservoir_errors_ = 0;
    }
    reservoir_.push_back(block_errors_);
    reservoir_outcomes_ += block_outcomes_;
    reservoir_errors_ += block_errors_;
    while (reservoir_.size() > max_blocks_) {
        reservoir_errors_ -= reservoir_.front();
        reservoir_outcomes_ -= block_size_;
        reservoir_.pop_front();
    }
    block_outcomes_ = 0;
    block_errors_ = 0;
    return change;
}

}  // namespace recur::drift
