#include "recur/adwin.hpp"

#include <cmath>
#include <stdexcept>

namespace recur::drift {

namespace {

constexpr double kMinSubWindow = 5.0;
constexpr std::uint64_t kMinWindow = 10;

}  // namespace

Adwin::Adwin(double delta, std::size_t max_buckets, std::uint32_t clock)
    : delta_(delta), max_buckets_(max_buckets), clock_(clock) {
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("adwin delta must lie in (0, 1)");
    if (max_buckets < 2 || clock == 0) throw std::invalid_argument("bad adwin bucket or clock settings");
}

void Adwin::reset() {
    rows_.clear();
    width_ = 0;
    total_ = 0.0;
    variance_ = 0.0;
    ticks_ = 0;
}

double Adwin::accuracy() const { return width_ == 0 ? 0.5 : 1.0 - mean(); }

bool Adwin::add(bool error) {
    insert(error ? 1.0 : 0.0);
    compress();
    const bool change = detect_change();
    if (change) ++detections_;
    return change;
}

void Adwin::insert(double value) {
    ++width_;
    if (width_ > 1) {
        const double prev_mean = total_ / static_cast<double>(width_ - 1);
        variance_ += static_cast<double>(width_ - 1) * (value - prev_mean) * (value - prev_mean) /
                     static_cast<double>(width_);
    }
    total_ += value;
    if (rows_.empty()) rows_.emplace_back();
    rows_[0].push_back({value, 0.0});
}

void Adwin::compress() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() <= max_buckets_) break;
        if (i + 1 == rows_.size()) rows_.emplace_back();
        const double n = std::ldexp(1.0, static_cast<int>(i));
        const auto a = rows_[i][0];
        const auto b = rows_[i][1];
        const double ua = a.total / n;
        const double ub = b.total / n;
        const double inc = n * n * (ua - ub) * (ua - ub) / (2.0 * n);
        rows_[i + 1].push_back({a.total + b.total, a.variance + b.variance + inc});
        rows_[i].pop_front();
        rows_[i].pop_front();
    }
}

void Adwin::drop_oldest() {
    auto row = rows_.size();
    while (row > 0 && rows_[row - 1].empty()) --row;
    if (row == 0) return;
    --row;
    const auto b = rows_[row].front();
    rows_[row].pop_front();
    const double n = std::ldexp(1.0, static_cast<int>(row));
    width_ -= static_cast<std::uint64_t>(n);
    total_ -= b.total;
    if (width_ == 0) {
        total_ = 0.0;
        variance_ = 0.0;
    } else {
        const double w = static_cast<double>(width_);
        const double u = b.total / n;
        const double mu = total_ / w;
        variance_ -= b.variance + n * w * (u - mu) * (u - mu) / (n + w);
        if (variance_ < 0.0) variance_ = 0.0;
    }
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

bool Adwin::cut(double n0, double n1, double u0, double u1) const {
    const double n = static_cast<double>(width_);
    const double dd = std::log(2.0 * std::log(n) / delta_);
    const double v = variance_ / n;
    const double m = 1.0 / (n0 - kMinSubWindow + 1.0) + 1.0 / (n1 - kMinSubWindow + 1.0);
    const double eps = std::sqrt(2.0 * m * v * dd) + 2.0 / 3.0 * dd * m;
    return std::abs(u0 / n0 - u1 / n1) > eps;
}

bool Adwin::detect_change() {
    ++ticks_;
    if (ticks_ % clock_ != 0 || width_ <= kMinWindow) return false;
    bool changed = false;
    bool shrink = true;
    while (shrink && width_ > kMinWindow) {
        shrink = false;
        double n0 = 0.0;
        double n1 = static_cast<double>(width_);
        double u0 = 0.0;
        double u1 = total_;
        // Oldest buckets first: W0 grows from the old end of the window.
        for (std::size_t r = rows_.size(); r-- > 0 && !shrink;) {
            const double n = std::ldexp(1.0, static_cast<int>(r));
            for (const auto& b : rows_[r]) {
                n0 += n;
                n1 -= n;
                u0 += b.total;
                u1 -= b.total;
                if (n1 <= 0.0) break;
                if (n0 > kMinSubWindow + 1.0 && n1 > kMinSubWindow + 1.0 && cut(n0, n1, u0, u1)) {
                    shrink = true;
                    changed = true;
                    break;
                }
            }
        }
        if (shrink) drop_oldest();
    }
    return changed;
}

}  // namespace recur::drift
