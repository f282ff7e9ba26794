#include "recur/fourier_oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace recur::fourier {

Spectrum dft_brute_force(const std::function<double(std::span<const Value>)>& f, const AttributeSpace& space) {
    const auto n = space.input_space_size();
    if (n > kMaxOracleSpace) throw std::length_error("input space too large for exhaustive transform");
    const auto d = space.dimension();

    // Mixed-radix layout: attribute d-1 varies fastest.
    std::vector<std::size_t> stride(d, 1);
    for (std::size_t m = d; m-- > 1;) stride[m - 1] = stride[m] * space.cardinality(m);

    std::vector<Coefficient> values(n);
    std::vector<Value> x(d, 0);
    for (std::size_t idx = 0; idx < n; ++idx) {
        auto rest = idx;
        for (std::size_t m = 0; m < d; ++m) {
            x[m] = static_cast<Value>(rest / stride[m]);
            rest %= stride[m];
        }
        values[idx] = f(x);
    }

    std::vector<Coefficient> next(n);
    for (std::size_t m = 0; m < d; ++m) {
        const auto lambda = space.cardinality(m);
        for (std::size_t idx = 0; idx < n; ++idx) {
            const auto jm = (idx / stride[m]) % lambda;
            const auto base = idx - jm * stride[m];
            Coefficient sum{0.0, 0.0};
            for (std::size_t xm = 0; xm < lambda; ++xm) {
                const double angle = 2.0 * std::numbers::pi * static_cast<double>(jm * xm) / lambda;
                sum += values[base + xm * stride[m]] * Coefficient{std::cos(angle), std::sin(angle)};
            }
            next[idx] = sum;
        }
        values.swap(next);
    }

    CoefficientMap coeffs;
    Digits j(d, 0);
    for (std::size_t idx = 0; idx < n; ++idx) {
        const auto w = values[idx] / static_cast<double>(n);
        if (std::abs(w) < kDropMagnitude) continue;
        auto rest = idx;
        for (std::size_t m = 0; m < d; ++m) {
            j[m] = static_cast<std::uint32_t>(rest / stride[m]);
            rest %= stride[m];
        }
        coeffs.emplace(j, w);
    }
    std::vector<std::size_t> all(d);
    for (std::size_t m = 0; m < d; ++m) all[m] = m;
    return Spectrum(space, std::move(all), std::move(coeffs));
}

}  // namespace recur::fourier
