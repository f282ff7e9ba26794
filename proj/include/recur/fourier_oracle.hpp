#pragma once

#include <functional>
#include <span>

#include "recur/spectrum.hpp"

namespace recur::fourier {

/// Exhaustive reference transform: w_j = (1/N) sum_x f(x) psi_j(x) over every
/// input x of the space, N = product of cardinalities. Evaluates f at all N
/// inputs and sums one attribute at a time. Shares no code with the
/// schema-based encoder. Refuses spaces with N > 2^20.
Spectrum dft_brute_force(const std::function<double(std::span<const Value>)>& f, const AttributeSpace& space);

inline constexpr std::uint64_t kMaxOracleSpace = std::uint64_t{1} << 20;

}  // namespace recur::fourier
