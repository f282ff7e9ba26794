#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "recur/spectrum.hpp"

namespace recur::fourier {

inline constexpr std::uint32_t kWildcard = std::numeric_limits<std::uint32_t>::max();

/// A root-to-leaf path: fixed values along the path, kWildcard elsewhere.
struct Schema {
    std::vector<std::uint32_t> symbols;
    double label = 0.0;

    /// Fraction of the input space covered by the schema.
    double weight(const AttributeSpace& space) const;
    bool matches(std::span<const Value> x) const;
};

/// exp(2*pi*i*turns). Quarter turns are returned exactly.
Coefficient unit_root(double turns);

/// psi_j(x) = prod_m exp(2*pi*i * j_m * x_m / lambda_m).
Coefficient basis(std::span<const std::uint32_t> j, std::span<const Value> x, const AttributeSpace& space);

/// Sum of psi_j over every completion of the schema's wildcards, via the
/// wildcard shortcut: zero when j is nonzero under any wildcard, otherwise
/// (product of wildcard cardinalities) * psi_j on the fixed positions.
Coefficient basis_sum(std::span<const std::uint32_t> j, const Schema& s, const AttributeSpace& space);

/// Fourier spectrum of a binary-labeled tree given as its path schemata.
/// The transform runs over the tree's own attribute set (attributes fixed on
/// at least one path) and is then truncated by energy_threshold().
Spectrum dft_from_tree(std::span<const Schema> paths, const AttributeSpace& space, double energy_threshold);

/// Re(w_0): the total spectral energy of an unthresholded {0,1} spectrum.
double total_energy(const Spectrum& s);

/// sum_j |w_j|^2 over the stored coefficients.
double spectral_energy(const Spectrum& s);

/// Keeps whole orders 0..O, ascending, until the retained energy reaches
/// et * total_energy(s).
Spectrum energy_threshold(const Spectrum& s, double et);

/// Adds the given attributes (disjoint from attr_set) with digit 0.
Spectrum expand_spectrum(const Spectrum& s, std::span<const std::size_t> added);

/// Expands both spectra to the union of their attribute sets.
std::pair<Spectrum, Spectrum> align(const Spectrum& a, const Spectrum& b);

/// target + weight * addition, coefficient-wise. Both must share space and attr_set.
Spectrum aggregate(const Spectrum& target, const Spectrum& addition, double weight);

inline double inverse_classify(const Spectrum& s, std::span<const Value> x) { return s.score(x); }

}  // namespace recur::fourier
