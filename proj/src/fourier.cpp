#include "recur/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace recur::fourier {

namespace {

// Upper bound on partitions enumerated for a single path.
constexpr std::uint64_t kMaxPathPartitions = std::uint64_t{1} << 26;

void check_lengths(std::size_t a, std::size_t b) {
    if (a != b) throw std::invalid_argument("partition and assignment lengths differ");
}

}  // namespace

double Schema::weight(const AttributeSpace& space) const {
    check_lengths(symbols.size(), space.dimension());
    double w = 1.0;
    for (std::size_t m = 0; m < symbols.size(); ++m) {
        if (symbols[m] != kWildcard) w /= space.cardinality(m);
    }
    return w;
}

bool Schema::matches(std::span<const Value> x) const {
    if (x.size() != symbols.size()) return false;
    for (std::size_t m = 0; m < x.size(); ++m) {
        if (symbols[m] != kWildcard && symbols[m] != x[m]) return false;
    }
    return true;
}

Coefficient unit_root(double turns) {
    const double t = turns - std::floor(turns);
    if (t == 0.0) return {1.0, 0.0};
    if (t == 0.5) return {-1.0, 0.0};
    if (t == 0.25) return {0.0, 1.0};
    if (t == 0.75) return {0.0, -1.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * t);
}

Coefficient basis(std::span<const std::uint32_t> j, std::span<const Value> x, const AttributeSpace& space) {
    check_lengths(j.size(), x.size());
    check_lengths(j.size(), space.dimension());
    double turns = 0.0;
    for (std::size_t m = 0; m < j.size(); ++m) {
        if (x[m] == kWildcard) throw std::invalid_argument("basis requires a complete assignment");
        const auto lambda = space.cardinality(m);
        turns += static_cast<double>((static_cast<std::uint64_t>(j[m]) * x[m]) % lambda) / lambda;
    }
    return unit_root(turns);
}

Coefficient basis_sum(std::span<const std::uint32_t> j, const Schema& s, const AttributeSpace& space) {
    check_lengths(j.size(), s.symbols.size());
    check_lengths(j.size(), space.dimension());
    double multiplicity = 1.0;
    double turns = 0.0;
    for (std::size_t m = 0; m < j.size(); ++m) {
        const auto lambda = space.cardinality(m);
        if (s.symbols[m] == kWildcard) {
            // A nonzero digit under a wildcard sums a full cycle of roots of unity.
            if (j[m] != 0) return {0.0, 0.0};
            multiplicity *= lambda;
        } else {
            turns += static_cast<double>((static_cast<std::uint64_t>(j[m]) * s.symbols[m]) % lambda) / lambda;
        }
    }
    return multiplicity * unit_root(turns);
}

Spectrum dft_from_tree(std::span<const Schema> paths, const AttributeSpace& space, double energy_threshold_value) {
    if (!(energy_threshold_value > 0.0 && energy_threshold_value <= 1.0)) {
        throw std::invalid_argument("energy threshold must lie in (0, 1]");
    }
    const auto d = space.dimension();
    std::vector<bool> used(d, false);
    for (const auto& p : paths) {
        if (p.symbols.size() != d) throw std::invalid_argument("schema length differs from space");
        if (p.label != 0.0 && p.label != 1.0) throw std::invalid_argument("tree labels must be 0 or 1");
        for (std::size_t m = 0; m < d; ++m) {
            if (p.symbols[m] == kWildcard) continue;
            if (p.symbols[m] >= space.cardinality(m)) throw std::invalid_argument("schema value out of range");
            used[m] = true;
        }
    }
    std::vector<std::size_t> attr_set;
    for (std::size_t m = 0; m < d; ++m) {
        if (used[m]) attr_set.push_back(m);
    }
    const auto local = space.project(attr_set);
    double local_size = 1.0;
    for (const auto& a : local.attributes()) local_size *= a.cardinality;

    CoefficientMap coeffs;
    Schema projected;
    projected.symbols.resize(attr_set.size());
    std::vector<std::size_t> fixed;
    Digits j(attr_set.size(), 0);
    for (const auto& p : paths) {
        if (p.label == 0.0) continue;
        fixed.clear();
        std::uint64_t combos = 1;
        for (std::size_t k = 0; k < attr_set.size(); ++k) {
            projected.symbols[k] = p.symbols[attr_set[k]];
            if (projected.symbols[k] != kWildcard) {
                fixed.push_back(k);
                combos *= local.cardinality(k);
                if (combos > kMaxPathPartitions) throw std::length_error("tree path too deep to encode");
            }
        }
        projected.label = p.label;
        // Partitions with a nonzero digit under a wildcard vanish, so only the
        // fixed positions are enumerated.
        std::fill(j.begin(), j.end(), 0);
        while (true) {
            coeffs[j] += p.label * basis_sum(j, projected, local) / local_size;
            std::size_t pos = 0;
            for (; pos < fixed.size(); ++pos) {
                auto& digit = j[fixed[pos]];
                if (++digit < local.cardinality(fixed[pos])) break;
                digit = 0;
            }
            if (pos == fixed.size()) break;
        }
    }

    const bool binary = local.all_binary();
    for (auto it = coeffs.begin(); it != coeffs.end();) {
        if (binary) {
            if (std::abs(it->second.imag()) >= kDropMagnitude) {
                throw std::logic_error("binary spectrum acquired an imaginary component");
            }
            it->second.imag(0.0);
        }
        if (std::abs(it->second) < kDropMagnitude) {
            it = coeffs.erase(it);
        } else {
            ++it;
        }
    }
    Spectrum full(space, std::move(attr_set), std::move(coeffs));
    return energy_threshold(full, energy_threshold_value);
}

double total_energy(const Spectrum& s) {
    const auto& coeffs = s.coefficients();
    if (coeffs.empty()) return 0.0;
    const auto& [j, w] = *coeffs.begin();
    return order(j) == 0 ? w.real() : 0.0;
}

double spectral_energy(const Spectrum& s) {
    double e = 0.0;
    for (const auto& [j, w] : s.coefficients()) e += std::norm(w);
    return e;
}

Spectrum energy_threshold(const Spectrum& s, double et) {
    if (!(et > 0.0 && et <= 1.0)) throw std::invalid_argument("energy threshold must lie in (0, 1]");
    const double total = total_energy(s);
    CoefficientMap kept;
    if (total <= 0.0) {
        for (const auto& [j, w] : s.coefficients()) {
            if (order(j) == 0) kept.emplace(j, w);
        }
        return Spectrum(s.space(), s.attr_set(), std::move(kept), et);
    }
    if (et >= 1.0) return Spectrum(s.space(), s.attr_set(), s.coefficients(), et);

    const double target = et * total - kDropMagnitude * total;
    double cumulative = 0.0;
    auto it = s.coefficients().begin();
    const auto end = s.coefficients().end();
    while (it != end) {
        const auto current = order(it->first);
        for (; it != end && order(it->first) == current; ++it) {
            cumulative += std::norm(it->second);
            kept.emplace(it->first, it->second);
        }
        if (cumulative >= target) break;
    }
    return Spectrum(s.space(), s.attr_set(), std::move(kept), et);
}

Spectrum expand_spectrum(const Spectrum& s, std::span<const std::size_t> added) {
    if (added.empty()) return s;
    std::vector<std::size_t> extra(added.begin(), added.end());
    std::sort(extra.begin(), extra.end());
    if (std::adjacent_find(extra.begin(), extra.end()) != extra.end()) {
        throw std::invalid_argument("duplicate attributes in expansion");
    }
    const auto& current = s.attr_set();
    std::vector<std::size_t> merged;
    std::set_union(current.begin(), current.end(), extra.begin(), extra.end(), std::back_inserter(merged));
    if (merged.size() != current.size() + extra.size()) {
        throw std::invalid_argument("expansion overlaps the existing attribute set");
    }
    // Position of each old local digit inside the merged set.
    std::vector<std::size_t> slot(current.size());
    for (std::size_t k = 0, q = 0; q < merged.size(); ++q) {
        if (k < current.size() && merged[q] == current[k]) slot[k++] = q;
    }
    CoefficientMap coeffs;
    for (const auto& [j, w] : s.coefficients()) {
        Digits expanded(merged.size(), 0);
        for (std::size_t k = 0; k < j.size(); ++k) expanded[slot[k]] = j[k];
        coeffs.emplace(std::move(expanded), w);
    }
    return Spectrum(s.space(), std::move(merged), std::move(coeffs), s.energy_threshold());
}

std::pair<Spectrum, Spectrum> align(const Spectrum& a, const Spectrum& b) {
    if (!(a.space() == b.space())) throw std::invalid_argument("spectra are over different attribute spaces");
    std::vector<std::size_t> only_b;
    std::vector<std::size_t> only_a;
    std::set_difference(b.attr_set().begin(), b.attr_set().end(), a.attr_set().begin(), a.attr_set().end(),
                        std::back_inserter(only_b));
    std::set_difference(a.attr_set().begin(), a.attr_set().end(), b.attr_set().begin(), b.attr_set().end(),
                        std::back_inserter(only_a));
    return {expand_spectrum(a, only_b), expand_spectrum(b, only_a)};
}

Spectrum aggregate(const Spectrum& target, const Spectrum& addition, double weight) {
    if (!(target.space() == addition.space())) throw std::invalid_argument("spectra are over different attribute spaces");
    if (target.attr_set() != addition.attr_set()) {
        throw std::invalid_argument("spectra must be expanded to a common attribute set");
    }
    if (!(weight >= 0.0) || !std::isfinite(weight)) throw std::invalid_argument("aggregation weight must be >= 0");
    CoefficientMap coeffs = target.coefficients();
    if (weight > 0.0) {
        for (const auto& [j, w] : addition.coefficients()) coeffs[j] += weight * w;
    }
    std::erase_if(coeffs, [](const auto& kv) { return std::abs(kv.second) < kDropMagnitude; });
    const double et = target.empty() ? addition.energy_threshold()
                                     : std::min(target.energy_threshold(), addition.energy_threshold());
    return Spectrum(target.space(), target.attr_set(), std::move(coeffs), et);
}

}  // namespace recur::fourier
