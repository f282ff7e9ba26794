#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "recur/attribute_space.hpp"

namespace recur::fourier {

/// Partition index j: one digit per attribute of the spectrum's local
/// attribute set, digit m in [0, cardinality of that attribute).
using Digits = std::vector<std::uint32_t>;
using Coefficient = std::complex<double>;

/// Number of nonzero digits.
std::size_t order(std::span<const std::uint32_t> j);

/// Orders partitions by (order, lexicographic digits).
struct PartitionLess {
    bool operator()(const Digits& a, const Digits& b) const;
};

using CoefficientMap = std::map<Digits, Coefficient, PartitionLess>;

/// Coefficients with a smaller magnitude are dropped after arithmetic.
inline constexpr double kDropMagnitude = 1e-12;

/// Sparse Fourier spectrum over a local attribute set.
///
/// Partition keys hold one digit per entry of attr_set(); attributes outside
/// the set implicitly carry digit 0. The spectrum is immutable once built;
/// all transforms return new values.
class Spectrum {
  public:
    Spectrum() = default;
    Spectrum(AttributeSpace space, std::vector<std::size_t> attr_set, CoefficientMap coefficients,
             double energy_threshold = 1.0);

    /// A spectrum with no coefficients, f == 0.
    static Spectrum empty(AttributeSpace space, std::vector<std::size_t> attr_set);

    const AttributeSpace& space() const { return space_; }
    const std::vector<std::size_t>& attr_set() const { return attr_set_; }
    const CoefficientMap& coefficients() const { return coefficients_; }
    double energy_threshold() const { return energy_threshold_; }
    std::size_t size() const { return coefficients_.size(); }
    bool empty() const { return coefficients_.empty(); }

    /// Coefficient for a full-length partition (one digit per attribute of
    /// space()). Zero when the partition uses attributes outside attr_set().
    Coefficient coefficient(std::span<const std::uint32_t> full) const;

    /// Full-length partition for a local key.
    Digits to_full(const Digits& local) const;

    /// Re( sum_j w_j * conj(psi_j(x)) ) for a complete assignment x over space().
    double score(std::span<const Value> x) const;

    /// score(x) >= 0.5 ? 1 : 0.
    int classify(std::span<const Value> x) const;

    /// Same attribute set and bit-identical coefficients.
    bool same_coefficients(const Spectrum& other) const;

    bool operator==(const Spectrum& other) const;

  private:
    struct Term {
        Coefficient value;
        std::uint32_t begin = 0;  // into active_
        std::uint32_t end = 0;
    };
    struct ActiveDigit {
        std::uint32_t attribute;
        std::uint32_t digit;
        std::uint32_t cardinality;
    };

    void compile();

    AttributeSpace space_;
    std::vector<std::size_t> attr_set_;
    CoefficientMap coefficients_;
    double energy_threshold_ = 1.0;

    // Flattened nonzero digits for fast inverse evaluation.
    std::vector<Term> terms_;
    std::vector<ActiveDigit> active_;
    bool binary_ = true;
};

/// Decision rule on inverse-transform scores; a score of exactly 0.5 is class 1.
inline int predict_label(double score) { return score >= 0.5 ? 1 : 0; }

}  // namespace recur::fourier
