#include "recur/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

#include "recur/fourier.hpp"

namespace recur::fourier {

std::size_t order(std::span<const std::uint32_t> j) {
    return static_cast<std::size_t>(std::count_if(j.begin(), j.end(), [](auto d) { return d != 0; }));
}

bool PartitionLess::operator()(const Digits& a, const Digits& b) const {
    const auto oa = order(a);
    const auto ob = order(b);
    if (oa != ob) return oa < ob;
    return a < b;
}

Spectrum::Spectrum(AttributeSpace space, std::vector<std::size_t> attr_set, CoefficientMap coefficients,
                   double energy_threshold)
    : space_(std::move(space)),
      attr_set_(std::move(attr_set)),
      coefficients_(std::move(coefficients)),
      energy_threshold_(energy_threshold) {
    if (!(energy_threshold_ > 0.0 && energy_threshold_ <= 1.0)) {
        throw std::invalid_argument("energy threshold must lie in (0, 1]");
    }
    for (std::size_t k = 0; k < attr_set_.size(); ++k) {
        if (attr_set_[k] >= space_.dimension()) throw std::invalid_argument("attribute set index out of range");
        if (k > 0 && attr_set_[k] <= attr_set_[k - 1]) {
            throw std::invalid_argument("attribute set must be strictly increasing");
        }
    }
    for (auto it = coefficients_.begin(); it != coefficients_.end();) {
        const auto& j = it->first;
        if (j.size() != attr_set_.size()) throw std::invalid_argument("partition length differs from attribute set");
        for (std::size_t k = 0; k < j.size(); ++k) {
            if (j[k] >= space_.cardinality(attr_set_[k])) throw std::invalid_argument("partition digit out of range");
        }
        if (std::abs(it->second) == 0.0) {
            it = coefficients_.erase(it);
        } else {
            ++it;
        }
    }
    compile();
}

Spectrum Spectrum::empty(AttributeSpace space, std::vector<std::size_t> attr_set) {
    return Spectrum(std::move(space), std::move(attr_set), {});
}

void Spectrum::compile() {
    terms_.clear();
    active_.clear();
    binary_ = true;
    for (auto m : attr_set_) binary_ = binary_ && space_.cardinality(m) == 2;
    terms_.reserve(coefficients_.size());
    for (const auto& [j, w] : coefficients_) {
        Term t;
        t.value = w;
        t.begin = static_cast<std::uint32_t>(active_.size());
        for (std::size_t k = 0; k < j.size(); ++k) {
            if (j[k] != 0) {
                const auto m = attr_set_[k];
                active_.push_back({static_cast<std::uint32_t>(m), j[k], space_.cardinality(m)});
            }
        }
        t.end = static_cast<std::uint32_t>(active_.size());
        terms_.push_back(t);
    }
}

Coefficient Spectrum::coefficient(std::span<const std::uint32_t> full) const {
    if (full.size() != space_.dimension()) throw std::invalid_argument("partition length differs from space");
    Digits local(attr_set_.size());
    std::size_t k = 0;
    for (std::size_t m = 0; m < full.size(); ++m) {
        if (k < attr_set_.size() && attr_set_[k] == m) {
            local[k++] = full[m];
        } else if (full[m] != 0) {
            return {0.0, 0.0};
        }
    }
    const auto it = coefficients_.find(local);
    return it == coefficients_.end() ? Coefficient{0.0, 0.0} : it->second;
}

Digits Spectrum::to_full(const Digits& local) const {
    Digits full(space_.dimension(), 0);
    for (std::size_t k = 0; k < attr_set_.size(); ++k) full[attr_set_[k]] = local[k];
    return full;
}

double Spectrum::score(std::span<const Value> x) const {
    if (x.size() != space_.dimension()) throw std::invalid_argument("assignment length differs from space");
    double total = 0.0;
    if (binary_) {
        for (const auto& t : terms_) {
            unsigned parity = 0;
            for (auto a = t.begin; a < t.end; ++a) parity ^= x[active_[a].attribute] & 1u;
            total += parity ? -t.value.real() : t.value.real();
        }
        return total;
    }
    for (const auto& t : terms_) {
        double turns = 0.0;
        for (auto a = t.begin; a < t.end; ++a) {
            const auto& ad = active_[a];
            turns += static_cast<double>((static_cast<std::uint64_t>(ad.digit) * x[ad.attribute]) % ad.cardinality) /
                     ad.cardinality;
        }
        const auto psi = unit_root(turns);
        // Re(w * conj(psi))
        total += t.value.real() * psi.real() + t.value.imag() * psi.imag();
    }
    return total;
}

int Spectrum::classify(std::span<const Value> x) const { return predict_label(score(x)); }

bool Spectrum::same_coefficients(const Spectrum& other) const {
    return attr_set_ == other.attr_set_ && coefficients_ == other.coefficients_;
}

bool Spectrum::operator==(const Spectrum& other) const {
    return space_ == other.space_ && energy_threshold_ == other.energy_threshold_ && same_coefficients(other);
}

}  // namespace recur::fourier
