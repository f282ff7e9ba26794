#include "recur/pool.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "recur/fourier.hpp"
#include "recur/spectrum_io.hpp"

namespace recur::pool {

Variant parse_variant(std::string_view text) {
    if (text == "cbdt") return Variant::kCbdt;
    if (text == "fct") return Variant::kFct;
    if (text == "ep") return Variant::kEp;
    if (text == "epa") return Variant::kEpa;
    throw std::invalid_argument("unknown variant '" + std::string(text) + "' (expected cbdt, fct, ep or epa)");
}

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::kCbdt: return "cbdt";
        case Variant::kFct: return "fct";
        case Variant::kEp: return "ep";
        case Variant::kEpa: return "epa";
    }
    return "?";
}

void PoolConfig::validate() const {
    if (pool_size < 1) throw std::invalid_argument("pool_size must be >= 1");
    if (!(energy_threshold > 0.0 && energy_threshold <= 1.0)) {
        throw std::invalid_argument("energy_threshold must lie in (0, 1]");
    }
    if (!(tie_threshold >= 0.0)) throw std::invalid_argument("tie_threshold must be >= 0");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
}

double EnsembleEntry::score(std::span<const Value> x) const {
    if (weight_sum <= 0.0) return 0.0;
    return spectrum.score(x) / weight_sum;
}

double structural_distance(std::uint64_t disagreements, std::uint64_t n_instances) {
    if (n_instances == 0) return 1.0;
    if (disagreements > n_instances) throw std::invalid_argument("more disagreements than instances");
    return static_cast<double>(disagreements) / static_cast<double>(n_instances);
}

double entry_memory_bytes(const fourier::Spectrum& s) {
    return static_cast<double>(s.size()) * (16.0 + static_cast<double>(s.space().dimension())) + 64.0;
}

SpectrumPool::SpectrumPool(std::size_t capacity, drift::DetectorConfig detector)
    : capacity_(capacity), detector_(detector) {
    if (capacity_ == 0) throw std::invalid_argument("pool capacity must be >= 1");
}

bool SpectrumPool::contains(const fourier::Spectrum& s) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const EnsembleEntry& e) {
                           return std::any_of(e.members.begin(), e.members.end(),
                                              [&](const fourier::Spectrum& m) { return m.same_coefficients(s); });
                       });
}

std::size_t SpectrumPool::evict() {
    std::size_t victim = 0;
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        const auto& v = entries_[victim];
        if (e.usage < v.usage || (e.usage == v.usage && e.sequence < v.sequence)) victim = i;
    }
    entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(victim));
    return victim;
}

MergeOutcome SpectrumPool::insert(const fourier::Spectrum& f, double a) {
    MergeOutcome out;
    if (entries_.size() >= capacity_) {
        evict();
        out.evicted = true;
    }
    EnsembleEntry e;
    e.spectrum = fourier::aggregate(fourier::Spectrum::empty(f.space(), f.attr_set()), f, a);
    e.weight_sum = a;
    e.weights = {a};
    e.members = {f};
    e.detector = drift::make_detector(detector_);
    e.sequence = next_sequence_++;
    entries_.push_back(std::move(e));
    out.index = entries_.size() - 1;
    return out;
}

void SpectrumPool::merge(std::size_t index, const fourier::Spectrum& f, double a) {
    auto& e = entries_.at(index);
    auto [target, addition] = fourier::align(e.spectrum, f);
    e.spectrum = fourier::aggregate(target, addition, a);
    e.weight_sum += a;
    e.weights.push_back(a);
    e.members.push_back(f);
}

MergeOutcome SpectrumPool::merge_or_insert(const fourier::Spectrum& f, double a, std::uint64_t n_instances,
                                           double alpha) {
    std::optional<std::size_t> closest;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const double dist = structural_distance(entries_[i].disagreements, n_instances);
        if (dist < best) {
            best = dist;
            closest = i;
        }
    }
    if (closest && best <= alpha) {
        merge(*closest, f, a);
        return {true, *closest, false};
    }
    return insert(f, a);
}

MergeOutcome SpectrumPool::merge_or_insert_by_accuracy(const fourier::Spectrum& f, double a, double tau) {
    std::optional<std::size_t> closest;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const double gap = std::abs(accuracy(i) - a);
        if (gap < best) {
            best = gap;
            closest = i;
        }
    }
    if (closest && best <= tau) {
        merge(*closest, f, a);
        return {true, *closest, false};
    }
    return insert(f, a);
}

std::optional<std::size_t> SpectrumPool::best_entry() const {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!best || accuracy(i) > accuracy(*best)) best = i;
    }
    return best;
}

bool SpectrumPool::observe(std::size_t i, bool error) { return entries_.at(i).detector->add(error); }

void SpectrumPool::reset_disagreements() {
    for (auto& e : entries_) e.disagreements = 0;
}

double SpectrumPool::memory_kb() const {
    double bytes = 0.0;
    for (const auto& e : entries_) bytes += entry_memory_bytes(e.spectrum);
    return bytes / 1024.0;
}

void SpectrumPool::write(std::ostream& out) const {
    out << "pool\n";
    out << "entries " << entries_.size() << '\n';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        out << "entry " << i << '\n';
        out << "weight_sum " << fourier::format_real(e.weight_sum) << '\n';
        out << "usage " << e.usage << '\n';
        out << "merges " << (e.weights.size() - 1) << '\n';
        fourier::write_spectrum(out, e.spectrum);
    }
}

}  // namespace recur::pool
