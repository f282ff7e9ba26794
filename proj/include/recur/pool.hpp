#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "recur/drift_detector.hpp"
#include "recur/spectrum.hpp"

namespace recur::pool {

/// cbdt runs the forest alone; fct stores every encoded tree as its own
/// spectrum; ep merges by structural similarity; epa merges by accuracy.
enum class Variant { kCbdt, kFct, kEp, kEpa };

Variant parse_variant(std::string_view text);
std::string_view to_string(Variant v);

struct PoolConfig {
    Variant variant = Variant::kEp;
    std::size_t pool_size = 10;
    double energy_threshold = 0.95;
    double tie_threshold = 0.01;  // tau
    double alpha = 0.1;           // max structural distance for a merge

    void validate() const;
};

/// A pooled (possibly aggregated) spectrum. The stored coefficients are
/// sum_i A_i * s_i; scores are normalised by weight_sum = sum_i A_i.
struct EnsembleEntry {
    fourier::Spectrum spectrum;
    double weight_sum = 0.0;
    std::vector<double> weights;  // every A_i folded into this entry
    std::vector<fourier::Spectrum> members;  // the unscaled s_i, for the duplicate check
    std::unique_ptr<drift::DriftDetector> detector;
    std::uint64_t disagreements = 0;  // vs the current best classifier since the last drift point
    std::uint64_t usage = 0;          // times selected as best classifier at a drift point
    std::uint64_t sequence = 0;       // insertion order, for eviction ties

    double score(std::span<const Value> x) const;
    int classify(std::span<const Value> x) const { return fourier::predict_label(score(x)); }
};

/// disagreements / n_instances; 1.0 when no instance has been seen.
double structural_distance(std::uint64_t disagreements, std::uint64_t n_instances);

/// Model-based size of one entry: coefficients * (16 bytes + one digit byte
/// per attribute of the space) + 64 bytes of entry overhead.
double entry_memory_bytes(const fourier::Spectrum& s);

struct MergeOutcome {
    bool merged = false;
    std::size_t index = 0;
    bool evicted = false;
};

/// Bounded repository of ensemble spectra. Stored coefficients change only
/// through merges.
class SpectrumPool {
  public:
    SpectrumPool(std::size_t capacity, drift::DetectorConfig detector);

    std::size_t size() const { return entries_.size(); }
    std::size_t capacity() const { return capacity_; }
    bool empty() const { return entries_.empty(); }
    const EnsembleEntry& entry(std::size_t i) const { return entries_.at(i); }

    /// True when a spectrum with exactly this attribute set and these
    /// coefficients has already been folded into some entry.
    bool contains(const fourier::Spectrum& s) const;

    /// Adds a fresh entry A * f with weight_sum A. When full, the entry with
    /// the lowest usage (oldest on ties) is evicted first. Returns the index
    /// of the new entry and whether an eviction happened.
    MergeOutcome insert(const fourier::Spectrum& f, double a);

    /// entry += A * f after expanding both to the union attribute set.
    void merge(std::size_t index, const fourier::Spectrum& f, double a);

    /// Structural variant: merge into the entry with the smallest
    /// disagreement distance when it is <= alpha, else insert.
    MergeOutcome merge_or_insert(const fourier::Spectrum& f, double a, std::uint64_t n_instances, double alpha);

    /// Accuracy variant: merge into the entry whose detector accuracy is
    /// nearest to a when |difference| <= tau, else insert.
    MergeOutcome merge_or_insert_by_accuracy(const fourier::Spectrum& f, double a, double tau);

    /// Index of the entry with the highest detector accuracy (lowest index on ties).
    std::optional<std::size_t> best_entry() const;

    double accuracy(std::size_t i) const { return entries_.at(i).detector->accuracy(); }

    /// Feeds one 0/1 outcome to entry i's detector.
    bool observe(std::size_t i, bool error);
    void add_disagreement(std::size_t i) { ++entries_.at(i).disagreements; }
    void reset_disagreements();
    void mark_used(std::size_t i) { ++entries_.at(i).usage; }

    double memory_kb() const;

    /// Pool dump: per entry weight_sum, usage, merges, then the spectrum.
    void write(std::ostream& out) const;

  private:
    std::size_t evict();

    std::size_t capacity_;
    drift::DetectorConfig detector_;
    std::vector<EnsembleEntry> entries_;
    std::uint64_t next_sequence_ = 0;
};

}  // namespace recur::pool
