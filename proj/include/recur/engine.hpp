#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "recur/drift_detector.hpp"
#include "recur/forest.hpp"
#include "recur/learner.hpp"
#include "recur/pool.hpp"

namespace recur::pool {

struct EngineConfig {
    PoolConfig pool;
    drift::DetectorConfig detector;
    std::size_t node_budget = tree::kDefaultNodeBudget;
    tree::TreeParams tree;
    std::uint64_t seed = 1;
    // Off: trees learn continuously. On: a forest tree whose own detector
    // fires is re-planted after the drift has been handled.
    bool reset_tree_on_drift = false;
};

/// Handle to either a forest tree or a pool entry.
struct ClassifierRef {
    enum class Kind { kTree, kEntry };
    Kind kind = Kind::kTree;
    std::size_t index = 0;

    bool is_tree() const { return kind == Kind::kTree; }
    bool operator==(const ClassifierRef&) const = default;
};

struct EngineStats {
    std::uint64_t instances = 0;
    std::uint64_t drifts = 0;          // drift points of the current best classifier
    std::uint64_t encodings = 0;       // spectra produced from trees
    std::uint64_t tie_skips = 0;       // best tree did not beat the pool by more than tau
    std::uint64_t duplicates = 0;      // encoded spectrum already pooled
    std::uint64_t inserts = 0;
    std::uint64_t merges = 0;
    std::uint64_t evictions = 0;
    std::uint64_t reuse = 0;           // pool entry chosen at a drift point
    std::uint64_t tree_resets = 0;
};

/// The forest + pool control loop. Every record is classified by every tree
/// and pool entry first, their detectors see the outcomes, and only then
/// does the forest learn the record. When the current best classifier's
/// detector fires, the drift handler decides whether to encode it, and
/// where to put the spectrum, before re-selecting the best classifier.
class Engine final : public StreamLearner {
  public:
    Engine(AttributeSpace space, EngineConfig config);

    int step(const Record& r) override;

    ClassifierRef current() const { return current_; }

    /// Highest detector accuracy across forest and pool; ties prefer trees,
    /// then the lowest index.
    ClassifierRef best_classifier() const;

    double accuracy(ClassifierRef c) const;
    int classify(ClassifierRef c, std::span<const Value> x) const;

    const tree::Forest& forest() const { return forest_; }
    const SpectrumPool& pool() const { return pool_; }
    const EngineConfig& config() const { return config_; }
    const EngineStats& stats() const { return stats_; }
    std::uint64_t instances_since_drift() const { return since_drift_; }

    double pool_memory_kb() const override { return pool_.memory_kb(); }
    std::uint64_t reuse_count() const override { return stats_.reuse; }
    std::uint64_t drift_count() const override { return stats_.drifts; }

    /// Spectrum of a forest tree at the configured energy threshold.
    fourier::Spectrum encode_tree(std::size_t tree_index) const;

  private:
    void on_drift(double source_accuracy);

    EngineConfig config_;
    tree::Forest forest_;
    std::vector<std::unique_ptr<drift::DriftDetector>> tree_detectors_;
    SpectrumPool pool_;
    ClassifierRef current_;
    std::uint64_t since_drift_ = 0;
    EngineStats stats_;
    std::vector<int> tree_predictions_;
    std::vector<int> entry_predictions_;
    std::vector<char> tree_fired_;
};

}  // namespace recur::pool
