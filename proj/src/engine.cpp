#include "recur/engine.hpp"

#include <limits>
#include <stdexcept>

#include "recur/fourier.hpp"

namespace recur::pool {

Engine::Engine(AttributeSpace space, EngineConfig config)
    : config_(config),
      forest_(std::move(space), config.node_budget, config.tree),
      pool_(config.pool.pool_size, config.detector) {
    config_.pool.validate();
    for (std::size_t i = 0; i < forest_.size(); ++i) tree_detectors_.push_back(drift::make_detector(config_.detector));
    std::mt19937_64 rng(config_.seed);
    current_ = {ClassifierRef::Kind::kTree, static_cast<std::size_t>(rng() % forest_.size())};
}

double Engine::accuracy(ClassifierRef c) const {
    return c.is_tree() ? tree_detectors_.at(c.index)->accuracy() : pool_.accuracy(c.index);
}

int Engine::classify(ClassifierRef c, std::span<const Value> x) const {
    return c.is_tree() ? forest_.tree(c.index).classify(x) : pool_.entry(c.index).classify(x);
}

ClassifierRef Engine::best_classifier() const {
    ClassifierRef best{ClassifierRef::Kind::kTree, 0};
    double best_accuracy = accuracy(best);
    for (std::size_t i = 1; i < forest_.size(); ++i) {
        const double a = tree_detectors_[i]->accuracy();
        if (a > best_accuracy) {
            best_accuracy = a;
            best = {ClassifierRef::Kind::kTree, i};
        }
    }
    for (std::size_t k = 0; k < pool_.size(); ++k) {
        const double a = pool_.accuracy(k);
        if (a > best_accuracy) {
            best_accuracy = a;
            best = {ClassifierRef::Kind::kEntry, k};
        }
    }
    return best;
}

fourier::Spectrum Engine::encode_tree(std::size_t tree_index) const {
    const auto& t = forest_.tree(tree_index);
    const auto paths = t.paths();
    return fourier::dft_from_tree(paths, t.space(), config_.pool.energy_threshold);
}

int Engine::step(const Record& r) {
    if (!forest_.space().contains(r.values) || r.label > 1) {
        throw std::invalid_argument("record outside the attribute space");
    }
    ++stats_.instances;
    ++since_drift_;

    // Test phase: nothing below may depend on r.label until every
    // classifier has made its prediction.
    tree_predictions_.resize(forest_.size());
    for (std::size_t i = 0; i < forest_.size(); ++i) tree_predictions_[i] = forest_.tree(i).classify(r.values);
    entry_predictions_.resize(pool_.size());
    for (std::size_t k = 0; k < pool_.size(); ++k) entry_predictions_[k] = pool_.entry(k).classify(r.values);
    const int emitted = current_.is_tree() ? tree_predictions_[current_.index] : entry_predictions_[current_.index];

    for (std::size_t k = 0; k < pool_.size(); ++k) {
        if (entry_predictions_[k] != emitted) pool_.add_disagreement(k);
    }

    const double source_accuracy = accuracy(current_);
    bool drift = false;
    tree_fired_.assign(forest_.size(), 0);
    for (std::size_t i = 0; i < forest_.size(); ++i) {
        if (tree_detectors_[i]->add(tree_predictions_[i] != r.label)) {
            tree_fired_[i] = 1;
            if (current_ == ClassifierRef{ClassifierRef::Kind::kTree, i}) drift = true;
        }
    }
    for (std::size_t k = 0; k < pool_.size(); ++k) {
        if (pool_.observe(k, entry_predictions_[k] != r.label) &&
            current_ == ClassifierRef{ClassifierRef::Kind::kEntry, k}) {
            drift = true;
        }
    }

    if (drift) on_drift(source_accuracy);

    if (config_.reset_tree_on_drift) {
        for (std::size_t i = 0; i < forest_.size(); ++i) {
            if (tree_fired_[i]) {
                forest_.reset_tree(i);
                ++stats_.tree_resets;
            }
        }
    }
    forest_.learn(r);
    return emitted;
}

void Engine::on_drift(double source_accuracy) {
    ++stats_.drifts;
    const auto variant = config_.pool.variant;
    if (variant != Variant::kCbdt && current_.is_tree()) {
        const auto best_entry = pool_.best_entry();
        const double pool_accuracy =
            best_entry ? pool_.accuracy(*best_entry) : -std::numeric_limits<double>::infinity();
        if (source_accuracy - pool_accuracy > config_.pool.tie_threshold) {
            auto candidate = encode_tree(current_.index);
            ++stats_.encodings;
            if (pool_.contains(candidate)) {
                ++stats_.duplicates;
            } else {
                MergeOutcome outcome;
                switch (variant) {
                    case Variant::kFct:
                        outcome = pool_.insert(candidate, source_accuracy);
                        break;
                    case Variant::kEp:
                        outcome = pool_.merge_or_insert(candidate, source_accuracy, since_drift_, config_.pool.alpha);
                        break;
                    case Variant::kEpa:
                        outcome =
                            pool_.merge_or_insert_by_accuracy(candidate, source_accuracy, config_.pool.tie_threshold);
                        break;
                    case Variant::kCbdt:
                        break;
                }
                if (outcome.merged) {
                    ++stats_.merges;
                } else {
                    ++stats_.inserts;
                }
                if (outcome.evicted) ++stats_.evictions;
            }
        } else {
            ++stats_.tie_skips;
        }
    }
    current_ = best_classifier();
    if (!current_.is_tree()) {
        pool_.mark_used(current_.index);
        ++stats_.reuse;
    }
    pool_.reset_disagreements();
    since_drift_ = 0;
}

}  // namespace recur::pool
