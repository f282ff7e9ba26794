#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "recur/engine.hpp"

namespace recur::eval {

/// One evaluation run: engine settings plus where the stream comes from.
struct RunConfig {
    std::string name = "run";
    pool::EngineConfig engine;
    std::size_t segments = 10;

    // Stream source: a CSV file, or a schedule for the hyperplane generator.
    std::string stream;
    std::string schedule;
    std::optional<double> noise_rate;          // overrides the schedule's
    std::optional<std::uint64_t> stream_seed;  // overrides the schedule's
    std::string class_column = "class";
    std::uint32_t bins = 10;
    bool integer_codes = true;  // integer columns are codes, not binned

    void validate() const;
};

/// `key = value` lines; '#' starts a comment. Relative stream/schedule paths
/// are resolved against base_dir.
///
/// Keys: name, variant (cbdt|fct|ep|epa), pool_size, energy_threshold,
/// tie_threshold, alpha, seed, detector (adwin|block-seq),
/// drift_significance, segments, node_budget, grace_period,
/// split_confidence, split_tie_threshold, reset_trees_on_drift, stream,
/// schedule, noise_rate, stream_seed, class, bins, codes.
RunConfig parse_config(std::istream& in, const std::string& base_dir = "");
RunConfig load_config(const std::string& path);
void write_config(std::ostream& out, const RunConfig& c);

}  // namespace recur::eval
