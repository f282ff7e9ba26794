#pragma once

#include <span>
#include <string>
#include <vector>

#include "recur/config.hpp"
#include "recur/prequential.hpp"

namespace recur::eval {

/// Runs every config, in parallel when threads > 1. Results keep the input
/// order. A run that throws yields a row with status "failed: <reason>".
std::vector<RunReport> sweep(std::span<const RunConfig> configs, unsigned threads = 0);

/// Every *.cfg file in dir, sorted by file name.
std::vector<RunConfig> load_config_dir(const std::string& dir);

/// The sensitivity grid around a base config: variant {ep, fct} x noise
/// {0, 0.2, 0.3} x pool_size {1, 10} x detector {adwin, block-seq}.
std::vector<RunConfig> standard_grid(const RunConfig& base);

}  // namespace recur::eval
