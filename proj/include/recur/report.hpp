#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "recur/prequential.hpp"

namespace recur::eval {

// Report CSV, one row per run, columns in this order:
//
//   name, variant, detector, pool_size, energy_threshold, tie_threshold,
//   alpha, seed, noise_rate, status, records, accuracy, accuracy_std,
//   segment_accuracy, concept_accuracy, avg_pool_kb, reuse_count,
//   drift_count, encodings, inserts, merges, evictions
//
// segment_accuracy and concept_accuracy are ';'-separated lists. With
// include_timing an instances_per_sec column is appended; it is the only
// column that varies between identical runs.

std::string report_header(bool include_timing = false);
std::string report_row(const RunReport& r, bool include_timing = false);
void write_report(std::ostream& out, std::span<const RunReport> reports, bool include_timing = false);

}  // namespace recur::eval
