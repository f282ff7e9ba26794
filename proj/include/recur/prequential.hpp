#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "recur/config.hpp"
#include "recur/hyperplane.hpp"
#include "recur/learner.hpp"

namespace recur::eval {

inline constexpr std::uint64_t kMemorySampleInterval = 1000;

struct RunReport {
    std::string name;
    std::string status = "ok";

    // Config echo.
    std::string variant;
    std::string detector;
    std::size_t pool_size = 0;
    double energy_threshold = 0.0;
    double tie_threshold = 0.0;
    double alpha = 0.0;
    std::uint64_t seed = 0;
    double noise_rate = -1.0;  // -1 when the stream is not generated

    std::uint64_t records = 0;
    std::uint64_t correct = 0;
    double accuracy = 0.0;      // over the whole stream
    double accuracy_std = 0.0;  // population std over segment_accuracy
    std::vector<double> segment_accuracy;  // equal-size stream divisions
    std::vector<double> concept_accuracy;  // one per schedule segment, when known
    double avg_pool_kb = 0.0;
    double instances_per_sec = 0.0;
    std::uint64_t reuse_count = 0;
    std::uint64_t drift_count = 0;
    std::uint64_t encodings = 0;
    std::uint64_t inserts = 0;
    std::uint64_t merges = 0;
    std::uint64_t evictions = 0;

    double mean_segment_accuracy() const;
};

/// Test-then-train over the records. Accuracy counts the learner's step()
/// predictions; pool memory is sampled every kMemorySampleInterval records
/// (or once at the end of a shorter stream) and averaged. When schedule
/// segments are given, accuracy is also reported per segment.
RunReport prequential_run(StreamLearner& learner, std::span<const Record> records, std::size_t segments,
                          std::span<const stream::Segment> schedule_segments = {});

/// A loaded or generated stream with its schedule segments (empty for files).
struct StreamData {
    AttributeSpace space;
    std::vector<Record> records;
    std::vector<stream::Segment> segments;
    double noise_rate = -1.0;
};

StreamData load_stream(const RunConfig& config);

/// Builds the engine from the config and evaluates it on the stream. The
/// final pool is written to pool_dump when given.
RunReport prequential_run(const RunConfig& config, const StreamData& data, std::ostream* pool_dump = nullptr);

/// Loads the config's stream and runs it.
RunReport run_config(const RunConfig& config);

}  // namespace recur::eval
