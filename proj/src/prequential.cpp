#include "recur/prequential.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "recur/engine.hpp"
#include "recur/loaders.hpp"

namespace recur::eval {

double RunReport::mean_segment_accuracy() const {
    if (segment_accuracy.empty()) return 0.0;
    double s = 0.0;
    for (double a : segment_accuracy) s += a;
    return s / static_cast<double>(segment_accuracy.size());
}

RunReport prequential_run(StreamLearner& learner, std::span<const Record> records, std::size_t segments,
                          std::span<const stream::Segment> schedule_segments) {
    if (records.empty()) throw std::invalid_argument("empty stream");
    if (segments == 0) throw std::invalid_argument("segments must be >= 1");
    if (records.size() < segments) throw std::invalid_argument("stream shorter than the number of segments");
    const auto n = records.size();

    RunReport report;
    report.records = n;
    std::vector<std::uint64_t> seg_correct(segments, 0);
    std::vector<std::uint64_t> seg_total(segments, 0);

    std::vector<std::uint64_t> concept_correct(schedule_segments.size(), 0);
    std::vector<std::uint64_t> concept_total(schedule_segments.size(), 0);
    std::size_t concept_index = 0;
    std::uint64_t concept_end = schedule_segments.empty() ? 0 : schedule_segments[0].length;

    double memory_sum = 0.0;
    std::uint64_t memory_samples = 0;

    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < n; ++i) {
        const int prediction = learner.step(records[i]);
        const bool hit = prediction == records[i].label;
        // Division k covers [k*n/S, (k+1)*n/S).
        const auto seg = static_cast<std::size_t>((static_cast<std::uint64_t>(i) * segments) / n);
        ++seg_total[seg];
        if (hit) {
            ++seg_correct[seg];
            ++report.correct;
        }
        if (!schedule_segments.empty()) {
            while (i >= concept_end && concept_index + 1 < schedule_segments.size()) {
                ++concept_index;
                concept_end += schedule_segments[concept_index].length;
            }
            if (i < concept_end) {
                ++concept_total[concept_index];
                if (hit) ++concept_correct[concept_index];
            }
        }
        if ((i + 1) % kMemorySampleInterval == 0) {
            memory_sum += learner.pool_memory_kb();
            ++memory_samples;
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (memory_samples == 0) {
        memory_sum = learner.pool_memory_kb();
        memory_samples = 1;
    }

    report.accuracy = static_cast<double>(report.correct) / static_cast<double>(n);
    report.segment_accuracy.resize(segments);
    for (std::size_t k = 0; k < segments; ++k) {
        report.segment_accuracy[k] = static_cast<double>(seg_correct[k]) / static_cast<double>(seg_total[k]);
    }
    const double mean = report.mean_segment_accuracy();
    double var = 0.0;
    for (double a : report.segment_accuracy) var += (a - mean) * (a - mean);
    report.accuracy_std = std::sqrt(var / static_cast<double>(segments));
    for (std::size_t k = 0; k < concept_total.size(); ++k) {
        report.concept_accuracy.push_back(
            concept_total[k] == 0 ? 0.0 : static_cast<double>(concept_correct[k]) / static_cast<double>(concept_total[k]));
    }
    report.avg_pool_kb = memory_sum / static_cast<double>(memory_samples);
    report.instances_per_sec = seconds > 0.0 ? static_cast<double>(n) / seconds : 0.0;
    report.reuse_count = learner.reuse_count();
    report.drift_count = learner.drift_count();
    return report;
}

StreamData load_stream(const RunConfig& config) {
    StreamData data;
    if (!config.stream.empty()) {
        const auto& path = config.stream;
        stream::LoadedStream loaded;
        if (path.size() >= 5 && path.substr(path.size() - 5) == ".arff") {
            loaded = stream::load_arff(path, config.class_column == "class" ? "" : config.class_column, config.bins);
        } else {
            loaded = stream::load_csv(path, {config.class_column, config.bins, config.integer_codes});
        }
        data.space = std::move(loaded.space);
        data.records = std::move(loaded.records);
        return data;
    }
    if (config.schedule.empty()) throw std::invalid_argument("config names neither a stream nor a schedule");
    auto schedule = stream::load_schedule(config.schedule);
    if (config.noise_rate) schedule.noise_rate = *config.noise_rate;
    if (config.stream_seed) schedule.seed = *config.stream_seed;
    data.space = schedule.space();
    data.records = stream::generate(schedule);
    data.segments = schedule.segments;
    data.noise_rate = schedule.noise_rate;
    return data;
}

RunReport prequential_run(const RunConfig& config, const StreamData& data, std::ostream* pool_dump) {
    config.validate();
    pool::Engine engine(data.space, config.engine);
    auto report = prequential_run(engine, data.records, config.segments, data.segments);
    const auto& e = config.engine;
    report.name = config.name;
    report.variant = std::string(pool::to_string(e.pool.variant));
    report.detector = std::string(drift::to_string(e.detector.kind));
    report.pool_size = e.pool.pool_size;
    report.energy_threshold = e.pool.energy_threshold;
    report.tie_threshold = e.pool.tie_threshold;
    report.alpha = e.pool.alpha;
    report.seed = e.seed;
    report.noise_rate = data.noise_rate;
    const auto& stats = engine.stats();
    report.encodings = stats.encodings;
    report.inserts = stats.inserts;
    report.merges = stats.merges;
    report.evictions = stats.evictions;
    if (pool_dump != nullptr) engine.pool().write(*pool_dump);
    return report;
}

RunReport run_config(const RunConfig& config) { return prequential_run(config, load_stream(config)); }

}  // namespace recur::eval
