#include "recur/report.hpp"

#include <cstdio>
#include <ostream>

namespace recur::eval {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string join(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out.push_back(';');
        out += num(values[i]);
    }
    return out;
}

// Keeps a field from breaking the row.
std::string field(std::string s) {
    for (auto& c : s) {
        if (c == ',' || c == '\n' || c == '\r') c = ' ';
    }
    return s;
}

}  // namespace

std::string report_header(bool include_timing) {
    std::string h =
        "name,variant,detector,pool_size,energy_threshold,tie_threshold,alpha,seed,noise_rate,status,records,"
        "accuracy,accuracy_std,segment_accuracy,concept_accuracy,avg_pool_kb,reuse_count,drift_count,encodings,"
        "inserts,merges,evictions";
    if (include_timing) h += ",instances_per_sec";
    return h;
}

std::string report_row(const RunReport& r, bool include_timing) {
    std::string row;
    auto add = [&row](const std::string& v) {
        if (!row.empty()) row.push_back(',');
        row += v;
    };
    add(field(r.name));
    add(r.variant);
    add(r.detector);
    add(std::to_string(r.pool_size));
    add(num(r.energy_threshold));
    add(num(r.tie_threshold));
    add(num(r.alpha));
    add(std::to_string(r.seed));
    add(r.noise_rate < 0.0 ? std::string() : num(r.noise_rate));
    add(field(r.status));
    add(std::to_string(r.records));
    add(num(r.accuracy));
    add(num(r.accuracy_std));
    add(join(r.segment_accuracy));
    add(join(r.concept_accuracy));
    add(num(r.avg_pool_kb));
    add(std::to_string(r.reuse_count));
    add(std::to_string(r.drift_count));
    add(std::to_string(r.encodings));
    add(std::to_string(r.inserts));
    add(std::to_string(r.merges));
    add(std::to_string(r.evictions));
    if (include_timing) add(num(r.instances_per_sec));
    return row;
}

void write_report(std::ostream& out, std::span<const RunReport> reports, bool include_timing) {
    out << report_header(include_timing) << '\n';
    for (const auto& r : reports) out << report_row(r, include_timing) << '\n';
}

}  // namespace recur::eval
