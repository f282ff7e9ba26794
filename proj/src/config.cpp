#include "recur/config.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "recur/spectrum_io.hpp"

namespace recur::eval {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_real(const std::string& v) {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument("bad number '" + v + "'");
    return x;
}

std::uint64_t to_count(const std::string& v) {
    std::size_t used = 0;
    if (!v.empty() && v[0] == '-') throw std::invalid_argument("expected a non-negative integer, got '" + v + "'");
    const auto x = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument("bad integer '" + v + "'");
    return x;
}

bool to_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::invalid_argument("expected a boolean, got '" + v + "'");
}

std::string resolve(const std::string& base_dir, const std::string& path) {
    if (path.empty() || base_dir.empty() || std::filesystem::path(path).is_absolute()) return path;
    return (std::filesystem::path(base_dir) / path).string();
}

}  // namespace

void RunConfig::validate() const {
    engine.pool.validate();
    if (segments == 0) throw std::invalid_argument("segments must be >= 1");
    if (!(engine.detector.significance > 0.0 && engine.detector.significance < 1.0)) {
        throw std::invalid_argument("drift_significance must lie in (0, 1)");
    }
    if (noise_rate && !(*noise_rate >= 0.0 && *noise_rate < 1.0)) {
        throw std::invalid_argument("noise_rate must lie in [0, 1)");
    }
}

RunConfig parse_config(std::istream& in, const std::string& base_dir) {
    RunConfig c;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const auto line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        try {
            auto& e = c.engine;
            if (key == "name") c.name = value;
            else if (key == "variant") e.pool.variant = pool::parse_variant(value);
            else if (key == "pool_size") e.pool.pool_size = to_count(value);
            else if (key == "energy_threshold") e.pool.energy_threshold = to_real(value);
            else if (key == "tie_threshold") e.pool.tie_threshold = to_real(value);
            else if (key == "alpha") e.pool.alpha = to_real(value);
            else if (key == "seed") e.seed = to_count(value);
            else if (key == "detector") e.detector.kind = drift::parse_detector_kind(value);
            else if (key == "drift_significance") e.detector.significance = to_real(value);
            else if (key == "segments") c.segments = to_count(value);
            else if (key == "node_budget") e.node_budget = to_count(value);
            else if (key == "grace_period") e.tree.grace_period = static_cast<std::uint32_t>(to_count(value));
            else if (key == "split_confidence") e.tree.split_confidence = to_real(value);
            else if (key == "split_tie_threshold") e.tree.tie_threshold = to_real(value);
            else if (key == "reset_trees_on_drift") e.reset_tree_on_drift = to_bool(value);
            else if (key == "stream") c.stream = resolve(base_dir, value);
            else if (key == "schedule") c.schedule = resolve(base_dir, value);
            else if (key == "noise_rate") c.noise_rate = to_real(value);
            else if (key == "stream_seed") c.stream_seed = to_count(value);
            else if (key == "class") c.class_column = value;
            else if (key == "bins") c.bins = static_cast<std::uint32_t>(to_count(value));
            else if (key == "codes") c.integer_codes = to_bool(value);
            else throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const std::exception& ex) {
            throw std::runtime_error("config line " + std::to_string(line_no) + ": " + ex.what());
        }
    }
    c.validate();
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config '" + path + "'");
    auto c = parse_config(in, std::filesystem::path(path).parent_path().string());
    if (c.name == "run") c.name = std::filesystem::path(path).stem().string();
    return c;
}

void write_config(std::ostream& out, const RunConfig& c) {
    const auto& e = c.engine;
    out << "name = " << c.name << '\n';
    out << "variant = " << pool::to_string(e.pool.variant) << '\n';
    out << "pool_size = " << e.pool.pool_size << '\n';
    out << "energy_threshold = " << fourier::format_real(e.pool.energy_threshold) << '\n';
    out << "tie_threshold = " << fourier::format_real(e.pool.tie_threshold) << '\n';
    out << "alpha = " << fourier::format_real(e.pool.alpha) << '\n';
    out << "seed = " << e.seed << '\n';
    out << "detector = " << drift::to_string(e.detector.kind) << '\n';
    out << "drift_significance = " << fourier::format_real(e.detector.significance) << '\n';
    out << "segments = " << c.segments << '\n';
    out << "node_budget = " << e.node_budget << '\n';
    out << "grace_period = " << e.tree.grace_period << '\n';
    out << "split_confidence = " << fourier::format_real(e.tree.split_confidence) << '\n';
    out << "split_tie_threshold = " << fourier::format_real(e.tree.tie_threshold) << '\n';
    out << "reset_trees_on_drift = " << (e.reset_tree_on_drift ? "true" : "false") << '\n';
    if (!c.stream.empty()) out << "stream = " << c.stream << '\n';
    if (!c.schedule.empty()) out << "schedule = " << c.schedule << '\n';
    if (c.noise_rate) out << "noise_rate = " << fourier::format_real(*c.noise_rate) << '\n';
    if (c.stream_seed) out << "stream_seed = " << *c.stream_seed << '\n';
    out << "class = " << c.class_column << '\n';
    out << "bins = " << c.bins << '\n';
    out << "codes = " << (c.integer_codes ? "true" : "false") << '\n';
}

}  // namespace recur::eval
