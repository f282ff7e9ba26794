#include "recur/hyperplane.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace recur::stream {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Value uniform_value(std::mt19937_64& rng, std::uint32_t cardinality) {
    return static_cast<Value>(unit_uniform(rng) * cardinality);
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t ConceptSchedule::total_length() const {
    std::uint64_t n = 0;
    for (const auto& s : segments) n += s.length;
    return n;
}

AttributeSpace ConceptSchedule::space() const { return AttributeSpace::uniform(n_attrs, cardinality); }

void ConceptSchedule::validate() const {
    if (segments.empty()) throw std::invalid_argument("schedule has no segments");
    for (const auto& s : segments) {
        if (s.length == 0) throw std::invalid_argument("segment lengths must be positive");
    }
    if (n_attrs == 0) throw std::invalid_argument("n_attrs must be positive");
    if (cardinality < 2) throw std::invalid_argument("cardinality must be >= 2");
    if (!(noise_rate >= 0.0 && noise_rate < 1.0)) throw std::invalid_argument("noise_rate must lie in [0, 1)");
}

ConceptSchedule ConceptSchedule::recurring(std::size_t concepts, std::uint64_t length, std::size_t occurrences,
                                           double noise_rate, std::uint64_t seed, std::size_t n_attrs,
                                           std::uint32_t cardinality) {
    ConceptSchedule s;
    for (std::size_t round = 0; round < occurrences; ++round) {
        for (std::size_t c = 0; c < concepts; ++c) s.segments.push_back({static_cast<std::uint32_t>(c), length});
    }
    s.noise_rate = noise_rate;
    s.seed = seed;
    s.n_attrs = n_attrs;
    s.cardinality = cardinality;
    return s;
}

ConceptSchedule parse_schedule(std::istream& in) {
    ConceptSchedule s;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const auto line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        try {
            if (const auto eq = line.find('='); eq != std::string::npos) {
                const auto key = trim(line.substr(0, eq));
                const auto value = trim(line.substr(eq + 1));
                if (key == "noise_rate") {
                    s.noise_rate = std::stod(value);
                } else if (key == "seed") {
                    s.seed = std::stoull(value);
                } else if (key == "n_attrs") {
                    s.n_attrs = std::stoul(value);
                } else if (key == "cardinality") {
                    s.cardinality = static_cast<std::uint32_t>(std::stoul(value));
                } else {
                    throw std::invalid_argument("unknown key '" + key + "'");
                }
            } else if (const auto comma = line.find(','); comma != std::string::npos) {
                const auto id = std::stoul(trim(line.substr(0, comma)));
                const auto length = std::stoull(trim(line.substr(comma + 1)));
                s.segments.push_back({static_cast<std::uint32_t>(id), length});
            } else {
                throw std::invalid_argument("expected 'key = value' or 'concept_id,length'");
            }
        } catch (const std::exception& e) {
            throw std::runtime_error("schedule line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    s.validate();
    return s;
}

ConceptSchedule load_schedule(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open schedule '" + path + "'");
    return parse_schedule(in);
}

void write_schedule(std::ostream& out, const ConceptSchedule& s) {
    out << "n_attrs = " << s.n_attrs << '\n';
    out << "cardinality = " << s.cardinality << '\n';
    out << "noise_rate = " << s.noise_rate << '\n';
    out << "seed = " << s.seed << '\n';
    for (const auto& seg : s.segments) out << seg.concept_id << ',' << seg.length << '\n';
}

std::uint8_t HyperplaneConcept::label(std::span<const Value> x) const {
    double sum = 0.0;
    for (std::size_t m = 0; m < weights.size(); ++m) sum += weights[m] * x[m];
    return sum >= threshold ? 1 : 0;
}

HyperplaneConcept make_concept(const ConceptSchedule& schedule, std::uint32_t concept_id) {
    std::mt19937_64 rng(splitmix64(schedule.seed ^ splitmix64(0x636f6e63ULL + concept_id)));
    HyperplaneConcept c;
    c.weights.resize(schedule.n_attrs);
    for (auto& w : c.weights) w = 2.0 * unit_uniform(rng) - 1.0;

    constexpr std::size_t kSamples = 10000;
    std::vector<double> sums(kSamples);
    for (auto& s : sums) {
        s = 0.0;
        for (std::size_t m = 0; m < schedule.n_attrs; ++m) s += c.weights[m] * uniform_value(rng, schedule.cardinality);
    }
    std::nth_element(sums.begin(), sums.begin() + kSamples / 2, sums.end());
    c.threshold = sums[kSamples / 2];
    return c;
}

HyperplaneStream::HyperplaneStream(ConceptSchedule schedule)
    : schedule_(std::move(schedule)), space_(), rng_(0) {
    schedule_.validate();
    space_ = schedule_.space();
    for (const auto& seg : schedule_.segments) {
        if (!concepts_.contains(seg.concept_id)) concepts_.emplace(seg.concept_id, make_concept(schedule_, seg.concept_id));
    }
    rng_.seed(splitmix64(schedule_.seed ^ 0x73747265616dULL));
}

std::optional<Record> HyperplaneStream::next() {
    while (segment_ < schedule_.segments.size() && offset_ >= schedule_.segments[segment_].length) {
        ++segment_;
        offset_ = 0;
    }
    if (segment_ >= schedule_.segments.size()) return std::nullopt;
    const auto& concept_params = concepts_.at(schedule_.segments[segment_].concept_id);
    Record r;
    r.values.resize(schedule_.n_attrs);
    for (auto& v : r.values) v = uniform_value(rng_, schedule_.cardinality);
    r.label = concept_params.label(r.values);
    last_flipped_ = unit_uniform(rng_) < schedule_.noise_rate;
    if (last_flipped_) r.label ^= 1;
    ++offset_;
    ++emitted_;
    return r;
}

std::vector<Record> generate(const ConceptSchedule& schedule) {
    HyperplaneStream stream(schedule);
    std::vector<Record> out;
    out.reserve(schedule.total_length());
    while (auto r = stream.next()) out.push_back(std::move(*r));
    return out;
}

}  // namespace recur::stream
