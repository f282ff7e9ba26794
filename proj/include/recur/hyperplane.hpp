#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "recur/attribute_space.hpp"
#include "recur/record.hpp"

namespace recur::stream {

struct Segment {
    std::uint32_t concept_id = 0;
    std::uint64_t length = 0;

    bool operator==(const Segment&) const = default;
};

/// Which concepts appear, in what order, and how the generator is set up.
/// A concept id that appears in several segments recurs with identical
/// parameters.
struct ConceptSchedule {
    std::vector<Segment> segments;
    std::size_t n_attrs = 10;
    std::uint32_t cardinality = 2;
    double noise_rate = 0.1;
    std::uint64_t seed = 1;

    std::uint64_t total_length() const;
    AttributeSpace space() const;
    void validate() const;

    /// `concepts` distinct concepts of `length` records each, the whole
    /// sequence 0..concepts-1 repeated `occurrences` times.
    static ConceptSchedule recurring(std::size_t concepts, std::uint64_t length, std::size_t occurrences,
                                     double noise_rate, std::uint64_t seed, std::size_t n_attrs = 10,
                                     std::uint32_t cardinality = 2);
};

/// Schedule file: `key = value` lines for noise_rate, seed, n_attrs and
/// cardinality, and one `concept_id,length` line per segment. '#' starts a
/// comment.
ConceptSchedule parse_schedule(std::istream& in);
ConceptSchedule load_schedule(const std::string& path);
void write_schedule(std::ostream& out, const ConceptSchedule& s);

/// Label = [sum_m weights[m] * x_m >= threshold] on the integer codes x_m.
struct HyperplaneConcept {
    std::vector<double> weights;
    double threshold = 0.0;

    std::uint8_t label(std::span<const Value> x) const;
};

/// Weights uniform in [-1, 1] and the threshold at the median of w.x under
/// uniform inputs (10,000 samples), all drawn from a generator seeded by
/// (schedule seed, concept id).
HyperplaneConcept make_concept(const ConceptSchedule& schedule, std::uint32_t concept_id);

/// Pull-based rotating-hyperplane stream with recurring concepts and label noise.
class HyperplaneStream {
  public:
    explicit HyperplaneStream(ConceptSchedule schedule);

    /// Next record, or nullopt once the schedule is exhausted.
    std::optional<Record> next();

    const ConceptSchedule& schedule() const { return schedule_; }
    const AttributeSpace& space() const { return space_; }
    const HyperplaneConcept& concept_params(std::uint32_t id) const { return concepts_.at(id); }

    /// Segment of the record most recently returned.
    std::size_t segment_index() const { return segment_; }
    /// True when the last record's label was flipped by noise.
    bool last_flipped() const { return last_flipped_; }
    std::uint64_t emitted() const { return emitted_; }

  private:
    ConceptSchedule schedule_;
    AttributeSpace space_;
    std::map<std::uint32_t, HyperplaneConcept> concepts_;
    std::mt19937_64 rng_;
    std::size_t segment_ = 0;
    std::uint64_t offset_ = 0;  // within the current segment
    std::uint64_t emitted_ = 0;
    bool last_flipped_ = false;
};

std::vector<Record> generate(const ConceptSchedule& schedule);

/// Uniform double in [0, 1) from the top 53 bits.
double unit_uniform(std::mt19937_64& rng);

}  // namespace recur::stream
