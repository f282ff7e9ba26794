#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace recur {

/// A discrete attribute value. Continuous inputs are binned upstream.
using Value = std::uint32_t;

struct Attribute {
    std::string name;
    std::uint32_t cardinality = 2;

    bool operator==(const Attribute&) const = default;
};

/// The attribute universe a stream, tree or spectrum is defined over.
/// Every attribute has cardinality >= 2.
class AttributeSpace {
  public:
    AttributeSpace() = default;
    explicit AttributeSpace(std::vector<Attribute> attributes);

    /// d attributes named x1..xd, all with the same cardinality.
    static AttributeSpace uniform(std::size_t dimension, std::uint32_t cardinality);

    std::size_t dimension() const { return attributes_.size(); }
    std::uint32_t cardinality(std::size_t m) const { return attributes_[m].cardinality; }
    const std::string& name(std::size_t m) const { return attributes_[m].name; }
    const std::vector<Attribute>& attributes() const { return attributes_; }

    /// Product of all cardinalities, saturating at UINT64_MAX.
    std::uint64_t input_space_size() const;

    bool all_binary() const;

    /// True when x has one in-range value per attribute.
    bool contains(std::span<const Value> x) const;

    /// The sub-space formed by the given (sorted) attribute indices.
    AttributeSpace project(std::span<const std::size_t> indices) const;

    bool operator==(const AttributeSpace&) const = default;

  private:
    std::vector<Attribute> attributes_;
};

}  // namespace recur
