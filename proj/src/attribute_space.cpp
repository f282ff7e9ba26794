#include "recur/attribute_space.hpp"

#include <limits>
#include <stdexcept>

namespace recur {

AttributeSpace::AttributeSpace(std::vector<Attribute> attributes) : attributes_(std::move(attributes)) {
    for (const auto& a : attributes_) {
        if (a.cardinality < 2) {
            throw std::invalid_argument("attribute '" + a.name + "' has cardinality < 2");
        }
    }
}

AttributeSpace AttributeSpace::uniform(std::size_t dimension, std::uint32_t cardinality) {
    std::vector<Attribute> attrs;
    attrs.reserve(dimension);
    for (std::size_t m = 0; m < dimension; ++m) {
        attrs.push_back({"x" + std::to_string(m + 1), cardinality});
    }
    return AttributeSpace(std::move(attrs));
}

std::uint64_t AttributeSpace::input_space_size() const {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t size = 1;
    for (const auto& a : attributes_) {
        if (size > kMax / a.cardinality) return kMax;
        size *= a.cardinality;
    }
    return size;
}

bool AttributeSpace::all_binary() const {
    for (const auto& a : attributes_) {
        if (a.cardinality != 2) return false;
    }
    return true;
}

bool AttributeSpace::contains(std::span<const Value> x) const {
    if (x.size() != attributes_.size()) return false;
    for (std::size_t m = 0; m < x.size(); ++m) {
        if (x[m] >= attributes_[m].cardinality) return false;
    }
    return true;
}

AttributeSpace AttributeSpace::project(std::span<const std::size_t> indices) const {
    std::vector<Attribute> attrs;
    attrs.reserve(indices.size());
    for (auto m : indices) {
        if (m >= attributes_.size()) throw std::out_of_range("attribute index out of range");
        attrs.push_back(attributes_[m]);
    }
    return AttributeSpace(std::move(attrs));
}

}  // namespace recur
