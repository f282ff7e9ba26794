#pragma once

#include <cstdint>
#include <vector>

#include "recur/attribute_space.hpp"

namespace recur {

/// One stream instance: discrete attribute values and a {0,1} class label.
struct Record {
    std::vector<Value> values;
    std::uint8_t label = 0;

    bool operator==(const Record&) const = default;
};

}  // namespace recur
