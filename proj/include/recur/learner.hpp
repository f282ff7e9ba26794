#pragma once

#include <cstdint>

#include "recur/record.hpp"

namespace recur {

/// Anything that can be evaluated prequentially: step() returns the
/// prediction for r made before r's label is used for training.
class StreamLearner {
  public:
    virtual ~StreamLearner() = default;

    virtual int step(const Record& r) = 0;

    virtual double pool_memory_kb() const { return 0.0; }
    virtual std::uint64_t reuse_count() const { return 0; }
    virtual std::uint64_t drift_count() const { return 0; }
};

}  // namespace recur
