#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace recur::drift {

/// Change detector over a classifier's 0/1 error stream (0 = correct).
class DriftDetector {
  public:
    virtual ~DriftDetector() = default;

    /// Appends one outcome and returns true when a change is signalled.
    virtual bool add(bool error) = 0;

    /// 1 - mean of the current error window; 0.5 while the window is empty.
    virtual double accuracy() const = 0;

    /// Outcomes in the current window.
    virtual std::uint64_t width() const = 0;

    virtual void reset() = 0;
    virtual std::unique_ptr<DriftDetector> clone() const = 0;
    virtual std::string_view name() const = 0;

    std::uint64_t detections() const { return detections_; }

  protected:
    std::uint64_t detections_ = 0;
};

enum class DetectorKind { kAdwin, kBlockSeq };

struct DetectorConfig {
    DetectorKind kind = DetectorKind::kBlockSeq;
    double significance = 0.01;
};

std::unique_ptr<DriftDetector> make_detector(const DetectorConfig& config);

DetectorKind parse_detector_kind(std::string_view text);
std::string_view to_string(DetectorKind kind);

}  // namespace recur::drift
