#include "recur/drift_detector.hpp"

#include <stdexcept>

#include "recur/adwin.hpp"
#include "recur/block_seq.hpp"

namespace recur::drift {

std::unique_ptr<DriftDetector> make_detector(const DetectorConfig& config) {
    switch (config.kind) {
        case DetectorKind::kAdwin:
            return std::make_unique<Adwin>(config.significance);
        case DetectorKind::kBlockSeq:
            return std::make_unique<BlockSeq>(config.significance);
    }
    throw std::invalid_argument("unknown detector kind");
}

DetectorKind parse_detector_kind(std::string_view text) {
    if (text == "adwin") return DetectorKind::kAdwin;
    if (text == "block-seq") return DetectorKind::kBlockSeq;
    throw std::invalid_argument("unknown detector '" + std::string(text) + "' (expected adwin or block-seq)");
}

std::string_view to_string(DetectorKind kind) {
    return kind == DetectorKind::kAdwin ? "adwin" : "block-seq";
}

}  // namespace recur::drift
