#include "mec/error.hpp"

namespace mec {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kEmpty: return "Empty";
    case ErrorCode::kNegativeMass: return "NegativeMass";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kBadAlpha: return "BadAlpha";
    case ErrorCode::kSupportMismatch: return "SupportMismatch";
    case ErrorCode::kBadPartition: return "BadPartition";
    case ErrorCode::kSizeCap: return "SizeCap";
    case ErrorCode::kInfeasibleSplit: return "InfeasibleSplit";
    case ErrorCode::kTooFew: return "TooFew";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kBadInput: return "BadInput";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace mec
