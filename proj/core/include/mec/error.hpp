#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mec {

enum class ErrorCode {
  kEmpty,
  kNegativeMass,
  kNotNormalized,
  kBadAlpha,
  kSupportMismatch,
  kBadPartition,
  kSizeCap,
  kInfeasibleSplit,
  kTooFew,
  kTooLarge,
  kBadInput,
  kInvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
/// kInfeasibleSplit and kInvariantViolation signal corrupted internal state;
/// everything else is an input problem.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  bool is_internal() const noexcept {
    return code_ == ErrorCode::kInfeasibleSplit ||
           code_ == ErrorCode::kInvariantViolation;
  }

 private:
  ErrorCode code_;
};

}  // namespace mec
