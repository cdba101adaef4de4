#pragma once

namespace mec {

/// Absolute tolerances used throughout the library.
struct Tolerances {
  /// Accepted deviation of a distribution's total mass from 1, and of
  /// coupling marginals from their targets.
  double normalization = 1e-9;
  /// Slack for internal comparisons (overflow tests, prefix sums).
  double comparison = 1e-12;
};

inline constexpr double kNormalizationTol = 1e-9;
inline constexpr double kComparisonTol = 1e-12;

}  // namespace mec
