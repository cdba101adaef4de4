#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "mec/tolerance.hpp"

namespace mec {

class Distribution;

namespace detail {

/// Builds a Distribution from masses the library produced itself (glb,
/// half, aggregation): sorts, but skips input validation.
Distribution sorted_distribution(std::vector<double> masses);

}  // namespace detail

/// A finite probability vector kept in canonical (non-increasing) order.
///
/// `perm()[k]` is the caller's index of the k-th largest mass, so results
/// computed on sorted positions can be reported back in caller order. Ties
/// are broken by original index. Zero components are kept; `padded()` adds
/// explicit zeros at the tail.
class Distribution {
 public:
  Distribution() = default;

  std::span<const double> masses() const noexcept { return masses_; }
  std::span<const std::size_t> perm() const noexcept { return perm_; }
  std::size_t size() const noexcept { return masses_.size(); }
  bool empty() const noexcept { return masses_.empty(); }
  double operator[](std::size_t k) const { return masses_[k]; }

  /// Number of components with positive mass.
  std::size_t support_size() const noexcept;

  /// Copy extended with zeros to `n` components (no-op if already >= n).
  /// Padding positions map to caller indices size()..n-1.
  Distribution padded(std::size_t n) const;

  /// Masses rearranged into the caller's original order.
  std::vector<double> in_caller_order() const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  friend Distribution make_distribution(std::span<const double>, bool,
                                        const Tolerances&);
  friend Distribution detail::sorted_distribution(std::vector<double>);
  std::vector<double> masses_;
  std::vector<std::size_t> perm_;
};

/// Validates `raw` and returns it sorted.
///
/// Entries in [-1e-12, 0) are clamped to zero; anything more negative throws
/// kNegativeMass. Without `renormalize` the sum must be within
/// `tol.normalization` of 1 (kNotNormalized); with it, masses are divided by
/// their sum first. An empty input throws kEmpty.
Distribution make_distribution(std::span<const double> raw,
                               bool renormalize = false,
                               const Tolerances& tol = {});

inline Distribution make_distribution(std::initializer_list<double> raw,
                                      bool renormalize = false,
                                      const Tolerances& tol = {}) {
  return make_distribution(std::span<const double>(raw.begin(), raw.size()),
                           renormalize, tol);
}

}  // namespace mec
