#include "mec/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "mec/error.hpp"
#include "mec/summation.hpp"

namespace mec {

namespace {
constexpr double kNegativeClamp = 1e-12;
}  // namespace

Distribution make_distribution(std::span<const double> raw, bool renormalize,
                               const Tolerances& tol) {
  if (raw.empty()) throw Error(ErrorCode::kEmpty, "distribution has no entries");

  std::vector<double> masses(raw.begin(), raw.end());
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (!std::isfinite(masses[i])) {
      throw Error(ErrorCode::kBadInput,
                  "entry " + std::to_string(i) + " is not a finite number");
    }
    if (masses[i] < -kNegativeClamp) {
      throw Error(ErrorCode::kNegativeMass,
                  "entry " + std::to_string(i) + " is negative (" +
                      std::to_string(masses[i]) + ")");
    }
    masses[i] = std::max(masses[i], 0.0);
  }

  const double total = compensated_total(masses);
  if (renormalize) {
    if (!(total > 0.0)) {
      throw Error(ErrorCode::kNotNormalized, "cannot renormalize: total mass is 0");
    }
    for (double& m : masses) m /= total;
  } else if (std::abs(total - 1.0) > tol.normalization) {
    throw Error(ErrorCode::kNotNormalized,
                "masses sum to " + std::to_string(total) + ", not 1");
  }

  return detail::sorted_distribution(std::move(masses));
}

namespace detail {

Distribution sorted_distribution(std::vector<double> masses) {
  std::vector<std::size_t> perm(masses.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  if (!std::is_sorted(masses.begin(), masses.end(), std::greater<>())) {
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      return masses[a] > masses[b];
    });
  }
  Distribution d;
  d.masses_.reserve(masses.size());
  for (std::size_t k : perm) d.masses_.push_back(masses[k]);
  d.perm_ = std::move(perm);
  return d;
}

}  // namespace detail

std::size_t Distribution::support_size() const noexcept {
  // Sorted, so positives form a prefix.
  return static_cast<std::size_t>(
      std::partition_point(masses_.begin(), masses_.end(),
                           [](double m) { return m > 0.0; }) -
      masses_.begin());
}

Distribution Distribution::padded(std::size_t n) const {
  Distribution d = *this;
  for (std::size_t k = d.masses_.size(); k < n; ++k) {
    d.masses_.push_back(0.0);
    d.perm_.push_back(k);
  }
  return d;
}

std::vector<double> Distribution::in_caller_order() const {
  std::vector<double> out(masses_.size());
  for (std::size_t k = 0; k < masses_.size(); ++k) out[perm_[k]] = masses_[k];
  return out;
}

}  // namespace mec
