#include "mec/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mec/error.hpp"
#include "mec/summation.hpp"

namespace mec {

double shannon_entropy(std::span<const double> masses) {
  CompensatedSum h;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const double x = masses[i];
    if (x < 0.0) {
      throw Error(ErrorCode::kNegativeMass,
                  "entropy of negative mass at entry " + std::to_string(i));
    }
    if (x > 0.0) h.add(-x * std::log2(x));
  }
  // -0.0 for a point mass reads oddly in reports.
  return h.value() == 0.0 ? 0.0 : h.value();
}

double renyi_entropy(std::span<const double> masses, double alpha) {
  if (!(alpha > 0.0) || std::abs(alpha - 1.0) <= 1e-9 || !std::isfinite(alpha)) {
    throw Error(ErrorCode::kBadAlpha,
                "Renyi order must be positive and different from 1, got " +
                    std::to_string(alpha));
  }
  CompensatedSum power_sum;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const double x = masses[i];
    if (x < 0.0) {
      throw Error(ErrorCode::kNegativeMass,
                  "entropy of negative mass at entry " + std::to_string(i));
    }
    if (x > 0.0) power_sum.add(std::pow(x, alpha));
  }
  const double h = std::log2(power_sum.value()) / (1.0 - alpha);
  return h == 0.0 ? 0.0 : h;
}

double kl_divergence(const Distribution& y, const Distribution& x) {
  const std::size_t n = std::max(y.size(), x.size());
  CompensatedSum d;
  for (std::size_t k = 0; k < n; ++k) {
    const double yk = k < y.size() ? y[k] : 0.0;
    const double xk = k < x.size() ? x[k] : 0.0;
    if (yk <= 0.0) continue;
    if (xk <= 0.0) {
      throw Error(ErrorCode::kSupportMismatch,
                  "y has mass at sorted position " + std::to_string(k) +
                      " where x has none");
    }
    d.add(yk * std::log2(yk / xk));
  }
  return d.value();
}

Distribution aggregate(const Distribution& p,
                       const std::vector<std::vector<std::size_t>>& partition) {
  const std::size_t n = p.size();
  const std::vector<double> caller = p.in_caller_order();
  std::vector<bool> seen(n, false);
  std::vector<double> cells;
  cells.reserve(partition.size());
  std::size_t covered = 0;

  for (std::size_t c = 0; c < partition.size(); ++c) {
    if (partition[c].empty()) {
      throw Error(ErrorCode::kBadPartition, "cell " + std::to_string(c) + " is empty");
    }
    CompensatedSum s;
    for (std::size_t i : partition[c]) {
      if (i >= n) {
        throw Error(ErrorCode::kBadPartition,
                    "index " + std::to_string(i) + " out of range in cell " +
                        std::to_string(c));
      }
      if (seen[i]) {
        throw Error(ErrorCode::kBadPartition,
                    "index " + std::to_string(i) + " appears in two cells");
      }
      seen[i] = true;
      ++covered;
      s.add(caller[i]);
    }
    cells.push_back(s.value());
  }
  if (covered != n) {
    throw Error(ErrorCode::kBadPartition, "partition does not cover every index");
  }
  return detail::sorted_distribution(std::move(cells));
}

}  // namespace mec
