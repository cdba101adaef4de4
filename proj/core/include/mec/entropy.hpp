#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mec/distribution.hpp"

namespace mec {

/// Shannon entropy in bits, with 0 log 0 = 0. Throws kNegativeMass on any
/// negative entry.
double shannon_entropy(std::span<const double> masses);
inline double shannon_entropy(const Distribution& d) {
  return shannon_entropy(d.masses());
}

/// Order-alpha Renyi entropy in bits, (1/(1-alpha)) log2 sum x^alpha over
/// the positive entries. alpha must be positive and not within 1e-9 of 1
/// (kBadAlpha); use shannon_entropy for the limit.
double renyi_entropy(std::span<const double> masses, double alpha);
inline double renyi_entropy(const Distribution& d, double alpha) {
  return renyi_entropy(d.masses(), alpha);
}

/// Relative entropy D(y || x) in bits, comparing sorted positions; the
/// shorter argument is zero-padded. Throws kSupportMismatch when y puts mass
/// where x has none.
double kl_divergence(const Distribution& y, const Distribution& x);

/// Sums `p` over the cells of `partition`. Cell members are caller indices
/// of `p`; cells must be non-empty, disjoint and cover 0..n-1
/// (kBadPartition otherwise).
Distribution aggregate(const Distribution& p,
                       const std::vector<std::vector<std::size_t>>& partition);

}  // namespace mec
