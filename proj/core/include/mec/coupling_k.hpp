#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mec/coupling.hpp"
#include "mec/coupling2.hpp"
#include "mec/distribution.hpp"

namespace mec {

/// Positive masses, sorted non-increasing, each tagged with a coordinate
/// vector of `width` caller indices (one per merged marginal). Tags are
/// stored row-major in `tags`.
struct IndexedDistribution {
  std::size_t width = 0;
  std::vector<double> masses;
  std::vector<std::size_t> tags;

  std::size_t size() const noexcept { return masses.size(); }
  std::span<const std::size_t> tag(std::size_t k) const {
    return {tags.data() + k * width, width};
  }
};

/// Leaf of the merge tree: the positive components of `d` with 1-wide tags.
IndexedDistribution leaf(const Distribution& d);

/// Couples two indexed distributions with the sparse pairwise engine and
/// concatenates tags (left before right). Result is re-sorted.
IndexedDistribution merge(const IndexedDistribution& left,
                          const IndexedDistribution& right,
                          const CouplingOptions& opts = {});

/// Joint distribution of k >= 2 marginals by balanced pairwise merging.
/// Non-power-of-two k is padded by repeating the last marginal; the extra
/// axes are summed out of the result. Entropy is at most
/// H(glb of all marginals) + ceil(log2 k). Throws kTooFew for k < 2.
SparseJoint min_entropy_joint_k(std::span<const Distribution> ds,
                                const CouplingOptions& opts = {});

/// H(p1 ∧ ... ∧ pk), a lower bound on the entropy of any joint distribution
/// with these marginals.
double joint_lower_bound_k(std::span<const Distribution> ds);

struct FrlBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Bounds on the least entropy of a noise variable Z, independent of X, with
/// Y = f(X, Z), given the conditionals Y | X = x_i:
/// lower = H(glb of conditionals), upper = lower + log2 k.
FrlBounds frl_bounds(std::span<const Distribution> conditionals);

}  // namespace mec
