#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "mec/coupling.hpp"
#include "mec/distribution.hpp"
#include "mec/tolerance.hpp"

namespace mec {

enum class Engine { kDense, kSparse };

Engine parse_engine(std::string_view name);
std::string_view to_string(Engine engine) noexcept;

struct CouplingOptions {
  Tolerances tol;
  /// Re-check the greedy scan's internal invariants while running
  /// (one-sided overflow, split conservation, majorization witnesses for
  /// the k-way merge). Violations throw kInvariantViolation.
  bool check_invariants = false;
};

/// Pairwise greedy coupling on the dense n x n working matrix, O(n^2).
/// Rows of the result index `p`, columns index `q`, both in caller order.
/// Entropy is at most H(p ∧ q) + 1 bit.
SparseCoupling min_entropy_coupling_dense(const Distribution& p,
                                          const Distribution& q,
                                          const CouplingOptions& opts = {});

/// Same contract as the dense engine, built directly in sparse form with two
/// mass pools; O(n log n).
SparseCoupling min_entropy_coupling_sparse(const Distribution& p,
                                           const Distribution& q,
                                           const CouplingOptions& opts = {});

SparseCoupling min_entropy_coupling(const Distribution& p,
                                    const Distribution& q,
                                    Engine engine = Engine::kSparse,
                                    const CouplingOptions& opts = {});

namespace detail {

/// Entry on sorted positions. `origin` is the index of the glb component the
/// value was split from.
struct SortedEntry {
  double value;
  std::size_t row;
  std::size_t col;
  std::size_t origin;
};

/// Core of the sparse engine. `p` and `q` must be sorted non-increasing;
/// they are zero-padded to a common length internally. Coordinates refer to
/// sorted positions with rows on `p` and columns on `q`.
std::vector<SortedEntry> couple_sorted_sparse(std::span<const double> p,
                                              std::span<const double> q,
                                              const CouplingOptions& opts);

std::vector<SortedEntry> couple_sorted_dense(std::span<const double> p,
                                             std::span<const double> q,
                                             const CouplingOptions& opts);

}  // namespace detail
}  // namespace mec
