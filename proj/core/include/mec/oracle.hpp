#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mec/coupling.hpp"
#include "mec/distribution.hpp"

namespace mec {

inline constexpr std::size_t kOracleCellCap = 20;

/// A basic feasible solution of the transportation polytope C(p, q), stored
/// as a dense row-major grid in caller order.
struct VertexCoupling {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<double> cells;

  double at(std::size_t r, std::size_t c) const { return cells[r * n_cols + c]; }
  std::vector<std::pair<std::size_t, std::size_t>> support() const;
  SparseCoupling to_sparse() const;
};

/// All vertices of C(p, q), from spanning trees of the complete bipartite
/// graph on rows ∪ cols whose basic solution is non-negative. Deduplicated
/// at 1e-12 and ordered by support, then values. Throws kTooLarge when
/// n * m exceeds `cell_cap`.
std::vector<VertexCoupling> enumerate_vertices(const Distribution& p,
                                               const Distribution& q,
                                               std::size_t cell_cap = kOracleCellCap);

struct OracleResult {
  double opt_value = 0.0;
  VertexCoupling argmin;
};

/// Exact minimum-entropy coupling by exhaustive vertex search. Entropy is
/// concave, so the minimum over the polytope sits at a vertex.
OracleResult brute_force_min_entropy(const Distribution& p,
                                     const Distribution& q,
                                     std::size_t cell_cap = kOracleCellCap);

}  // namespace mec
