#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mec/distribution.hpp"
#include "mec/tolerance.hpp"

namespace mec {

struct CouplingEntry {
  double value = 0.0;
  std::size_t row = 0;  // caller index into the first marginal
  std::size_t col = 0;  // caller index into the second marginal

  friend bool operator==(const CouplingEntry&, const CouplingEntry&) = default;
};

/// Bivariate coupling in sparse form: only positive cells are stored.
struct SparseCoupling {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<CouplingEntry> entries;

  std::vector<double> values() const;
  /// Sorts entries by (row, col).
  void canonicalize();
  /// Row-major n_rows x n_cols matrix.
  std::vector<double> to_dense() const;

  friend bool operator==(const SparseCoupling&, const SparseCoupling&) = default;
};

struct JointEntry {
  double value = 0.0;
  std::vector<std::size_t> coords;  // one caller index per marginal

  friend bool operator==(const JointEntry&, const JointEntry&) = default;
};

/// k-marginal joint distribution in sparse form.
struct SparseJoint {
  std::vector<std::size_t> dims;
  std::vector<JointEntry> entries;

  std::size_t arity() const noexcept { return dims.size(); }
  std::vector<double> values() const;
  /// Marginal along `axis`, in caller order of that axis.
  std::vector<double> marginal(std::size_t axis) const;
  /// Sorts entries lexicographically by coords.
  void canonicalize();
};

/// Outcome of a structural check; `diagnostic` names the first violation.
struct Validation {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
  static Validation failure(std::string why) { return {false, std::move(why)}; }
};

/// Checks every SparseCoupling invariant against marginals `p` (rows) and
/// `q` (columns): positive values, in-range and distinct cells, row and
/// column sums within `tol`, and at most 2*max(n_rows, n_cols) entries.
Validation is_valid_coupling(const SparseCoupling& m, const Distribution& p,
                             const Distribution& q,
                             double tol = kNormalizationTol);

/// Checks positivity, distinct coordinates and every axis marginal.
Validation is_valid_joint(const SparseJoint& m,
                          const std::vector<Distribution>& marginals,
                          double tol = kNormalizationTol);

}  // namespace mec
