#include "mec/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "mec/summation.hpp"

namespace mec {

std::vector<double> SparseCoupling::values() const {
  std::vector<double> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.value);
  return out;
}

void SparseCoupling::canonicalize() {
  std::sort(entries.begin(), entries.end(),
            [](const CouplingEntry& a, const CouplingEntry& b) {
              return std::pair(a.row, a.col) < std::pair(b.row, b.col);
            });
}

std::vector<double> SparseCoupling::to_dense() const {
  std::vector<double> out(n_rows * n_cols, 0.0);
  for (const auto& e : entries) out[e.row * n_cols + e.col] += e.value;
  return out;
}

std::vector<double> SparseJoint::values() const {
  std::vector<double> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.value);
  return out;
}

std::vector<double> SparseJoint::marginal(std::size_t axis) const {
  std::vector<CompensatedSum> sums(dims.at(axis));
  for (const auto& e : entries) sums[e.coords[axis]].add(e.value);
  std::vector<double> out;
  out.reserve(sums.size());
  for (const auto& s : sums) out.push_back(s.value());
  return out;
}

void SparseJoint::canonicalize() {
  std::sort(entries.begin(), entries.end(),
            [](const JointEntry& a, const JointEntry& b) { return a.coords < b.coords; });
}

namespace {

Validation check_marginal(std::string_view what, const std::vector<CompensatedSum>& sums,
                          const std::vector<double>& target, double tol) {
  for (std::size_t i = 0; i < target.size(); ++i) {
    const double got = sums[i].value();
    if (std::abs(got - target[i]) > tol) {
      return Validation::failure(std::string(what) + " " + std::to_string(i) +
                                 " sums to " + std::to_string(got) + ", expected " +
                                 std::to_string(target[i]));
    }
  }
  return {};
}

}  // namespace

Validation is_valid_coupling(const SparseCoupling& m, const Distribution& p,
                             const Distribution& q, double tol) {
  if (m.n_rows != p.size() || m.n_cols != q.size()) {
    return Validation::failure("shape " + std::to_string(m.n_rows) + "x" +
                               std::to_string(m.n_cols) + " does not match marginals " +
                               std::to_string(p.size()) + "x" + std::to_string(q.size()));
  }
  std::set<std::pair<std::size_t, std::size_t>> cells;
  std::vector<CompensatedSum> rows(m.n_rows);
  std::vector<CompensatedSum> cols(m.n_cols);
  for (std::size_t k = 0; k < m.entries.size(); ++k) {
    const auto& e = m.entries[k];
    if (!(e.value > 0.0)) {
      return Validation::failure("entry " + std::to_string(k) + " is not positive");
    }
    if (e.row >= m.n_rows || e.col >= m.n_cols) {
      return Validation::failure("entry " + std::to_string(k) + " is out of range");
    }
    if (!cells.emplace(e.row, e.col).second) {
      return Validation::failure("duplicate cell (" + std::to_string(e.row) + ", " +
                                 std::to_string(e.col) + ")");
    }
    rows[e.row].add(e.value);
    cols[e.col].add(e.value);
  }
  if (auto v = check_marginal("row", rows, p.in_caller_order(), tol); !v) return v;
  if (auto v = check_marginal("column", cols, q.in_caller_order(), tol); !v) return v;

  const std::size_t cap = 2 * std::max(m.n_rows, m.n_cols);
  if (m.entries.size() > cap) {
    return Validation::failure(std::to_string(m.entries.size()) +
                               " entries exceed the sparsity cap " + std::to_string(cap));
  }
  return {};
}

Validation is_valid_joint(const SparseJoint& m, const std::vector<Distribution>& marginals,
                          double tol) {
  if (m.dims.size() != marginals.size()) {
    return Validation::failure("arity " + std::to_string(m.dims.size()) + " does not match " +
                               std::to_string(marginals.size()) + " marginals");
  }
  for (std::size_t a = 0; a < m.dims.size(); ++a) {
    if (m.dims[a] != marginals[a].size()) {
      return Validation::failure("axis " + std::to_string(a) + " has wrong size");
    }
  }
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<CompensatedSum>> sums;
  for (std::size_t d : m.dims) sums.emplace_back(d);
  for (std::size_t k = 0; k < m.entries.size(); ++k) {
    const auto& e = m.entries[k];
    if (!(e.value > 0.0)) {
      return Validation::failure("entry " + std::to_string(k) + " is not positive");
    }
    if (e.coords.size() != m.dims.size()) {
      return Validation::failure("entry " + std::to_string(k) + " has wrong arity");
    }
    for (std::size_t a = 0; a < e.coords.size(); ++a) {
      if (e.coords[a] >= m.dims[a]) {
        return Validation::failure("entry " + std::to_string(k) + " is out of range");
      }
      sums[a][e.coords[a]].add(e.value);
    }
    if (!seen.insert(e.coords).second) {
      return Validation::failure("duplicate coordinates at entry " + std::to_string(k));
    }
  }
  for (std::size_t a = 0; a < m.dims.size(); ++a) {
    if (auto v = check_marginal("axis " + std::to_string(a) + " index", sums[a],
                                marginals[a].in_caller_order(), tol);
        !v) {
      return v;
    }
  }
  return {};
}

}  // namespace mec
