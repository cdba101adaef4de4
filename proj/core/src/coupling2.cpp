#include "mec/coupling2.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "mec/error.hpp"
#include "mec/majorization.hpp"
#include "mec/split.hpp"
#include "mec/summation.hpp"

namespace mec {

Engine parse_engine(std::string_view name) {
  if (name == "dense") return Engine::kDense;
  if (name == "sparse") return Engine::kSparse;
  throw Error(ErrorCode::kBadInput, "unknown engine '" + std::string(name) + "'");
}

std::string_view to_string(Engine engine) noexcept {
  return engine == Engine::kDense ? "dense" : "sparse";
}

namespace detail {
namespace {

using detail::SortedEntry;

// Padded copies of both marginals, oriented so that at the last index where
// they differ the row marginal is the larger one.
struct Prepared {
  std::vector<double> rows;
  std::vector<double> cols;
  bool swapped = false;
  std::vector<double> z;
};

Prepared prepare(std::span<const double> p, std::span<const double> q, double slack) {
  const std::size_t n = std::max(p.size(), q.size());
  Prepared s;
  s.rows.assign(n, 0.0);
  s.cols.assign(n, 0.0);
  std::copy(p.begin(), p.end(), s.rows.begin());
  std::copy(q.begin(), q.end(), s.cols.begin());
  for (std::size_t k = n; k-- > 0;) {
    if (std::abs(s.rows[k] - s.cols[k]) > slack) {
      if (s.rows[k] < s.cols[k]) {
        std::swap(s.rows, s.cols);
        s.swapped = true;
      }
      break;
    }
  }
  s.z = glb_masses(s.rows, s.cols);
  return s;
}

void unswap(std::vector<SortedEntry>& entries, bool swapped) {
  if (!swapped) return;
  for (auto& e : entries) std::swap(e.row, e.col);
}

[[noreturn]] void violation(const std::string& what) {
  throw Error(ErrorCode::kInvariantViolation, what);
}

void check_one_sided(bool col_over, bool row_over, std::size_t i) {
  if (col_over && row_over) {
    violation("row and column both overflow at index " + std::to_string(i));
  }
}

// Every output value is one of at most two pieces of some z component, and
// the pieces of z_j add back to z_j.
void check_split_conservation(const std::vector<SortedEntry>& entries,
                              const std::vector<double>& z, double slack) {
  std::vector<CompensatedSum> sums(z.size());
  std::vector<int> counts(z.size(), 0);
  for (const auto& e : entries) {
    if (e.origin >= z.size()) violation("entry with unknown origin");
    sums[e.origin].add(e.value);
    ++counts[e.origin];
  }
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (counts[j] > 2) {
      violation("z[" + std::to_string(j) + "] was split into " +
                std::to_string(counts[j]) + " pieces");
    }
    if (std::abs(sums[j].value() - z[j]) > slack) {
      violation("pieces of z[" + std::to_string(j) + "] do not add up");
    }
  }
}

}  // namespace

std::vector<SortedEntry> couple_sorted_sparse(std::span<const double> p,
                                              std::span<const double> q,
                                              const CouplingOptions& opts) {
  const double slack = opts.tol.comparison;
  Prepared s = prepare(p, q, slack);
  const std::size_t n = s.z.size();

  // Masses waiting to be placed in the current column (origin = their row),
  // and in the current row (origin = their column).
  MassPool col_pool;
  MassPool row_pool;
  std::vector<SortedEntry> out;
  out.reserve(2 * n);

  for (std::size_t i = n; i-- > 0;) {
    const double zi = s.z[i];
    // At i == 0 all remaining mass belongs to the first row and column.
    bool col_over = i > 0 && zi > 0.0 && col_pool.total() + zi > s.cols[i] + slack;
    double retained = zi;

    if (col_over) {
      SplitResult split = split_mass(zi, s.cols[i], col_pool, slack);
      for (const auto& item : split.chosen) {
        out.push_back({item.mass, item.origin, i, item.origin});
      }
      retained = split.retained;
      if (split.relocated > 0.0) col_pool.push({split.relocated, i});
    } else {
      while (!col_pool.empty()) {
        const PoolItem item = col_pool.pop();
        out.push_back({item.mass, item.origin, i, item.origin});
      }
    }

    const bool row_over =
        i > 0 && retained > 0.0 && row_pool.total() + retained > s.rows[i] + slack;
    if (opts.check_invariants) check_one_sided(col_over, row_over, i);

    if (row_over) {
      SplitResult split = split_mass(retained, s.rows[i], row_pool, slack);
      for (const auto& item : split.chosen) {
        out.push_back({item.mass, i, item.origin, item.origin});
      }
      retained = split.retained;
      if (split.relocated > 0.0) row_pool.push({split.relocated, i});
    } else {
      while (!row_pool.empty()) {
        const PoolItem item = row_pool.pop();
        out.push_back({item.mass, i, item.origin, item.origin});
      }
    }

    if (retained > 0.0) out.push_back({retained, i, i, i});
  }

  if (opts.check_invariants) check_split_conservation(out, s.z, slack);
  unswap(out, s.swapped);
  return out;
}

std::vector<SortedEntry> couple_sorted_dense(std::span<const double> p,
                                             std::span<const double> q,
                                             const CouplingOptions& opts) {
  const double slack = opts.tol.comparison;
  Prepared s = prepare(p, q, slack);
  const std::size_t n = s.z.size();

  std::vector<double> m(n * n, 0.0);
  std::vector<std::size_t> origin(n * n, 0);
  auto at = [n](std::size_t r, std::size_t c) { return r * n + c; };
  for (std::size_t i = 0; i < n; ++i) {
    m[at(i, i)] = s.z[i];
    origin[at(i, i)] = i;
  }

  auto column_sum = [&](std::size_t c) {
    CompensatedSum t;
    for (std::size_t r = 0; r < n; ++r) t.add(m[at(r, c)]);
    return t.value();
  };
  auto row_sum = [&](std::size_t r) {
    CompensatedSum t;
    for (std::size_t c = 0; c < n; ++c) t.add(m[at(r, c)]);
    return t.value();
  };

  std::vector<double> slice;
  std::vector<std::size_t> slice_index;
  std::vector<bool> keep(n);

  for (std::size_t i = n; i-- > 0;) {
    const double zi = s.z[i];
    const bool col_over = i > 0 && zi > 0.0 && column_sum(i) > s.cols[i] + slack;

    if (col_over) {
      // Column i minus its diagonal cell, in row order.
      slice.clear();
      slice_index.clear();
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        slice.push_back(m[at(r, i)]);
        slice_index.push_back(r);
      }
      SplitResult split = split_mass(zi, s.cols[i], slice, slack);
      std::fill(keep.begin(), keep.end(), false);
      keep[i] = true;
      for (const auto& item : split.chosen) keep[slice_index[item.origin]] = true;

      m[at(i, i)] = split.retained;
      m[at(i, i - 1)] = split.relocated;
      origin[at(i, i - 1)] = i;
      for (std::size_t r = 0; r < n; ++r) {
        if (keep[r] || m[at(r, i)] == 0.0) continue;
        if (m[at(r, i - 1)] == 0.0) origin[at(r, i - 1)] = origin[at(r, i)];
        m[at(r, i - 1)] += m[at(r, i)];
        m[at(r, i)] = 0.0;
      }
    }

    const double retained = m[at(i, i)];
    const bool row_over = i > 0 && retained > 0.0 && row_sum(i) > s.rows[i] + slack;
    if (opts.check_invariants) check_one_sided(col_over, row_over, i);

    if (row_over) {
      slice.clear();
      slice_index.clear();
      for (std::size_t c = 0; c < n; ++c) {
        if (c == i) continue;
        slice.push_back(m[at(i, c)]);
        slice_index.push_back(c);
      }
      SplitResult split = split_mass(retained, s.rows[i], slice, slack);
      std::fill(keep.begin(), keep.end(), false);
      keep[i] = true;
      for (const auto& item : split.chosen) keep[slice_index[item.origin]] = true;

      m[at(i, i)] = split.retained;
      m[at(i - 1, i)] = split.relocated;
      origin[at(i - 1, i)] = i;
      for (std::size_t c = 0; c < n; ++c) {
        if (keep[c] || m[at(i, c)] == 0.0) continue;
        if (m[at(i - 1, c)] == 0.0) origin[at(i - 1, c)] = origin[at(i, c)];
        m[at(i - 1, c)] += m[at(i, c)];
        m[at(i, c)] = 0.0;
      }
    }
  }

  std::vector<SortedEntry> out;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (m[at(r, c)] > 0.0) out.push_back({m[at(r, c)], r, c, origin[at(r, c)]});
    }
  }
  if (opts.check_invariants) check_split_conservation(out, s.z, slack);
  unswap(out, s.swapped);
  return out;
}

}  // namespace detail

namespace {

SparseCoupling to_caller_order(const std::vector<detail::SortedEntry>& sorted,
                               const Distribution& p, const Distribution& q) {
  SparseCoupling out;
  out.n_rows = p.size();
  out.n_cols = q.size();
  out.entries.reserve(sorted.size());
  for (const auto& e : sorted) {
    if (e.row >= p.size() || e.col >= q.size()) {
      throw Error(ErrorCode::kInvariantViolation,
                  "mass " + std::to_string(e.value) + " placed on a padding cell");
    }
    out.entries.push_back({e.value, p.perm()[e.row], q.perm()[e.col]});
  }
  out.canonicalize();
  return out;
}

}  // namespace

SparseCoupling min_entropy_coupling_dense(const Distribution& p, const Distribution& q,
                                          const CouplingOptions& opts) {
  return to_caller_order(detail::couple_sorted_dense(p.masses(), q.masses(), opts), p, q);
}

SparseCoupling min_entropy_coupling_sparse(const Distribution& p, const Distribution& q,
                                           const CouplingOptions& opts) {
  return to_caller_order(detail::couple_sorted_sparse(p.masses(), q.masses(), opts), p, q);
}

SparseCoupling min_entropy_coupling(const Distribution& p, const Distribution& q,
                                    Engine engine, const CouplingOptions& opts) {
  return engine == Engine::kDense ? min_entropy_coupling_dense(p, q, opts)
                                  : min_entropy_coupling_sparse(p, q, opts);
}

}  // namespace mec
