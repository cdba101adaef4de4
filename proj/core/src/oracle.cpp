#include "mec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mec/entropy.hpp"
#include "mec/error.hpp"

namespace mec {

namespace {

constexpr double kVertexTol = 1e-12;

std::vector<std::size_t> positive_cells(const VertexCoupling& v) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < v.cells.size(); ++k) {
    if (v.cells[k] > kVertexTol) out.push_back(k);
  }
  return out;
}

// Exhaustive search over spanning trees of K_{n,m}. Nodes 0..n-1 are rows,
// n..n+m-1 are columns; edge e joins row e / m and column e % m.
class TreeEnumerator {
 public:
  TreeEnumerator(std::vector<double> rows, std::vector<double> cols)
      : n_(rows.size()), m_(cols.size()), rows_(std::move(rows)), cols_(std::move(cols)) {}

  std::vector<VertexCoupling> run() {
    std::vector<std::size_t> parent(n_ + m_);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::vector<std::size_t> chosen;
    recurse(0, parent, chosen);
    return std::move(found_);
  }

 private:
  static std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  void recurse(std::size_t next, std::vector<std::size_t>& parent,
               std::vector<std::size_t>& chosen) {
    const std::size_t need = n_ + m_ - 1;
    if (chosen.size() == need) {
      solve(chosen);
      return;
    }
    const std::size_t edges = n_ * m_;
    for (std::size_t e = next; e + (need - chosen.size()) <= edges; ++e) {
      const std::size_t a = find(parent, e / m_);
      const std::size_t b = find(parent, n_ + e % m_);
      if (a == b) continue;
      std::vector<std::size_t> saved = parent;
      parent[a] = b;
      chosen.push_back(e);
      recurse(e + 1, parent, chosen);
      chosen.pop_back();
      parent = std::move(saved);
    }
  }

  // Peels leaves of the tree: a leaf's only edge must carry its whole
  // remaining marginal.
  void solve(const std::vector<std::size_t>& tree) {
    const std::size_t nodes = n_ + m_;
    std::vector<double> remaining(nodes);
    std::copy(rows_.begin(), rows_.end(), remaining.begin());
    std::copy(cols_.begin(), cols_.end(), remaining.begin() + n_);
    std::vector<std::vector<std::size_t>> incident(nodes);
    for (std::size_t e : tree) {
      incident[e / m_].push_back(e);
      incident[n_ + e % m_].push_back(e);
    }
    std::vector<bool> used(n_ * m_, false);
    std::vector<std::size_t> degree(nodes);
    for (std::size_t v = 0; v < nodes; ++v) degree[v] = incident[v].size();

    VertexCoupling vertex{n_, m_, std::vector<double>(n_ * m_, 0.0)};
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < nodes; ++v) {
      if (degree[v] == 1) stack.push_back(v);
    }
    std::size_t assigned = 0;
    while (!stack.empty() && assigned < tree.size()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      if (degree[v] != 1) continue;
      std::size_t edge = 0;
      for (std::size_t e : incident[v]) {
        if (!used[e]) edge = e;
      }
      used[edge] = true;
      ++assigned;
      const double x = remaining[v];
      if (x < -kVertexTol) return;
      vertex.cells[edge] = std::max(x, 0.0);
      const std::size_t u = (v < n_) ? n_ + edge % m_ : edge / m_;
      remaining[v] = 0.0;
      remaining[u] -= x;
      --degree[v];
      if (--degree[u] == 1) stack.push_back(u);
    }
    found_.push_back(std::move(vertex));
  }

  std::size_t n_;
  std::size_t m_;
  std::vector<double> rows_;
  std::vector<double> cols_;
  std::vector<VertexCoupling> found_;
};

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> VertexCoupling::support() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (cells[k] > 0.0) out.emplace_back(k / n_cols, k % n_cols);
  }
  return out;
}

SparseCoupling VertexCoupling::to_sparse() const {
  SparseCoupling out;
  out.n_rows = n_rows;
  out.n_cols = n_cols;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (cells[k] > 0.0) out.entries.push_back({cells[k], k / n_cols, k % n_cols});
  }
  return out;
}

std::vector<VertexCoupling> enumerate_vertices(const Distribution& p, const Distribution& q,
                                               std::size_t cell_cap) {
  if (p.size() * q.size() > cell_cap) {
    throw Error(ErrorCode::kTooLarge,
                "vertex enumeration limited to " + std::to_string(cell_cap) + " cells, got " +
                    std::to_string(p.size()) + "x" + std::to_string(q.size()));
  }
  std::vector<VertexCoupling> vertices =
      TreeEnumerator(p.in_caller_order(), q.in_caller_order()).run();

  std::vector<std::vector<std::size_t>> supports;
  supports.reserve(vertices.size());
  for (const auto& v : vertices) supports.push_back(positive_cells(v));
  std::vector<std::size_t> order(vertices.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (supports[a] != supports[b]) return supports[a] < supports[b];
    return vertices[a].cells < vertices[b].cells;
  });

  auto same = [](const VertexCoupling& a, const VertexCoupling& b) {
    for (std::size_t k = 0; k < a.cells.size(); ++k) {
      if (std::abs(a.cells[k] - b.cells[k]) > kVertexTol) return false;
    }
    return true;
  };
  std::vector<VertexCoupling> out;
  for (std::size_t k : order) {
    if (!out.empty() && same(out.back(), vertices[k])) continue;
    out.push_back(std::move(vertices[k]));
  }
  return out;
}

OracleResult brute_force_min_entropy(const Distribution& p, const Distribution& q,
                                     std::size_t cell_cap) {
  std::vector<VertexCoupling> vertices = enumerate_vertices(p, q, cell_cap);
  OracleResult best;
  best.opt_value = INFINITY;
  for (auto& v : vertices) {
    const double h = shannon_entropy(v.cells);
    if (h < best.opt_value) {
      best.opt_value = h;
      best.argmin = std::move(v);
    }
  }
  return best;
}

}  // namespace mec
