#include "mec/coupling_k.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "mec/entropy.hpp"
#include "mec/error.hpp"
#include "mec/majorization.hpp"
#include "mec/summation.hpp"

namespace mec {

IndexedDistribution leaf(const Distribution& d) {
  IndexedDistribution out;
  out.width = 1;
  const std::size_t support = d.support_size();
  out.masses.assign(d.masses().begin(), d.masses().begin() + support);
  out.tags.assign(d.perm().begin(), d.perm().begin() + support);
  return out;
}

IndexedDistribution merge(const IndexedDistribution& left,
                          const IndexedDistribution& right,
                          const CouplingOptions& opts) {
  const auto cells = detail::couple_sorted_sparse(left.masses, right.masses, opts);

  std::vector<std::size_t> order(cells.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cells[a].value > cells[b].value;
  });

  IndexedDistribution out;
  out.width = left.width + right.width;
  out.masses.reserve(cells.size());
  out.tags.reserve(cells.size() * out.width);
  for (std::size_t k : order) {
    const auto& c = cells[k];
    if (c.row >= left.size() || c.col >= right.size()) {
      throw Error(ErrorCode::kInvariantViolation, "merge placed mass on a padding cell");
    }
    out.masses.push_back(c.value);
    const auto l = left.tag(c.row);
    const auto r = right.tag(c.col);
    out.tags.insert(out.tags.end(), l.begin(), l.end());
    out.tags.insert(out.tags.end(), r.begin(), r.end());
  }
  return out;
}

namespace {

struct Node {
  IndexedDistribution dist;
  Distribution leaves_glb;  // only tracked when checking invariants
};

void check_witness(const Node& node, std::size_t level) {
  const Distribution lower = half_iter(node.leaves_glb, level);
  const Distribution masses = detail::sorted_distribution(node.dist.masses);
  if (!majorizes(lower, masses, 1e-9)) {
    throw Error(ErrorCode::kInvariantViolation,
                "half^(" + std::to_string(level) +
                    ") of the subtree glb is not majorized by the node");
  }
}

}  // namespace

SparseJoint min_entropy_joint_k(std::span<const Distribution> ds,
                                const CouplingOptions& opts) {
  const std::size_t k = ds.size();
  if (k < 2) {
    throw Error(ErrorCode::kTooFew, "need at least two marginals, got " + std::to_string(k));
  }
  const std::size_t leaves = std::bit_ceil(k);

  std::vector<Node> level_nodes;
  level_nodes.reserve(leaves);
  for (std::size_t i = 0; i < leaves; ++i) {
    const Distribution& d = ds[std::min(i, k - 1)];
    level_nodes.push_back({leaf(d), opts.check_invariants ? d : Distribution{}});
  }

  for (std::size_t level = 1; level_nodes.size() > 1; ++level) {
    std::vector<Node> next;
    next.reserve(level_nodes.size() / 2);
    for (std::size_t i = 0; i + 1 < level_nodes.size(); i += 2) {
      Node node;
      node.dist = merge(level_nodes[i].dist, level_nodes[i + 1].dist, opts);
      if (opts.check_invariants) {
        node.leaves_glb = glb(level_nodes[i].leaves_glb, level_nodes[i + 1].leaves_glb);
        check_witness(node, level);
      }
      next.push_back(std::move(node));
    }
    level_nodes = std::move(next);
  }
  const IndexedDistribution& root = level_nodes.front().dist;

  SparseJoint out;
  for (std::size_t a = 0; a < k; ++a) out.dims.push_back(ds[a].size());

  if (leaves == k) {
    out.entries.reserve(root.size());
    for (std::size_t w = 0; w < root.size(); ++w) {
      const auto t = root.tag(w);
      out.entries.push_back({root.masses[w], {t.begin(), t.end()}});
    }
  } else {
    // Sum out the axes of the repeated marginal.
    std::map<std::vector<std::size_t>, CompensatedSum> cells;
    for (std::size_t w = 0; w < root.size(); ++w) {
      const auto t = root.tag(w);
      cells[std::vector<std::size_t>(t.begin(), t.begin() + k)].add(root.masses[w]);
    }
    out.entries.reserve(cells.size());
    for (auto& [coords, sum] : cells) out.entries.push_back({sum.value(), coords});
  }
  out.canonicalize();
  return out;
}

double joint_lower_bound_k(std::span<const Distribution> ds) {
  return shannon_entropy(glb_many(ds));
}

FrlBounds frl_bounds(std::span<const Distribution> conditionals) {
  FrlBounds b;
  b.lower = joint_lower_bound_k(conditionals);
  b.upper = b.lower + std::ceil(std::log2(static_cast<double>(conditionals.size())));
  return b;
}

}  // namespace mec
