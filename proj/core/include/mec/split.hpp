#pragma once

#include <cstddef>
#include <queue>
#include <span>
#include <vector>

#include "mec/summation.hpp"
#include "mec/tolerance.hpp"

namespace mec {

/// A piece of relocated mass. `origin` is the row or column index the piece
/// belongs to; for the span form of split_mass it is the pool position.
struct PoolItem {
  double mass = 0.0;
  std::size_t origin = 0;
};

/// Result of splitting z into a retained part and a relocated part so that
/// retained + (chosen masses) == x.
struct SplitResult {
  double retained = 0.0;
  double relocated = 0.0;
  std::vector<PoolItem> chosen;

  double chosen_total() const noexcept;
};

/// Min-priority queue of relocated masses with a running total.
/// Ties on mass are broken by smaller origin.
class MassPool {
 public:
  void push(PoolItem item);
  const PoolItem& top() const { return heap_.top(); }
  PoolItem pop();

  bool empty() const noexcept { return heap_.empty(); }
  std::size_t size() const noexcept { return heap_.size(); }
  double total() const noexcept { return total_.value(); }

 private:
  struct Greater {
    bool operator()(const PoolItem& a, const PoolItem& b) const noexcept {
      if (a.mass != b.mass) return a.mass > b.mass;
      return a.origin > b.origin;
    }
  };
  std::priority_queue<PoolItem, std::vector<PoolItem>, Greater> heap_;
  CompensatedSum total_;
};

/// Greedy mass splitting over an ordered candidate list.
///
/// Scans `pool` in order, taking candidates while the running sum plus the
/// next one stays strictly below `x`; then retained = x - sum and
/// relocated = z - retained. Requires x <= z + sum(pool) and every
/// candidate <= z (both up to `slack`), otherwise throws kInfeasibleSplit.
SplitResult split_mass(double z, double x, std::span<const double> pool,
                       double slack = kComparisonTol);

/// Same split drawing candidates from `pool` smallest-first. Chosen items
/// are removed from the pool; the rest stay queued.
SplitResult split_mass(double z, double x, MassPool& pool,
                       double slack = kComparisonTol);

}  // namespace mec
