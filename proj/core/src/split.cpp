#include "mec/split.hpp"

#include <algorithm>
#include <string>

#include "mec/error.hpp"

namespace mec {

double SplitResult::chosen_total() const noexcept {
  CompensatedSum s;
  for (const auto& item : chosen) s.add(item.mass);
  return s.value();
}

void MassPool::push(PoolItem item) {
  heap_.push(item);
  total_.add(item.mass);
}

PoolItem MassPool::pop() {
  PoolItem item = heap_.top();
  heap_.pop();
  total_.subtract(item.mass);
  if (heap_.empty()) total_ = CompensatedSum{};
  return item;
}

namespace {

void require_feasible(double z, double x, double pool_total, double slack) {
  if (!(z > 0.0) || x < 0.0 || x > z + pool_total + slack) {
    throw Error(ErrorCode::kInfeasibleSplit,
                "cannot split z=" + std::to_string(z) + " to reach x=" +
                    std::to_string(x) + " with pool total " + std::to_string(pool_total));
  }
}

SplitResult finish(double z, double x, double sum, std::vector<PoolItem> chosen) {
  SplitResult r;
  r.retained = std::clamp(x - sum, 0.0, z);
  r.relocated = z - r.retained;
  r.chosen = std::move(chosen);
  return r;
}

}  // namespace

SplitResult split_mass(double z, double x, std::span<const double> pool, double slack) {
  CompensatedSum total;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    if (pool[k] > z + slack) {
      throw Error(ErrorCode::kInfeasibleSplit,
                  "candidate " + std::to_string(k) + " exceeds the split mass");
    }
    total.add(pool[k]);
  }
  require_feasible(z, x, total.value(), slack);

  std::vector<PoolItem> chosen;
  CompensatedSum sum;
  for (std::size_t k = 0; k < pool.size() && sum.value() + pool[k] < x; ++k) {
    chosen.push_back({pool[k], k});
    sum.add(pool[k]);
  }
  return finish(z, x, sum.value(), std::move(chosen));
}

SplitResult split_mass(double z, double x, MassPool& pool, double slack) {
  require_feasible(z, x, pool.total(), slack);
  std::vector<PoolItem> chosen;
  CompensatedSum sum;
  while (!pool.empty() && sum.value() + pool.top().mass < x) {
    if (pool.top().mass > z + slack) {
      throw Error(ErrorCode::kInfeasibleSplit, "queued mass exceeds the split mass");
    }
    PoolItem item = pool.pop();
    sum.add(item.mass);
    chosen.push_back(item);
  }
  return finish(z, x, sum.value(), std::move(chosen));
}

}  // namespace mec
