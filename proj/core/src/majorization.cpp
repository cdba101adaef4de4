#include "mec/majorization.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "mec/error.hpp"
#include "mec/summation.hpp"

namespace mec {

namespace {

double at_or_zero(const Distribution& d, std::size_t k) {
  return k < d.size() ? d[k] : 0.0;
}

double at_or_zero(std::span<const double> d, std::size_t k) {
  return k < d.size() ? d[k] : 0.0;
}

}  // namespace

bool majorizes(const Distribution& a, const Distribution& b, double slack) {
  const std::size_t n = std::max(a.size(), b.size());
  CompensatedSum sa;
  CompensatedSum sb;
  for (std::size_t k = 0; k < n; ++k) {
    sa.add(at_or_zero(a, k));
    sb.add(at_or_zero(b, k));
    if (sa.value() > sb.value() + slack) return false;
  }
  return true;
}

namespace detail {

std::vector<double> glb_masses(std::span<const double> p, std::span<const double> q) {
  const std::size_t n = std::max(p.size(), q.size());
  std::vector<double> z(n, 0.0);
  CompensatedSum prefix_p;
  CompensatedSum prefix_q;
  CompensatedSum emitted;
  int prev_side = -1;
  bool carry = false;
  for (std::size_t k = 0; k < n; ++k) {
    const double pk = at_or_zero(p, k);
    const double qk = at_or_zero(q, k);
    prefix_p.add(pk);
    prefix_q.add(qk);
    const double sp = prefix_p.value();
    const double sq = prefix_q.value();
    const int side = (sp < sq || (sp == sq && prev_side != 1)) ? 0 : 1;
    double zk;
    if (!carry && (k == 0 || side == prev_side)) {
      // Same input attains both prefix minima: its own mass is exact.
      zk = side == 0 ? pk : qk;
    } else {
      // A negative difference is roundoff; clamping it leaves the deficit in
      // `emitted`, so the next component absorbs it.
      const double diff = std::min(sp, sq) - emitted.value();
      zk = std::max(diff, 0.0);
      carry = diff < 0.0;
    }
    z[k] = zk;
    emitted.add(zk);
    prev_side = side;
  }
  return z;
}

}  // namespace detail

Distribution glb(const Distribution& p, const Distribution& q) {
  return detail::sorted_distribution(detail::glb_masses(p.masses(), q.masses()));
}

Distribution glb_many(std::span<const Distribution> ds) {
  if (ds.empty()) throw Error(ErrorCode::kEmpty, "glb of an empty list");
  Distribution acc = ds.front();
  for (std::size_t i = 1; i < ds.size(); ++i) acc = glb(acc, ds[i]);
  return acc;
}

Distribution half(const Distribution& p) {
  std::vector<double> out;
  out.reserve(2 * p.size());
  for (double m : p.masses()) {
    out.push_back(m / 2);
    out.push_back(m / 2);
  }
  return detail::sorted_distribution(std::move(out));
}

Distribution half_iter(const Distribution& p, std::size_t times,
                       std::size_t cap) {
  std::size_t size = p.size();
  for (std::size_t i = 0; i < times; ++i) {
    if (size > cap / 2) {
      throw Error(ErrorCode::kSizeCap,
                  "half^(" + std::to_string(times) + ") of " +
                      std::to_string(p.size()) + " components exceeds cap " +
                      std::to_string(cap));
    }
    size *= 2;
  }
  Distribution out = p;
  for (std::size_t i = 0; i < times; ++i) out = half(out);
  return out;
}

}  // namespace mec
