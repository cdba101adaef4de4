#include "mec/report.hpp"

#include "mec/entropy.hpp"
#include "mec/majorization.hpp"

namespace mec {

BoundsReport bounds_report(const Distribution& p, const Distribution& q) {
  BoundsReport r;
  r.h_p = shannon_entropy(p);
  r.h_q = shannon_entropy(q);
  r.h_glb = shannon_entropy(glb(p, q));
  r.joint_lower = r.h_glb;
  r.mi_upper = r.h_p + r.h_q - r.h_glb;
  r.cond_lower_x_given_y = r.h_glb - r.h_q;
  r.cond_lower_y_given_x = r.h_glb - r.h_p;
  return r;
}

MetricEstimate metric_estimate(const Distribution& p, const Distribution& q,
                               const CouplingOptions& opts) {
  const double h_p = shannon_entropy(p);
  const double h_q = shannon_entropy(q);
  const double w_hat = shannon_entropy(min_entropy_coupling_sparse(p, q, opts).values());
  MetricEstimate m;
  m.d_hat = 2 * w_hat - h_p - h_q;
  m.lower = 2 * shannon_entropy(glb(p, q)) - h_p - h_q;
  m.upper = m.d_hat;
  return m;
}

}  // namespace mec
