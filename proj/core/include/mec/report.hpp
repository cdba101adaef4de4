#pragma once

#include "mec/coupling2.hpp"
#include "mec/distribution.hpp"

namespace mec {

/// Entropy and mutual-information bounds that depend only on the marginals.
struct BoundsReport {
  double h_p = 0.0;
  double h_q = 0.0;
  double h_glb = 0.0;
  double joint_lower = 0.0;            // H(X,Y) >= H(p ∧ q)
  double mi_upper = 0.0;               // I(X;Y) <= H(p) + H(q) - H(p ∧ q)
  double cond_lower_x_given_y = 0.0;   // H(X|Y) >= H(p ∧ q) - H(q)
  double cond_lower_y_given_x = 0.0;   // H(Y|X) >= H(p ∧ q) - H(p)
};

BoundsReport bounds_report(const Distribution& p, const Distribution& q);

/// Estimate of D(p, q) = 2 W(p, q) - H(p) - H(q), W the minimum coupling
/// entropy. lower <= D <= d_hat = upper <= lower + 2.
struct MetricEstimate {
  double d_hat = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

MetricEstimate metric_estimate(const Distribution& p, const Distribution& q,
                               const CouplingOptions& opts = {});

}  // namespace mec
