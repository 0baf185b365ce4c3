#pragma once

// tau_airy(s, kappa) = det(1 - kappa^2 K_Ai) on L^2(s, inf), by Nystrom
// discretisation of the truncated half-line [s, s + T].

#include <cmath>

#include "astau/errors.hpp"
#include "astau/quadrature.hpp"
#include "astau/tau_result.hpp"

namespace astau::airy {

/// (Ai(x)Ai'(y) - Ai'(x)Ai(y))/(x - y), with the diagonal limit Ai'(x)^2 - x Ai(x)^2.
double airy_kernel(double x, double y);

struct AiryConfig {
  int order = 200;
  double truncation = 16.0;
  bool symmetric = true;        // sqrt(w) weighting; false gives K(x_j, x_k) w_k
  bool estimate_error = true;   // rerun at order/2
};

/// log det(I - kappa^2 M) on a given grid, without the error estimate.
double tau_on_grid(const quad::HalfLineGrid& grid, double kappa, bool symmetric = true);

TauResult tau_airy(double s, double kappa, const AiryConfig& cfg = {});

/// Richardson-extrapolated second derivative of log f at s:
/// (4 D(h) - D(2h)) / 3 with D the central second difference.
template <class F>
double log_tau_dds2(F&& f, double s, double h) {
  if (!(h >= 1e-4 && h <= 1e-1)) throw ArgumentError("log_tau_dds2: h must lie in [1e-4, 1e-1]");
  auto log_f = [&](double x) {
    const double v = f(x);
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw NumericalError(NumericalFailure::non_positive_tau, "tau <= 0 in log-derivative at s = " + std::to_string(x));
    }
    return std::log(v);
  };
  const double l0 = log_f(s);
  const double l1p = log_f(s + h), l1m = log_f(s - h);
  const double l2p = log_f(s + 2 * h), l2m = log_f(s - 2 * h);
  const double d1 = (l1p - 2 * l0 + l1m) / (h * h);
  const double d2 = (l2p - 2 * l0 + l2m) / (4 * h * h);
  return (4 * d1 - d2) / 3;
}

}  // namespace astau::airy
