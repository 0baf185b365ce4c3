#include "astau/calibration.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/tools/minima.hpp>

#include "astau/errors.hpp"

namespace astau {

namespace {

double require_calibration(const PipelineConfig& cfg) {
  if (!(cfg.calibration > 0.0) || !std::isfinite(cfg.calibration)) {
    throw ArgumentError("no calibration constant configured; run calibrate first");
  }
  return cfg.calibration;
}

}  // namespace

TauResult evaluate_tau(Method method, double s, double kappa, const PipelineConfig& cfg) {
  TauResult r;
  switch (method) {
    case Method::airy: r = airy::tau_airy(s, kappa, cfg.airy); break;
    case Method::widom: r = widom::tau_widom(s, kappa, cfg.widom); break;
    case Method::minor: r = minor::tau_minor(s, kappa, cfg.minor); break;
  }
  r.config.calibration = cfg.calibration;
  return r;
}

double tau_airy_frame(Method method, double x, double kappa, const PipelineConfig& cfg) {
  if (method == Method::airy) return airy::tau_airy(x, kappa, cfg.airy).value;
  return evaluate_tau(method, x / require_calibration(cfg), kappa, cfg).value;
}

double log_tau_dds2(double x, double kappa, double h, Method method, const PipelineConfig& cfg) {
  PipelineConfig quiet = cfg;
  quiet.airy.estimate_error = false;
  quiet.widom.estimate_error = false;
  return airy::log_tau_dds2([&](double v) { return tau_airy_frame(method, v, kappa, quiet); }, x, h);
}

double verify_u_squared(double x, const ode::OdeSolution& sol, Method method, const PipelineConfig& cfg, double h) {
  if (sol.kappa == 0.0) return 0.0;
  const double u = sol.u_at(x);
  return std::abs(u * u + log_tau_dds2(x, sol.kappa, h, method, cfg));
}

double verify_u_squared(double x, double kappa, Method method, const PipelineConfig& cfg, double h) {
  if (kappa == 0.0) return 0.0;
  ode::OdeConfig oc;
  oc.s_end = std::max(-6.0, std::min(x - 1.0, 0.0));
  if (x < oc.s_end || x > oc.s_start) throw ArgumentError("verify_u_squared: s outside the ODE range [-6, 8]");
  return verify_u_squared(x, ode::solve_pii(kappa, oc), method, cfg, h);
}

double calibration_residual(double c, double kappa, const std::vector<double>& probe, const PipelineConfig& cfg) {
  PipelineConfig quiet = cfg;
  quiet.airy.estimate_error = false;
  quiet.widom.estimate_error = false;
  double worst = 0.0;
  for (double s : probe) {
    const double w = widom::tau_widom(s, kappa, quiet.widom).value;
    worst = std::max(worst, std::abs(w - airy::tau_airy(c * s, kappa, quiet.airy).value));
  }
  return worst;
}

CalibrationResult calibrate(const PipelineConfig& cfg, double kappa, const std::vector<double>& probe) {
  if (kappa == 0.0) throw ArgumentError("calibrate: kappa = 0 cannot distinguish candidates");
  if (probe.empty()) throw ArgumentError("calibrate: empty probe grid");
  PipelineConfig quiet = cfg;
  quiet.airy.estimate_error = false;
  quiet.widom.estimate_error = false;

  std::vector<double> widom_vals;
  for (double s : probe) widom_vals.push_back(widom::tau_widom(s, kappa, quiet.widom).value);
  auto residual = [&](double c) {
    double worst = 0.0;
    for (std::size_t i = 0; i < probe.size(); ++i) {
      worst = std::max(worst, std::abs(widom_vals[i] - airy::tau_airy(c * probe[i], kappa, quiet.airy).value));
    }
    return worst;
  };

  CalibrationResult out;
  for (double c : {1.0, std::pow(2.0, 2.0 / 3.0), std::pow(2.0, -2.0 / 3.0)}) out.candidates.push_back({c, residual(c)});
  const auto best = *std::min_element(out.candidates.begin(), out.candidates.end(),
                                      [](const auto& a, const auto& b) { return a.residual < b.residual; });
  std::uintmax_t iters = 200;
  const auto [c, r] = boost::math::tools::brent_find_minima(residual, 0.95 * best.c, 1.05 * best.c, 45, iters);
  if (r < best.residual) {
    out.c = c;
    out.residual = r;
  } else {
    out.c = best.c;
    out.residual = best.residual;
  }
  if (!(out.residual <= 1e-4)) {
    throw NumericalError(NumericalFailure::non_convergence,
                         "calibrate: best residual " + std::to_string(out.residual) + " exceeds 1e-4");
  }
  return out;
}

}  // namespace astau
