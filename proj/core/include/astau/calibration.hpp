#pragma once

// Glue between the three tau pipelines: the s-axis calibration constant
// c with tau_widom(s) = tau_airy(c s), log-derivatives in the Airy frame,
// and the u^2 = -(log tau)'' check against the ODE.

#include <vector>

#include "astau/airy_fredholm.hpp"
#include "astau/minor_expansion.hpp"
#include "astau/pii_ode.hpp"
#include "astau/tau_result.hpp"
#include "astau/widom.hpp"

namespace astau {

struct PipelineConfig {
  airy::AiryConfig airy;
  widom::WidomConfig widom;
  minor::MinorConfig minor;
  double calibration = 0.0;  // 0 means "not calibrated yet"
};

/// tau by the given method at its own s variable.
TauResult evaluate_tau(Method method, double s, double kappa, const PipelineConfig& cfg);

/// tau at the Airy-frame coordinate x: widom and minor are evaluated at x / c.
double tau_airy_frame(Method method, double x, double kappa, const PipelineConfig& cfg);

/// Richardson second difference of log tau in the Airy frame.
double log_tau_dds2(double x, double kappa, double h, Method method, const PipelineConfig& cfg);

/// |u_ode(x)^2 + (log tau)''(x)|.
double verify_u_squared(double x, double kappa, Method method, const PipelineConfig& cfg, double h = 1e-2);
double verify_u_squared(double x, const ode::OdeSolution& sol, Method method, const PipelineConfig& cfg,
                        double h = 1e-2);

struct CalibrationCandidate {
  double c = 0.0;
  double residual = 0.0;
};

struct CalibrationResult {
  double c = 0.0;
  double residual = 0.0;
  std::vector<CalibrationCandidate> candidates;
};

/// max over the probe grid of |tau_widom(s) - tau_airy(c s)|.
double calibration_residual(double c, double kappa, const std::vector<double>& probe, const PipelineConfig& cfg);

/// Tries c in {1, 2^{2/3}, 2^{-2/3}}, refines the best one by Brent's method.
/// Throws NumericalError(non_convergence) if the winner's residual exceeds 1e-4.
CalibrationResult calibrate(const PipelineConfig& cfg, double kappa = 0.5,
                            const std::vector<double>& probe = {-2.0, -1.0, 0.0, 1.0, 2.0});

}  // namespace astau
