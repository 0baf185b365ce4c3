#pragma once

// Ablowitz–Segur solution of u'' = s u + 2 u^3 with u ~ kappa Ai(s) as
// s -> +inf, integrated backward by the Dormand–Prince 5(4) pair.

#include <vector>

namespace astau::ode {

struct OdeSolution {
  std::vector<double> s_grid;  // decreasing, uniform step
  std::vector<double> u;
  std::vector<double> u_prime;
  double kappa = 0.0;
  int accepted_steps = 0;
  int rejected_steps = 0;

  /// Quintic Hermite interpolation between grid points (u'' from the equation).
  double u_at(double s) const;
  /// |u'' - s u - 2u^3| at interior grid point i, with u'' by a 5-point difference.
  double residual_at(std::size_t i) const;
  double max_residual() const;
};

struct OdeConfig {
  double s_start = 8.0;
  double s_end = -6.0;
  double tol = 1e-12;
  double grid_step = 0.005;
};

/// Throws NumericalError(pole_encountered) when |u| exceeds 1e6.
OdeSolution solve_pii(double kappa, const OdeConfig& cfg = {});
OdeSolution solve_pii(double kappa, double s_start, double s_end, double tol);

}  // namespace astau::ode
