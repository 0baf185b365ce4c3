#include "astau/pii_ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <string>

#include "astau/errors.hpp"
#include "astau/special_functions.hpp"

namespace astau::ode {

namespace {

using State = std::array<double, 2>;

State rhs(double s, const State& y) { return {y[1], s * y[0] + 2.0 * y[0] * y[0] * y[0]}; }

// Dormand–Prince 5(4) tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200, e6 = 22.0 / 525,
                 e7 = -1.0 / 40;

struct StepResult {
  State y;
  double err;
};

StepResult dp_step(double s, const State& y, double h) {
  auto axpy = [](const State& base, std::initializer_list<std::pair<double, const State*>> terms, double hh) {
    State out = base;
    for (const auto& [c, k] : terms) {
      out[0] += hh * c * (*k)[0];
      out[1] += hh * c * (*k)[1];
    }
    return out;
  };
  const State k1 = rhs(s, y);
  const State k2 = rhs(s + c2 * h, axpy(y, {{a21, &k1}}, h));
  const State k3 = rhs(s + c3 * h, axpy(y, {{a31, &k1}, {a32, &k2}}, h));
  const State k4 = rhs(s + c4 * h, axpy(y, {{a41, &k1}, {a42, &k2}, {a43, &k3}}, h));
  const State k5 = rhs(s + c5 * h, axpy(y, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}, h));
  const State k6 = rhs(s + h, axpy(y, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}, h));
  const State y5 = axpy(y, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}}, h);
  const State k7 = rhs(s + h, y5);
  double err = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
    err = std::max(err, std::abs(e) / std::max(1.0, std::abs(y5[i])));
  }
  return {y5, err};
}

}  // namespace

OdeSolution solve_pii(double kappa, const OdeConfig& cfg) {
  if (!std::isfinite(kappa) || std::abs(kappa) >= 1.0) throw ArgumentError("solve_pii: need |kappa| < 1");
  if (!(cfg.s_start >= 6.0)) throw ArgumentError("solve_pii: s_start must be >= 6");
  if (!(cfg.s_end >= -6.0) || !(cfg.s_end < cfg.s_start)) throw ArgumentError("solve_pii: need -6 <= s_end < s_start");
  if (!(cfg.tol > 0.0) || !(cfg.grid_step > 0.0 && cfg.grid_step <= 0.01)) {
    throw ArgumentError("solve_pii: need tol > 0 and grid step in (0, 0.01]");
  }
  const int n_steps = static_cast<int>(std::ceil((cfg.s_start - cfg.s_end) / cfg.grid_step - 1e-9));
  const double dg = (cfg.s_start - cfg.s_end) / n_steps;

  OdeSolution sol;
  sol.kappa = kappa;
  sol.s_grid.reserve(n_steps + 1);
  const auto ai = special::airy_ai(cfg.s_start);
  State y{kappa * ai.ai, kappa * ai.ai_prime};
  double s = cfg.s_start;
  sol.s_grid.push_back(s);
  sol.u.push_back(y[0]);
  sol.u_prime.push_back(y[1]);

  double h = -dg;
  for (int g = 1; g <= n_steps; ++g) {
    const double target = g == n_steps ? cfg.s_end : cfg.s_start - g * dg;
    while (s > target) {
      const bool last = s + h <= target;
      const double step = last ? target - s : h;
      const auto r = dp_step(s, y, step);
      if (!std::isfinite(r.err)) throw NumericalError(NumericalFailure::non_finite, "solve_pii: non-finite state");
      const bool accepted = r.err <= cfg.tol;
      if (accepted) {
        s = last ? target : s + step;
        y = r.y;
        ++sol.accepted_steps;
        if (std::abs(y[0]) > 1e6) {
          throw NumericalError(NumericalFailure::pole_encountered, "solve_pii: |u| > 1e6 near s = " + std::to_string(s));
        }
      } else {
        ++sol.rejected_steps;
      }
      const double factor = r.err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(cfg.tol / r.err, 0.2), 0.2, 5.0);
      // a clipped final step says little about the natural step size
      const double proposal = step * factor;
      h = std::max(-dg, (last && accepted) ? std::min(h, proposal) : proposal);
      if (std::abs(h) < 1e-14) throw NumericalError(NumericalFailure::non_convergence, "solve_pii: step size underflow");
    }
    sol.s_grid.push_back(target);
    sol.u.push_back(y[0]);
    sol.u_prime.push_back(y[1]);
  }
  return sol;
}

OdeSolution solve_pii(double kappa, double s_start, double s_end, double tol) {
  OdeConfig cfg;
  cfg.s_start = s_start;
  cfg.s_end = s_end;
  cfg.tol = tol;
  return solve_pii(kappa, cfg);
}

double OdeSolution::u_at(double s) const {
  if (s_grid.size() < 2) throw ArgumentError("u_at: empty solution");
  if (s > s_grid.front() + 1e-12 || s < s_grid.back() - 1e-12) {
    throw ArgumentError("u_at: s = " + std::to_string(s) + " outside the solved range");
  }
  const double dg = s_grid[0] - s_grid[1];
  std::size_t i = static_cast<std::size_t>(std::clamp((s_grid.front() - s) / dg, 0.0, double(s_grid.size() - 2)));
  i = std::min(i, s_grid.size() - 2);
  // interval [s_grid[i+1], s_grid[i]] in increasing variable
  const double x0 = s_grid[i + 1], x1 = s_grid[i];
  const double hh = x1 - x0;
  const double t = (s - x0) / hh;
  auto second = [](double x, double v) { return x * v + 2 * v * v * v; };
  const double p0 = u[i + 1], p1 = u[i];
  const double m0 = u_prime[i + 1] * hh, m1 = u_prime[i] * hh;
  const double a0 = second(x0, p0) * hh * hh, a1 = second(x1, p1) * hh * hh;
  const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
  const double h00 = 1 - 10 * t3 + 15 * t4 - 6 * t5;
  const double h10 = t - 6 * t3 + 8 * t4 - 3 * t5;
  const double h20 = 0.5 * (t2 - 3 * t3 + 3 * t4 - t5);
  const double h01 = 10 * t3 - 15 * t4 + 6 * t5;
  const double h11 = -4 * t3 + 7 * t4 - 3 * t5;
  const double h21 = 0.5 * (t3 - 2 * t4 + t5);
  return h00 * p0 + h10 * m0 + h20 * a0 + h01 * p1 + h11 * m1 + h21 * a1;
}

double OdeSolution::residual_at(std::size_t i) const {
  if (i < 2 || i + 2 >= s_grid.size()) throw ArgumentError("residual_at: needs two neighbours on each side");
  const double dg = s_grid[i - 1] - s_grid[i];
  const double d2 = (-u[i - 2] + 16 * u[i - 1] - 30 * u[i] + 16 * u[i + 1] - u[i + 2]) / (12 * dg * dg);
  const double v = u[i];
  return std::abs(d2 - s_grid[i] * v - 2 * v * v * v);
}

double OdeSolution::max_residual() const {
  double worst = 0.0;
  for (std::size_t i = 2; i + 2 < s_grid.size(); ++i) worst = std::max(worst, residual_at(i));
  return worst;
}

}  // namespace astau::ode
