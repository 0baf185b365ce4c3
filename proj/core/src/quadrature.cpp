#include "astau/quadrature.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace astau::quad {

namespace {

// P_m(x) and P_m'(x) by the three-term recurrence.
template <class Real>
std::pair<Real, Real> legendre_with_derivative(int m, Real x) {
  Real p0 = 1;
  Real p1 = x;
  if (m == 0) return {p0, Real(0)};
  for (int k = 2; k <= m; ++k) {
    const Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const Real dp = m * (x * p1 - p0) / (x * x - 1);
  return {p1, dp};
}

}  // namespace

template <class Real>
BasicQuadratureRule<Real> gauss_legendre_t(int m) {
  if (m < 1 || m > 2000) {
    throw ArgumentError("gauss_legendre: order must lie in [1, 2000], got " + std::to_string(m));
  }
  BasicQuadratureRule<Real> rule;
  rule.order = m;
  rule.nodes.assign(m, Real(0));
  rule.weights.assign(m, Real(0));

  const Real pi = std::numbers::pi_v<Real>;
  const Real tol = 4 * std::numeric_limits<Real>::epsilon();
  const int half = (m + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // i-th largest root
    Real x = std::cos(pi * (Real(i) + Real(0.75)) / (Real(m) + Real(0.5)));
    Real dp = 0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      auto [p, d] = legendre_with_derivative(m, x);
      dp = d;
      const Real dx = p / d;
      x -= dx;
      if (std::abs(dx) <= tol) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw NumericalError(NumericalFailure::non_convergence, "gauss_legendre Newton iteration");
    }
    dp = legendre_with_derivative(m, x).second;
    const Real w = 2 / ((1 - x * x) * dp * dp);
    // exact mirror symmetry; the middle root of an odd rule is 0
    if (2 * i + 1 == m) x = 0;
    rule.nodes[m - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[m - 1 - i] = w;
    rule.weights[i] = w;
  }
  return rule;
}

template BasicQuadratureRule<double> gauss_legendre_t<double>(int);
template BasicQuadratureRule<long double> gauss_legendre_t<long double>(int);

QuadratureRule gauss_legendre(int m) { return gauss_legendre_t<double>(m); }

double envelope_half_length(double eps, double s, double tail_tol) {
  const double exponent = (4.0 / 3.0) * eps * eps * eps + std::abs(s) * eps - std::log(tail_tol);
  return std::sqrt(exponent / (4.0 * eps));
}

Contour vertical_contour(Side side, double eps, double s, int m, double tail_tol) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw ArgumentError("vertical_contour: eps must be positive");
  }
  if (eps == 1.0) {
    throw ArgumentError("vertical_contour: eps = 1 collides with the basis poles at w = +-1");
  }
  if (!(tail_tol > 0.0 && tail_tol <= 1e-6)) {
    throw ArgumentError("vertical_contour: tail_tol must lie in (0, 1e-6]");
  }
  const auto rule = gauss_legendre(m);
  Contour c;
  c.side = side;
  c.eps = eps;
  c.half_length = envelope_half_length(eps, s, tail_tol);
  const double re = side == Side::left ? -eps : eps;
  c.nodes.resize(m);
  c.weights.resize(m);
  for (int j = 0; j < m; ++j) {
    c.nodes[j] = cplx(re, c.half_length * rule.nodes[j]);
    c.weights[j] = cplx(0.0, c.half_length * rule.weights[j]);
  }
  return c;
}

HalfLineGrid halfline_grid(double s, double T, int m) {
  if (!(T > 0.0) || !std::isfinite(T) || !std::isfinite(s)) {
    throw ArgumentError("halfline_grid: need finite s and T > 0");
  }
  const auto rule = gauss_legendre(m);
  HalfLineGrid g;
  g.s = s;
  g.truncation = T;
  g.nodes.resize(m);
  g.weights.resize(m);
  const double half = 0.5 * T;
  for (int j = 0; j < m; ++j) {
    g.nodes[j] = s + half * (rule.nodes[j] + 1.0);
    g.weights[j] = half * rule.weights[j];
  }
  return g;
}

AxisRule imaginary_axis_rule(int m, double center, double scale) {
  if (!(scale > 0.0)) throw ArgumentError("imaginary_axis_rule: scale must be positive");
  const auto rule = gauss_legendre(m);
  AxisRule a;
  a.nodes.resize(m);
  a.weights.resize(m);
  const double half_pi = 0.5 * std::numbers::pi;
  for (int j = 0; j < m; ++j) {
    const double theta = half_pi * rule.nodes[j];
    const double c = std::cos(theta);
    const double y = center + scale * std::tan(theta);
    a.nodes[j] = cplx(0.0, y);
    // dz = i dy, dy = scale sec^2(theta) dtheta, dtheta = (pi/2) dt
    a.weights[j] = cplx(0.0, scale * half_pi * rule.weights[j] / (c * c));
  }
  return a;
}

cplx contour_integral(std::span<const cplx> values, const Contour& c) {
  if (values.size() != c.nodes.size()) {
    throw ArgumentError("contour_integral: value count does not match contour size");
  }
  cplx acc{0.0, 0.0};
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (!std::isfinite(values[j].real()) || !std::isfinite(values[j].imag())) {
      throw NumericalError(NumericalFailure::non_finite, "integrand not finite on contour node");
    }
    acc += values[j] * c.weights[j];
  }
  return acc / two_pi_i;
}

}  // namespace astau::quad
