#pragma once

// Gauss–Legendre rules, shifted vertical contours and half-line grids.
// Every integral in the library is discretised through these types.

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "astau/errors.hpp"

namespace astau::quad {

using cplx = std::complex<double>;

template <class Real>
struct BasicQuadratureRule {
  int order = 0;
  std::vector<Real> nodes;    // increasing, in (-1, 1)
  std::vector<Real> weights;  // positive, sum to 2
};

using QuadratureRule = BasicQuadratureRule<double>;

/// Gauss–Legendre rule of order m on (-1, 1), 1 <= m <= 2000.
/// Nodes are Newton-polished roots of P_m started from Chebyshev guesses.
template <class Real>
BasicQuadratureRule<Real> gauss_legendre_t(int m);

QuadratureRule gauss_legendre(int m);

enum class Side { left, right };

/// Straight segment of the line Re w = -eps (left) or +eps (right), oriented
/// upward, truncated where the Gaussian envelope of exp(±nu) drops below
/// tail_tol. Weights are the raw dw weights; 1/(2 pi i) is applied only by
/// contour_integral.
struct Contour {
  Side side = Side::left;
  double eps = 0.5;
  double half_length = 0.0;
  std::vector<cplx> nodes;
  std::vector<cplx> weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// Half-length Y with exp((4/3)eps^3 + |s| eps - 4 eps Y^2) = tail_tol.
double envelope_half_length(double eps, double s, double tail_tol);

Contour vertical_contour(Side side, double eps, double s, int m, double tail_tol);

struct HalfLineGrid {
  double s = 0.0;
  double truncation = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// Affine image of the order-m Gauss–Legendre rule on [s, s + T].
HalfLineGrid halfline_grid(double s, double T, int m);

/// Gauss–Legendre discretisation of the whole imaginary axis through
/// z = i * (center + scale * tan(theta)); returns nodes z_j and raw dz weights.
struct AxisRule {
  std::vector<cplx> nodes;
  std::vector<cplx> weights;
};
AxisRule imaginary_axis_rule(int m, double center = 0.0, double scale = 1.0);

inline constexpr cplx two_pi_i{0.0, 2.0 * std::numbers::pi};

/// sum_j values_j * weights_j / (2 pi i).
cplx contour_integral(std::span<const cplx> values, const Contour& c);

template <class F>
cplx contour_integral(F&& f, const Contour& c) {
  cplx acc{0.0, 0.0};
  for (std::size_t j = 0; j < c.nodes.size(); ++j) {
    const cplx v = f(c.nodes[j]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NumericalError(NumericalFailure::non_finite, "integrand not finite on contour node");
    }
    acc += v * c.weights[j];
  }
  return acc / two_pi_i;
}

}  // namespace astau::quad
