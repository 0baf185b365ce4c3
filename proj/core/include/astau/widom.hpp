#pragma once

// The Widom-constant form of the Ablowitz–Segur tau-function: the
// operator determinant built from the off-diagonal Cauchy kernels a12, b21
// on the shifted vertical contours Re w = -eps (left) and Re w = +eps (right).

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "astau/quadrature.hpp"
#include "astau/tau_result.hpp"

namespace astau::widom {

using cplx = std::complex<double>;

struct WidomConfig {
  int order = 200;  // nodes per contour
  double eps = 0.5;
  double tail_tol = 1e-18;
  bool symmetrized = true;   // e^{+-nu/2} split kernels F, G; false uses raw a12, b21
  bool block = false;        // full 2m x 2m block determinant instead of the Schur form
  bool estimate_error = true;
};

struct ThetaOffdiag {
  cplx theta1_21;
  cplx theta2_12;
};

/// theta2_12 = kappa int_left e^nu/(w - z), theta1_21 = -kappa int_right e^{-nu}/(w - z),
/// both with dw/(2 pi i). Throws contour_collision if z sits on either contour.
ThetaOffdiag theta_offdiag(cplx z, double s, double kappa, const WidomConfig& cfg = {});

/// F(z,w) = e^{(nu(w)-nu(z))/2} / (2 pi i (w - z)), z right, w left.
cplx kernel_F(cplx z, cplx w, double s);
/// G(z,w) = e^{(nu(z)-nu(w))/2} / (2 pi i (w - z)), z left, w right.
cplx kernel_G(cplx z, cplx w, double s);

/// Discretised kernels A (right x left) and B (left x right) such that
/// tau = det(I - kappa^2 A B).
struct KernelPair {
  quad::Contour left;
  quad::Contour right;
  Eigen::MatrixXcd a;
  Eigen::MatrixXcd b;
};

KernelPair build_kernels(double s, const WidomConfig& cfg);

TauResult tau_widom(double s, double kappa, const WidomConfig& cfg = {});

enum class Kernel { a12, b21 };

/// kappa^2 int int |k(z,w)|^2 |dz||dw| / (2 pi)^2 for k = a12/kappa or b21/kappa.
/// The contour carrying the exponential is truncated as usual; the other one
/// is integrated over the whole line through a tan map.
double hs_norm_sq(Kernel which, double s, double kappa, const WidomConfig& cfg = {});

/// Max deviation between the double-integral action
///   int_{iR} (theta(z) - theta(w))/(w - z) f(w) dw/(2 pi i)
/// (theta2_12 for a12, theta1_21 for b21) and the residue-collapsed single
/// contour action +kappa int e^{+-nu} f/(w - z) over the left (a12, f = e+^n)
/// or right (b21, f = e-^n) contour, over the sample points and n = 0..max_n.
double verify_collapse(Kernel which, double s, double kappa, const std::vector<cplx>& z_samples,
                       const WidomConfig& cfg = {}, int max_n = 3, int axis_order = 400);

/// Both kernels, default sample points.
double verify_collapse(double s, double kappa, const WidomConfig& cfg = {});

std::vector<cplx> default_collapse_samples();

}  // namespace astau::widom
