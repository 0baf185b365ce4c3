#include "astau/widom.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "astau/errors.hpp"
#include "astau/linalg.hpp"
#include "astau/minor_expansion.hpp"
#include "astau/special_functions.hpp"

namespace astau::widom {

namespace {

using special::phase_nu;

void check_kappa(double s, double kappa) {
  if (!std::isfinite(s) || !std::isfinite(kappa)) throw ArgumentError("widom: non-finite argument");
  if (std::abs(kappa) > 1.0) throw ArgumentError("widom: |kappa| must not exceed 1");
  if (std::abs(s) > 50.0) throw ArgumentError("widom: |s| must not exceed 50");
}

void check_tail(const quad::Contour& c, double s, double tol) {
  // |e^{+-nu}| is symmetric under conjugation, so the top endpoint suffices
  const double sign = c.side == quad::Side::left ? 1.0 : -1.0;
  const cplx top(c.side == quad::Side::left ? -c.eps : c.eps, c.half_length);
  if (!(std::abs(std::exp(sign * phase_nu(top, s))) <= 10 * tol)) {
    throw NumericalError(NumericalFailure::tail_bound, "contour endpoint exceeds the tail tolerance");
  }
}

void check_off_contour(cplx z, const quad::Contour& c) {
  const double re = c.side == quad::Side::left ? -c.eps : c.eps;
  if (std::abs(z.real() - re) < 1e-12 && std::abs(z.imag()) <= c.half_length) {
    throw NumericalError(NumericalFailure::contour_collision, "evaluation point lies on an integration contour");
  }
}

double tau_value(const KernelPair& k, double kappa, bool block, double* imag) {
  const auto m = k.a.rows();
  const auto n = k.a.cols();
  linalg::LogDet ld;
  if (block) {
    Eigen::MatrixXcd big = Eigen::MatrixXcd::Identity(m + n, m + n);
    big.topRightCorner(m, n) = -kappa * k.a;
    big.bottomLeftCorner(n, m) = -kappa * k.b;
    ld = linalg::log_determinant(big);
  } else {
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Identity(m, m);
    mat.noalias() -= (kappa * kappa) * (k.a * k.b);
    ld = linalg::log_determinant(mat);
  }
  const cplx v = ld.value();
  if (imag) *imag = std::abs(v.imag());
  return v.real();
}

}  // namespace

cplx kernel_F(cplx z, cplx w, double s) {
  return std::exp(0.5 * (phase_nu(w, s) - phase_nu(z, s))) / (quad::two_pi_i * (w - z));
}

cplx kernel_G(cplx z, cplx w, double s) {
  return std::exp(0.5 * (phase_nu(z, s) - phase_nu(w, s))) / (quad::two_pi_i * (w - z));
}

namespace {

ThetaOffdiag theta_on(cplx z, double s, double kappa, const quad::Contour& left, const quad::Contour& right) {
  check_off_contour(z, left);
  check_off_contour(z, right);
  ThetaOffdiag t;
  if (kappa == 0.0) return t;
  t.theta2_12 = kappa * quad::contour_integral([&](cplx w) { return std::exp(phase_nu(w, s)) / (w - z); }, left);
  t.theta1_21 = -kappa * quad::contour_integral([&](cplx w) { return std::exp(-phase_nu(w, s)) / (w - z); }, right);
  return t;
}

}  // namespace

ThetaOffdiag theta_offdiag(cplx z, double s, double kappa, const WidomConfig& cfg) {
  const auto left = quad::vertical_contour(quad::Side::left, cfg.eps, s, cfg.order, cfg.tail_tol);
  const auto right = quad::vertical_contour(quad::Side::right, cfg.eps, s, cfg.order, cfg.tail_tol);
  return theta_on(z, s, kappa, left, right);
}

KernelPair build_kernels(double s, const WidomConfig& cfg) {
  KernelPair k;
  k.left = quad::vertical_contour(quad::Side::left, cfg.eps, s, cfg.order, cfg.tail_tol);
  k.right = quad::vertical_contour(quad::Side::right, cfg.eps, s, cfg.order, cfg.tail_tol);
  check_tail(k.left, s, cfg.tail_tol);
  check_tail(k.right, s, cfg.tail_tol);
  const auto n = static_cast<Eigen::Index>(cfg.order);
  k.a.resize(n, n);
  k.b.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const cplx z = k.right.nodes[j];
    for (Eigen::Index l = 0; l < n; ++l) {
      const cplx w = k.left.nodes[l];
      if (cfg.symmetrized) {
        k.a(j, l) = -kernel_F(z, w, s) * k.left.weights[l];
        k.b(l, j) = kernel_G(w, z, s) * k.right.weights[j];
      } else {
        k.a(j, l) = -std::exp(phase_nu(w, s)) / (quad::two_pi_i * (w - z)) * k.left.weights[l];
        k.b(l, j) = std::exp(-phase_nu(z, s)) / (quad::two_pi_i * (z - w)) * k.right.weights[j];
      }
    }
  }
  return k;
}

TauResult tau_widom(double s, double kappa, const WidomConfig& cfg) {
  check_kappa(s, kappa);
  TauResult r;
  r.method = Method::widom;
  r.s = s;
  r.kappa = kappa;
  r.config.quad_order = cfg.order;
  r.config.eps = cfg.eps;
  r.config.tail_tol = cfg.tail_tol;
  if (kappa == 0.0) {
    r.value = 1.0;
    return r;
  }
  r.value = tau_value(build_kernels(s, cfg), kappa, cfg.block, &r.imag_residual);
  if (cfg.estimate_error && cfg.order >= 2) {
    WidomConfig half = cfg;
    half.order = cfg.order / 2;
    r.error_estimate = std::abs(r.value - tau_value(build_kernels(s, half), kappa, cfg.block, nullptr));
  }
  return r;
}

double hs_norm_sq(Kernel which, double s, double kappa, const WidomConfig& cfg) {
  check_kappa(s, kappa);
  const auto side = which == Kernel::a12 ? quad::Side::left : quad::Side::right;
  const auto decaying = quad::vertical_contour(side, cfg.eps, s, cfg.order, cfg.tail_tol);
  const double other_re = which == Kernel::a12 ? cfg.eps : -cfg.eps;
  const auto axis = quad::imaginary_axis_rule(cfg.order, 0.0, std::max(1.0, 0.5 * decaying.half_length));
  const double sign = which == Kernel::a12 ? 1.0 : -1.0;

  double total = 0.0;
  for (std::size_t j = 0; j < decaying.size(); ++j) {
    const cplx w = decaying.nodes[j];
    const double ew = std::norm(std::exp(sign * phase_nu(w, s)));
    double inner = 0.0;
    for (std::size_t l = 0; l < axis.nodes.size(); ++l) {
      const cplx z = cplx(other_re, 0.0) + axis.nodes[l];
      inner += std::abs(axis.weights[l]) / std::norm(w - z);
    }
    total += std::abs(decaying.weights[j]) * ew * inner;
  }
  const double two_pi = 2.0 * std::numbers::pi;
  return kappa * kappa * total / (two_pi * two_pi);
}

std::vector<cplx> default_collapse_samples() {
  return {{0.3, 0.2}, {1.0, -0.5}, {2.0, 1.0}, {-0.2, 0.4}, {-1.5, -0.3}};
}

double verify_collapse(Kernel which, double s, double kappa, const std::vector<cplx>& z_samples,
                       const WidomConfig& cfg, int max_n, int axis_order) {
  check_kappa(s, kappa);
  if (kappa == 0.0) return 0.0;
  const auto left = quad::vertical_contour(quad::Side::left, cfg.eps, s, cfg.order, cfg.tail_tol);
  const auto right = quad::vertical_contour(quad::Side::right, cfg.eps, s, cfg.order, cfg.tail_tol);
  const auto axis = quad::imaginary_axis_rule(axis_order);
  const auto sign = which == Kernel::a12 ? minor::BasisSign::plus : minor::BasisSign::minus;

  auto theta = [&](cplx x) {
    const auto t = theta_on(x, s, kappa, left, right);
    return which == Kernel::a12 ? t.theta2_12 : t.theta1_21;
  };
  std::vector<cplx> theta_axis(axis.nodes.size());
  for (std::size_t l = 0; l < axis.nodes.size(); ++l) theta_axis[l] = theta(axis.nodes[l]);

  double worst = 0.0;
  for (const cplx z : z_samples) {
    if (std::abs(z.real()) < 1e-12) throw ArgumentError("verify_collapse: sample point on the imaginary axis");
    const cplx tz = theta(z);
    for (int n = 0; n <= max_n; ++n) {
      auto f = [&](cplx w) { return minor::basis_fn(sign, n, w); };
      cplx dbl = 0.0;
      for (std::size_t l = 0; l < axis.nodes.size(); ++l) {
        const cplx w = axis.nodes[l];
        dbl += (tz - theta_axis[l]) / (w - z) * f(w) * axis.weights[l];
      }
      dbl /= quad::two_pi_i;
      cplx single;
      if (which == Kernel::a12) {
        single = kappa * quad::contour_integral([&](cplx w) { return std::exp(phase_nu(w, s)) * f(w) / (w - z); }, left);
      } else {
        single = kappa * quad::contour_integral([&](cplx w) { return std::exp(-phase_nu(w, s)) * f(w) / (w - z); }, right);
      }
      worst = std::max(worst, std::abs(dbl - single));
    }
  }
  return worst;
}

double verify_collapse(double s, double kappa, const WidomConfig& cfg) {
  const auto z = default_collapse_samples();
  return std::max(verify_collapse(Kernel::a12, s, kappa, z, cfg), verify_collapse(Kernel::b21, s, kappa, z, cfg));
}

}  // namespace astau::widom
