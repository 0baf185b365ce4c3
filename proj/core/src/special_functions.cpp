#include "astau/special_functions.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <string>

namespace astau::special {

namespace {

using ld = long double;
using cld = std::complex<ld>;

constexpr ld kAi0 = 0.355028053887817239260063186004183176398L;
constexpr ld kAiPrime0 = -0.258819403792806798405183560189203963479L;
// residuals below long double resolution, for the quad-precision branch
constexpr ld kAi0Lo = 4.8371293330278994532e-21L;
constexpr ld kAiPrime0Lo = -1.2374448491793789732e-20L;

void check_airy_argument(double x) {
  if (!std::isfinite(x)) throw ArgumentError("airy_ai: non-finite argument");
  if (std::abs(x) > 50.0) throw ArgumentError("airy_ai: |x| > 50 is outside the supported range");
}

}  // namespace

namespace detail {

template <class R>
R abs_r(R v) {
  return v < 0 ? -v : v;
}

template <class R>
AiryValue maclaurin_impl(double xd, R eps, R ai0, R aip0) {
  // Ai = Ai(0) f + Ai'(0) g with f'' = x f, g'' = x g, f(0)=1, g(0)=0, g'(0)=1.
  const R x = xd;
  const R x3 = x * x * x;
  R tf = 1;  // a_k x^{3k}
  R tg = x;  // b_k x^{3k+1}
  R f = tf, g = tg;
  R fp = 0;  // sum 3k a_k x^{3k-1}
  R gp = 1;  // sum (3k+1) b_k x^{3k}
  R tgp = 1;         // b_k x^{3k}
  R tfd = x * x / 6;  // a_{k+1} x^{3k+2}
  for (int k = 0; k < 400; ++k) {
    const R kk = k;
    tf *= x3 / ((3 * kk + 2) * (3 * kk + 3));
    tg *= x3 / ((3 * kk + 3) * (3 * kk + 4));
    tgp *= x3 / ((3 * kk + 3) * (3 * kk + 4));
    f += tf;
    g += tg;
    // derivative terms use the updated index k+1
    const R tfp = 3 * (kk + 1) * tfd;
    tfd *= x3 / ((3 * kk + 5) * (3 * kk + 6));
    const R tgp_term = tgp * (3 * (kk + 1) + 1);
    fp += tfp;
    gp += tgp_term;
    const R ratio = abs_r(x3) / ((3 * kk + 5) * (3 * kk + 6));
    const R scale = abs_r(f) + abs_r(g) + abs_r(fp) + abs_r(gp);
    if (ratio < R(0.5) &&
        abs_r(tf) + abs_r(tg) + abs_r(tfp) + abs_r(tgp_term) <=
            eps * scale / 100) {
      break;
    }
  }
  AiryValue out;
  out.ai = static_cast<double>(ai0 * f + aip0 * g);
  out.ai_prime = static_cast<double>(ai0 * fp + aip0 * gp);
  return out;
}

AiryValue airy_maclaurin(double xd) {
  // the series cancels badly for larger |x|; the largest terms grow like
  // exp((2/3)|x|^{3/2}), so switch to quad precision there
  if (std::abs(xd) > 4.0) {
    using q = __float128;
    return maclaurin_impl<q>(xd, q(1e-33), q(kAi0) + q(kAi0Lo), q(kAiPrime0) + q(kAiPrime0Lo));
  }
  return maclaurin_impl<ld>(xd, std::numeric_limits<ld>::epsilon(), kAi0, kAiPrime0);
}

AiryValue airy_asymptotic(double xd) {
  const ld pi = std::numbers::pi_v<ld>;
  const ld t = std::abs(static_cast<ld>(xd));
  const ld zeta = 2 * t * std::sqrt(t) / 3;
  const ld eps = std::numeric_limits<ld>::epsilon();

  // u_k, v_k of the standard Airy asymptotic series, truncated at the
  // smallest term.
  std::array<ld, 64> u{}, v{};
  u[0] = 1;
  v[0] = 1;
  int kmax = 1;
  ld prev = 1;
  for (int k = 1; k < 64; ++k) {
    const ld kk = k;
    u[k] = u[k - 1] * (6 * kk - 5) * (6 * kk - 3) * (6 * kk - 1) / ((2 * kk - 1) * 216 * kk);
    v[k] = -u[k] * (6 * kk + 1) / (6 * kk - 1);
    const ld term = std::abs(u[k]) / std::pow(zeta, kk) + std::abs(v[k]) / std::pow(zeta, kk);
    if (term > prev) break;
    kmax = k + 1;
    prev = term;
    if (term < eps * 1e-3L) break;
  }

  AiryValue out;
  if (xd > 0) {
    ld su = 0, sv = 0, zp = 1;
    for (int k = 0; k < kmax; ++k) {
      const ld sign = (k % 2 == 0) ? 1 : -1;
      su += sign * u[k] / zp;
      sv += sign * v[k] / zp;
      zp *= zeta;
    }
    const ld pref = std::exp(-zeta) / (2 * std::sqrt(pi));
    const ld q = std::pow(t, 0.25L);
    out.ai = static_cast<double>(pref / q * su);
    out.ai_prime = static_cast<double>(-pref * q * sv);
  } else {
    ld ue = 0, uo = 0, ve = 0, vo = 0, zp = 1;
    for (int k = 0; k < kmax; ++k) {
      const int j = k / 2;
      const ld sign = (j % 2 == 0) ? 1 : -1;
      if (k % 2 == 0) {
        ue += sign * u[k] / zp;
        ve += sign * v[k] / zp;
      } else {
        uo += sign * u[k] / zp;
        vo += sign * v[k] / zp;
      }
      zp *= zeta;
    }
    const ld phase = zeta - pi / 4;
    const ld c = std::cos(phase), s = std::sin(phase);
    const ld q = std::pow(t, 0.25L);
    const ld rp = 1 / std::sqrt(pi);
    out.ai = static_cast<double>(rp / q * (c * ue + s * uo));
    out.ai_prime = static_cast<double>(rp * q * (s * ve - c * vo));
  }
  return out;
}

}  // namespace detail

AiryValue airy_ai(double x) {
  check_airy_argument(x);
  if (std::abs(x) <= 8.0) return detail::airy_maclaurin(x);
  return detail::airy_asymptotic(x);
}

const PhaseConvention& phase_convention() {
  static const PhaseConvention convention = [] {
    PhaseConvention c;
    if (const char* env = std::getenv("ASTAU_NU_SIGN")) {
      const std::string v(env);
      if (v == "-1" || v == "-") c.sign_nu = -1;
    }
    return c;
  }();
  return convention;
}

cplx phase_nu(cplx w, double s) {
  const double sign = phase_convention().sign_nu;
  return sign * (s * w - (4.0 / 3.0) * w * w * w);
}

std::complex<long double> phase_nu(std::complex<long double> w, long double s) {
  const long double sign = phase_convention().sign_nu;
  return sign * (s * w - (4.0L / 3.0L) * w * w * w);
}

SeedMoments seed_moments(double s, double pole, const SeedConfig& cfg) {
  if (!std::isfinite(s) || std::abs(s) > 50.0) {
    throw ArgumentError("seed integrals: |s| must not exceed 50");
  }
  if (std::abs(-cfg.eps - pole) < 1e-12) {
    throw NumericalError(NumericalFailure::contour_collision,
                         "seed contour Re w = -eps passes through the pole w = " + std::to_string(pole));
  }
  // same geometry as quad::vertical_contour, but with an extended-precision rule
  const auto probe = quad::vertical_contour(quad::Side::left, cfg.eps, s, 1, cfg.tail_tol);
  const ld Y = probe.half_length;
  const auto rule = quad::gauss_legendre_t<ld>(cfg.order);

  const cld end_top(-static_cast<ld>(cfg.eps), Y);
  const ld tail = std::abs(std::exp(phase_nu(end_top, static_cast<ld>(s))));
  if (!(tail <= 10 * static_cast<ld>(cfg.tail_tol))) {
    throw NumericalError(NumericalFailure::tail_bound,
                         "|e^nu| at the contour end exceeds the requested tail tolerance");
  }

  SeedMoments m;
  cld a = 0, a1 = 0, a2 = 0, c = 0;
  const cld p(pole, 0);
  for (int j = 0; j < cfg.order; ++j) {
    const cld w(-static_cast<ld>(cfg.eps), Y * rule.nodes[j]);
    const cld dw(0, Y * rule.weights[j]);
    const cld e = std::exp(phase_nu(w, static_cast<ld>(s))) * dw;
    a += e;
    a1 += w * e;
    a2 += w * w * e;
    c += e / (w - p);
  }
  const cld norm(0, 2 * std::numbers::pi_v<ld>);
  m.a = (a / norm).real();
  m.a_prime = (a1 / norm).real();
  m.a_second = (a2 / norm).real();
  m.c = (c / norm).real();
  return m;
}

double seed_A(double s, const SeedConfig& cfg) { return static_cast<double>(seed_moments(s, -1.0, cfg).a); }

double seed_A_prime(double s, const SeedConfig& cfg) {
  return static_cast<double>(seed_moments(s, -1.0, cfg).a_prime);
}

double seed_A_second(double s, const SeedConfig& cfg) {
  return static_cast<double>(seed_moments(s, -1.0, cfg).a_second);
}

double seed_C(double s, const SeedConfig& cfg) { return seed_C_pole(s, -1.0, cfg); }

double seed_C_pole(double s, double pole, const SeedConfig& cfg) {
  return static_cast<double>(seed_moments(s, pole, cfg).c);
}

double closure_residual(int sigma, double s, double h, const SeedConfig& cfg) {
  const double dc = (seed_C(s + h, cfg) - seed_C(s - h, cfg)) / (2 * h);
  return std::abs(dc - sigma * (seed_A(s, cfg) - seed_C(s, cfg)));
}

int closure_sign() {
  static const int sign = [] {
    double plus = 0, minus = 0;
    for (double s : {0.0, 1.0}) {
      plus += closure_residual(+1, s);
      minus += closure_residual(-1, s);
    }
    return plus <= minus ? +1 : -1;
  }();
  return sign;
}

}  // namespace astau::special
