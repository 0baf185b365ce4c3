#include "astau/airy_fredholm.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include <Eigen/Dense>

#include "astau/linalg.hpp"
#include "astau/special_functions.hpp"

namespace astau::airy {

namespace {

constexpr double kTaylorRadius = 2e-3;
constexpr int kTaylorTerms = 7;

// K(x, x + d) = -sum_{k>=1} d^{k-1}/k! (f f^(k+1) - f' f^(k)), f = Ai,
// with f^(n) = a_n(x) f + b_n(x) f' generated from f'' = x f.
double kernel_taylor(double x, double d, double f, double fp) {
  // polynomial coefficients of a_n, b_n in x (degree < 8 is plenty here)
  constexpr int kDeg = 8;
  using Poly = std::array<double, kDeg>;
  auto eval = [x](const Poly& p) {
    double acc = 0;
    for (int i = kDeg - 1; i >= 0; --i) acc = acc * x + p[i];
    return acc;
  };
  auto deriv = [](const Poly& p) {
    Poly out{};
    for (int i = 1; i < kDeg; ++i) out[i - 1] = i * p[i];
    return out;
  };
  auto times_x = [](const Poly& p) {
    Poly out{};
    for (int i = 0; i + 1 < kDeg; ++i) out[i + 1] = p[i];
    return out;
  };
  std::vector<double> deriv_val(kTaylorTerms + 2);
  Poly a{}, b{};
  a[0] = 1;  // f^(0) = f
  for (int n = 0; n <= kTaylorTerms + 1; ++n) {
    deriv_val[n] = eval(a) * f + eval(b) * fp;
    Poly a_next = deriv(a), b_next = deriv(b);
    const Poly xb = times_x(b);
    for (int i = 0; i < kDeg; ++i) {
      a_next[i] += xb[i];
      b_next[i] += a[i];
    }
    a = a_next;
    b = b_next;
  }
  double sum = 0, dp = 1, fact = 1;
  for (int k = 1; k <= kTaylorTerms; ++k) {
    fact *= k;
    sum -= dp / fact * (f * deriv_val[k + 1] - fp * deriv_val[k]);
    dp *= d;
  }
  return sum;
}

double kernel_from_values(double x, double y, const special::AiryValue& ax, const special::AiryValue& ay) {
  const double d = y - x;
  if (d == 0.0) return ax.ai_prime * ax.ai_prime - x * ax.ai * ax.ai;
  if (std::abs(d) < kTaylorRadius) {
    // expand about the smaller argument so that K(x,y) and K(y,x) coincide
    if (d > 0) return kernel_taylor(x, d, ax.ai, ax.ai_prime);
    return kernel_taylor(y, -d, ay.ai, ay.ai_prime);
  }
  return (ax.ai * ay.ai_prime - ax.ai_prime * ay.ai) / (x - y);
}

}  // namespace

double airy_kernel(double x, double y) {
  return kernel_from_values(x, y, special::airy_ai(x), special::airy_ai(y));
}

double tau_on_grid(const quad::HalfLineGrid& grid, double kappa, bool symmetric) {
  const auto n = static_cast<Eigen::Index>(grid.size());
  std::vector<special::AiryValue> ai(n);
  for (Eigen::Index j = 0; j < n; ++j) ai[j] = special::airy_ai(grid.nodes[j]);
  Eigen::MatrixXd m(n, n);
  const double k2 = kappa * kappa;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k <= j; ++k) {
      const double kv = kernel_from_values(grid.nodes[j], grid.nodes[k], ai[j], ai[k]);
      if (symmetric) {
        const double v = -k2 * std::sqrt(grid.weights[j]) * kv * std::sqrt(grid.weights[k]);
        m(j, k) = v;
        m(k, j) = v;
      } else {
        m(j, k) = -k2 * kv * grid.weights[k];
        m(k, j) = -k2 * kv * grid.weights[j];
      }
    }
    m(j, j) += 1.0;
  }
  const auto ld = linalg::log_determinant(m);
  return ld.phase.real() * std::exp(ld.log_abs);
}

TauResult tau_airy(double s, double kappa, const AiryConfig& cfg) {
  if (!std::isfinite(s) || !std::isfinite(kappa)) throw ArgumentError("tau_airy: non-finite argument");
  if (std::abs(kappa) > 1.0) throw ArgumentError("tau_airy: |kappa| must not exceed 1");
  if (std::abs(s) > 50.0 || std::abs(s + cfg.truncation) > 50.0) {
    throw ArgumentError("tau_airy: grid [s, s + T] leaves the supported Airy range");
  }
  TauResult r;
  r.method = Method::airy;
  r.s = s;
  r.kappa = kappa;
  r.config.quad_order = cfg.order;
  r.config.truncation = cfg.truncation;

  r.value = tau_on_grid(quad::halfline_grid(s, cfg.truncation, cfg.order), kappa, cfg.symmetric);
  if (cfg.estimate_error && cfg.order >= 2) {
    const double coarse = tau_on_grid(quad::halfline_grid(s, cfg.truncation, cfg.order / 2), kappa, cfg.symmetric);
    r.error_estimate = std::abs(r.value - coarse);
  }
  const double tail = special::airy_ai(s + cfg.truncation).ai;
  if (tail * tail * cfg.truncation > 1e-14) {
    r.warnings.push_back("truncation too small: Ai(s+T)^2 T = " + std::to_string(tail * tail * cfg.truncation));
  }
  return r;
}

}  // namespace astau::airy
