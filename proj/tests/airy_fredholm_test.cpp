#include <doctest.h>

#include <boost/math/special_functions/airy.hpp>
#include <cmath>

#include "astau/airy_fredholm.hpp"
#include "support/generators.hpp"

using namespace astau;
using astau::testing::for_all;
using astau::testing::Gen;

namespace {

double boost_kernel(double x, double y) {
  using boost::math::airy_ai;
  using boost::math::airy_ai_prime;
  if (x == y) return airy_ai_prime(x) * airy_ai_prime(x) - x * airy_ai(x) * airy_ai(x);
  return (airy_ai(x) * airy_ai_prime(y) - airy_ai_prime(x) * airy_ai(y)) / (x - y);
}

}  // namespace

TEST_CASE("airy_kernel values") {
  // Ai'(0)^2 from the Gamma-function closed form
  CHECK(airy::airy_kernel(0, 0) == doctest::Approx(0.066987483779663987).epsilon(1e-14));
  CHECK(std::abs(airy::airy_kernel(0.3, 1.1) - airy::airy_kernel(1.1, 0.3)) <= 1e-14);
}

TEST_CASE("property: kernel is symmetric, continuous across the diagonal and matches the oracle") {
  for_all(200, 21, [](Gen& g, int) {
    const double x = g.real(-8, 8);
    const double y = g.coin() ? x + g.real(-1e-3, 1e-3) : g.real(-8, 8);
    CHECK(airy::airy_kernel(x, y) == airy::airy_kernel(y, x));
    CHECK(std::abs(airy::airy_kernel(x, y) - boost_kernel(x, std::abs(x - y) < 1e-3 ? x : y)) <=
          (std::abs(x - y) < 1e-3 ? 2e-3 : 1e-12));
    CHECK(std::abs(airy::airy_kernel(x, x) - boost_kernel(x, x)) <= 1e-12);
  });
}

TEST_CASE("tau_airy frozen values") {
  const auto r = airy::tau_airy(0, 0.5);
  CHECK(r.value == doctest::Approx(0.9923427924449086).epsilon(1e-13));
  CHECK(r.method == Method::airy);
  CHECK(r.error_estimate <= 1e-12);
  CHECK(airy::tau_airy(std::pow(2.0, -2.0 / 3.0), 0.25).value == doctest::Approx(0.9995758265724328).epsilon(1e-13));
}

TEST_CASE("tau_airy edge cases") {
  CHECK(airy::tau_airy(-3, 0.0).value == 1.0);
  CHECK(airy::tau_airy(3, 0.0).value == 1.0);
  CHECK(std::abs(airy::tau_airy(10, 0.5).value - 1) <= 1e-3);
  CHECK_THROWS_AS(airy::tau_airy(0, 1.5), ArgumentError);
  CHECK_THROWS_AS(airy::tau_airy(45, 0.5), ArgumentError);
  CHECK_THROWS_AS(airy::tau_airy(NAN, 0.5), ArgumentError);
}

TEST_CASE("Tracy-Widom value at kappa = 1 is self-convergent") {
  airy::AiryConfig a, b;
  a.order = 120;
  b.order = 240;
  const double v = airy::tau_airy(0, 1.0, a).value;
  CHECK(std::abs(v - airy::tau_airy(0, 1.0, b).value) <= 1e-10);
  // frozen from the order-400 run
  CHECK(v == doctest::Approx(0.96937282835526362).epsilon(1e-12));
}

TEST_CASE("property: Nystrom self-convergence and symmetric/unsymmetric agreement") {
  for_all(6, 23, [](Gen& g, int) {
    const double s = g.real(-2, 2), kappa = g.real(0.1, 1.0);
    airy::AiryConfig a, b, u;
    a.order = 160;
    b.order = 320;
    u.symmetric = false;
    const double v = airy::tau_airy(s, kappa, a).value;
    CHECK(std::abs(v - airy::tau_airy(s, kappa, b).value) <= 1e-10);
    const double sym = airy::tau_airy(s, kappa).value;
    CHECK(std::abs(sym - airy::tau_airy(s, kappa, u).value) <= 1e-12 * std::abs(sym));
  });
}

TEST_CASE("property: tau_airy is nondecreasing in s") {
  for (double kappa : {0.3, 0.7, 0.95}) {
    double prev = 0;
    for (double s = -4; s <= 6; s += 0.25) {
      const double v = airy::tau_airy(s, kappa).value;
      CHECK(v >= prev - 1e-14);
      prev = v;
    }
  }
}

TEST_CASE("truncation warning for a short half-line") {
  airy::AiryConfig c;
  c.truncation = 1.0;
  CHECK_FALSE(airy::tau_airy(-2, 0.5, c).warnings.empty());
  CHECK(airy::tau_airy(-2, 0.5).warnings.empty());
}

TEST_CASE("log_tau_dds2 helper") {
  CHECK(airy::log_tau_dds2([](double) { return 1.0; }, 0.3, 1e-2) == 0.0);
  // log(e^{x^2}) has second derivative 2
  CHECK(airy::log_tau_dds2([](double x) { return std::exp(x * x); }, 0.3, 1e-2) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK_THROWS_AS(airy::log_tau_dds2([](double) { return 1.0; }, 0.0, 1.0), ArgumentError);
  CHECK_THROWS_AS(airy::log_tau_dds2([](double) { return -1.0; }, 0.0, 1e-2), NumericalError);
}
