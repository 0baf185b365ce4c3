#include <doctest.h>

#include <cmath>

#include "astau/calibration.hpp"

using namespace astau;

namespace {
const double kC = std::pow(2.0, -2.0 / 3.0);
}

TEST_CASE("calibration picks 2^{-2/3}") {
  const auto r = calibrate(PipelineConfig{});
  CHECK(r.c == doctest::Approx(kC).epsilon(1e-8));
  CHECK(r.residual <= 1e-10);
  CHECK(r.candidates.size() == 3);
  for (const auto& cand : r.candidates) {
    if (std::abs(cand.c - kC) > 1e-6) CHECK(cand.residual > 1e-3);
  }
  // idempotent
  CHECK(calibrate(PipelineConfig{}).c == doctest::Approx(r.c).epsilon(1e-10));
}

TEST_CASE("kappa = 0 makes every candidate exact") {
  for (double c : {1.0, kC, 1 / kC}) CHECK(calibration_residual(c, 0.0, {-1, 0, 1}, PipelineConfig{}) == 0.0);
}

TEST_CASE("evaluate_tau dispatches") {
  PipelineConfig cfg;
  CHECK(evaluate_tau(Method::airy, 0, 0.5, cfg).method == Method::airy);
  CHECK(evaluate_tau(Method::widom, 0, 0.5, cfg).method == Method::widom);
  CHECK(evaluate_tau(Method::minor, 0, 0.5, cfg).method == Method::minor);
  CHECK(parse_method("minor") == Method::minor);
  CHECK_THROWS_AS(parse_method("fredholm"), ArgumentError);
}

TEST_CASE("the Airy frame needs a calibration constant") {
  PipelineConfig cfg;
  CHECK_THROWS_AS(tau_airy_frame(Method::widom, 0, 0.5, cfg), ArgumentError);
  CHECK_NOTHROW(tau_airy_frame(Method::airy, 0, 0.5, cfg));
  cfg.calibration = kC;
  CHECK(std::abs(tau_airy_frame(Method::widom, 0.7, 0.5, cfg) - tau_airy_frame(Method::airy, 0.7, 0.5, cfg)) <= 1e-12);
}

TEST_CASE("u^2 = -(log tau)'' by each method") {
  PipelineConfig cfg;
  cfg.calibration = kC;
  const auto sol = ode::solve_pii(0.5);
  for (Method m : {Method::airy, Method::widom, Method::minor}) {
    for (double x : {-1.0, 1.0}) CHECK(verify_u_squared(x, sol, m, cfg) <= 1e-4);
  }
  CHECK(verify_u_squared(0.5, 0.0, Method::airy, cfg) == 0.0);
  CHECK(log_tau_dds2(0.3, 0.0, 1e-2, Method::widom, cfg) == 0.0);
}
