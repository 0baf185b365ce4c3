#include <doctest.h>

#include <boost/math/special_functions/airy.hpp>
#include <cmath>

#include "astau/errors.hpp"
#include "astau/pii_ode.hpp"

using namespace astau;

TEST_CASE("zero coupling gives the zero solution") {
  const auto sol = ode::solve_pii(0.0);
  for (double u : sol.u) CHECK(u == 0.0);
  CHECK(sol.u_at(0.3) == 0.0);
}

TEST_CASE("frozen value and residual invariant") {
  const auto sol = ode::solve_pii(0.5);
  CHECK(sol.u_at(1.0) == doctest::Approx(0.067690016955475232).epsilon(1e-10));
  CHECK(sol.max_residual() <= 1e-8);
  CHECK(sol.s_grid.front() > sol.s_grid.back());
  CHECK(sol.accepted_steps > 0);
}

TEST_CASE("linearisation for small kappa") {
  const double kappa = 1e-4;
  const auto sol = ode::solve_pii(kappa);
  for (double s = -2; s <= 4; s += 0.125) CHECK(std::abs(sol.u_at(s) / kappa - boost::math::airy_ai(s)) <= 1e-5);
}

TEST_CASE("step-size robustness") {
  const double tol = 1e-10;
  const auto a = ode::solve_pii(0.5, 8, -6, tol);
  const auto b = ode::solve_pii(0.5, 8, -6, tol / 2);
  for (double s = -4; s <= 6; s += 0.25) CHECK(std::abs(a.u_at(s) - b.u_at(s)) <= 10 * tol);
}

TEST_CASE("interpolation matches grid values") {
  const auto sol = ode::solve_pii(0.7);
  for (std::size_t i = 0; i < sol.s_grid.size(); i += 97) CHECK(sol.u_at(sol.s_grid[i]) == doctest::Approx(sol.u[i]));
  CHECK_THROWS_AS(sol.u_at(20.0), ArgumentError);
}

TEST_CASE("argument guards") {
  CHECK_THROWS_AS(ode::solve_pii(1.5), ArgumentError);
  CHECK_THROWS_AS(ode::solve_pii(0.5, -1, 2, 1e-10), ArgumentError);
  CHECK_THROWS_AS(ode::solve_pii(0.5, 8, -6, 0.0), ArgumentError);
}
