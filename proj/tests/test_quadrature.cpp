#include <doctest.h>

#include "cuspidal/quadrature.hpp"

#include <cmath>
#include <numbers>

using namespace cuspidal;

TEST_CASE("polynomials and smooth functions") {
  quad::Tolerance tol;
  const auto a = quad::integrate([](double x) { return x * x * x - 2 * x; }, 0.0, 2.0, tol);
  CHECK(a.converged);
  CHECK(a.value == doctest::Approx(0.0).scale(1.0));
  const auto b = quad::integrate([](double x) { return std::exp(-x * x); }, -6.0, 6.0, tol);
  CHECK(b.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
  CHECK(b.error <= tol.rel * b.l1 + tol.abs);
}

TEST_CASE("integrable endpoint singularity") {
  quad::Tolerance tol;
  tol.rel = 1e-9;
  const auto r = quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, tol);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("oscillatory integrand with cancellation") {
  quad::Tolerance tol;
  const auto r = quad::integrate([](double x) { return std::sin(x); }, 0.0, 20 * std::numbers::pi, tol);
  CHECK(r.converged);
  CHECK(std::abs(r.value) < 1e-9);
  // l1 is the Kronrod sum of |f|, a lower estimate of the true 40 on coarse panels.
  CHECK(r.l1 > 20.0);
  CHECK(r.l1 <= 40.0 * (1 + 1e-8));
}

TEST_CASE("subdivision cap reports non-convergence") {
  quad::Tolerance tol;
  tol.rel = 1e-15;
  tol.abs = 0.0;
  tol.max_subdivisions = 3;
  const auto r = quad::integrate([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0.0, 1.0, tol);
  CHECK_FALSE(r.converged);
  CHECK(r.subdivisions <= 3);
}

TEST_CASE("nested integrand errors propagate") {
  quad::Tolerance tol;
  const auto r = quad::integrate([](double x) { return quad::Estimate{x, 1e-6}; }, 0.0, 1.0, tol);
  CHECK(r.value == doctest::Approx(0.5));
  CHECK(r.error >= 1e-6 * 0.999);
}
