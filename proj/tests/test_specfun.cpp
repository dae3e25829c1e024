#include <doctest.h>

#include "cuspidal/params.hpp"
#include "cuspidal/specfun.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace cuspidal;

TEST_CASE("polynomial arithmetic is exact") {
  const Polynomial p({Rational(1), Rational(2)});   // 1 + 2u
  const Polynomial q({Rational(-1), Rational(1)});  // u - 1
  CHECK((p * q) == Polynomial({Rational(-1), Rational(-1), Rational(2)}));
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(p.derivative() == Polynomial::constant(Rational(2)));
  CHECK(p.shifted(Rational(1)) == Polynomial({Rational(3), Rational(2)}));
  CHECK(p(Rational(1, 2)) == Rational(2));
  CHECK(q.evaluate(3.0) == doctest::Approx(2.0));
}

TEST_CASE("zonal polynomials: normalization and small cases") {
  for (int q = 2; q <= 8; ++q) {
    for (double x : {-1.0, -0.3, 0.0, 0.7, 1.0}) CHECK(zonal(0, q, x) == 1.0);
  }
  for (double th : {0.1, 1.0, 2.5}) CHECK(zonal(1, 4, std::cos(th)) == doctest::Approx(std::cos(th)).epsilon(1e-14));
  for (double x : {-0.9, -0.2, 0.4, 0.95}) CHECK(zonal(2, 3, x) == doctest::Approx((4 * x * x - 1) / 3).epsilon(1e-14));
}

TEST_CASE("zonal is bounded by 1 and equals 1 at 1") {
  for (int q = 2; q <= 8; ++q) {
    for (int mu = 0; mu <= 20; ++mu) {
      CHECK(std::abs(zonal(mu, q, 1.0) - 1.0) <= 1e-12);
      for (int i = 0; i <= 100; ++i) CHECK(std::abs(zonal(mu, q, -1.0 + 0.02 * i)) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("zonal coefficients agree with the recurrence") {
  for (int q = 2; q <= 6; ++q) {
    for (int mu = 0; mu <= 8; ++mu) {
      const auto poly = zonal_coefficients(mu, q);
      CHECK(poly.degree() == mu);
      for (double x : {-0.8, 0.1, 0.6}) CHECK(poly.evaluate(x) == doctest::Approx(zonal(mu, q, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("zonal polynomials are orthogonal for the weight (1-x^2)^{(q-2)/2}") {
  // Midpoint rule in x = cos(theta) with weight sin^{q-1}(theta) d theta.
  const int q = 3;
  const int n = 20000;
  for (int a = 0; a <= 3; ++a) {
    for (int b = a + 1; b <= 4; ++b) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) {
        const double th = std::numbers::pi * (i + 0.5) / n;
        sum += zonal(a, q, std::cos(th)) * zonal(b, q, std::cos(th)) * std::pow(std::sin(th), q - 1);
      }
      CHECK(std::abs(sum * std::numbers::pi / n) < 1e-7);
    }
  }
}

TEST_CASE("zonal domain errors") {
  CHECK_THROWS(zonal(-1, 3, 0.0));
  CHECK_THROWS(zonal(1, 1, 0.0));
  CHECK_THROWS(zonal(1, 3, 1.5));
}

TEST_CASE("laplacian_step reference forms") {
  const RadialForm one{Polynomial::constant(Rational(1)), Rational(-1)};
  const auto r = laplacian_step(one, 1);
  CHECK(r.poly == Polynomial({Rational(-2), Rational(6)}));
  CHECK(r.nu == Rational(-3));

  const RadialForm constant{Polynomial::constant(Rational(1)), Rational(0)};
  CHECK(laplacian_step(constant, 4).poly.is_zero());

  const RadialForm u{Polynomial({Rational(0), Rational(1)}), Rational(0)};
  const auto ru = laplacian_step(u, 3);
  CHECK(ru.nu == Rational(-2));
  CHECK(ru.poly == Polynomial({Rational(6), Rational(12), Rational(6)}));
}

TEST_CASE("laplacian_step matches a finite-difference Laplacian on random inputs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> deg(0, 3);
  std::uniform_int_distribution<int> dim(1, 5);
  std::uniform_int_distribution<int> half_nu(-9, -1);
  std::uniform_real_distribution<double> pos(-1.5, 1.5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.push_back(Rational(coef(rng)));
    c.back() = c.back() == 0 ? Rational(1) : c.back();
    const RadialForm form{Polynomial(c), Rational(half_nu(rng), 2)};
    const int p = dim(rng);
    const auto lap = laplacian_step(form, p);
    CHECK(lap.nu == form.nu - 2);

    // Point on the first axis, plus a transverse offset so every coordinate contributes.
    std::vector<double> x(static_cast<std::size_t>(p));
    for (auto& xi : x) xi = pos(rng);
    auto F = [&](const std::vector<double>& y) {
      double u = 0.0;
      for (double v : y) u += v * v;
      return form.evaluate(u);
    };
    const double h = 1e-3;
    double fd = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto xp = x;
      auto xm = x;
      xp[i] += h;
      xm[i] -= h;
      fd += (F(xp) - 2.0 * F(x) + F(xm)) / (h * h);
    }
    double u = 0.0;
    for (double v : x) u += v * v;
    const double exact = lap.evaluate(u);
    CHECK(fd == doctest::Approx(exact).epsilon(1e-4).scale(1.0));
  }
}

TEST_CASE("phi_nm on (1,7) and (1,5)") {
  const auto six_u_minus_two = Polynomial({Rational(-2), Rational(6)});
  const auto a = phi_nm(make_space(1, 7), 2, 1);
  CHECK(a.poly == six_u_minus_two);
  CHECK(a.nu == Rational(-3));
  const auto b = phi_nm(make_space(1, 5), 1, 1);
  CHECK(b.poly == six_u_minus_two);
  CHECK(b.nu == Rational(-3));
}

TEST_CASE("phi_nm has degree m and exponent n - 2m - rho_c") {
  for (int p = 1; p <= 4; ++p) {
    for (int q = p + 4; q <= 12; ++q) {
      const auto space = make_space(p, q);
      for (const auto& ds : enumerate_discrete_series(space, Rational(10))) {
        if (!ds.exceptional()) continue;
        const auto phi = phi_nm(space, ds.n, ds.m);
        CHECK(phi.poly.degree() == ds.m);
        CHECK(phi.nu == Rational(ds.n - 2 * ds.m) - space.rho_c);
      }
    }
  }
}

TEST_CASE("beta integrals") {
  CHECK(beta_integral(1.0, 3.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(beta_linear_integral(1.0, 4.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(beta_linear_integral(2.0, 6.0) == doctest::Approx(1.0 / 60.0).epsilon(1e-14));
  CHECK(beta_linear_integral(1.5, 4.0) == 0.0);
  CHECK(beta_linear_integral(1.25, 3.5) == 0.0);
  CHECK(beta_linear_integral(1.0, 3.5) != 0.0);
  CHECK_THROWS(beta_linear_integral(2.0, 3.0));
  CHECK_THROWS(beta_integral(0.0, 1.0));
}
