#include <doctest.h>

#include "cuspidal/analysis.hpp"

#include <cmath>
#include <numbers>

using namespace cuspidal;

namespace {

std::vector<RadonSample> synthetic(const std::vector<double>& grid, double (*g)(double), double err = 1e-14) {
  std::vector<RadonSample> out;
  for (double s : grid) {
    RadonSample r;
    r.s = s;
    r.value = g(s);
    r.error_estimate = err;
    out.push_back(r);
  }
  return out;
}

GeneratingFunction gen(int p, int q, Rational lambda) {
  const auto space = make_space(p, q);
  return make_generating_function(space, make_discrete_series(space, lambda));
}

}  // namespace

TEST_CASE("exact recovery of a single exponential") {
  const auto samples = synthetic(uniform_grid(-4.0, 2.0, 0.25), [](double s) { return 3.0 * std::exp(-s); });
  const auto fit = fit_exponentials(samples, 0.5, 1.5);
  CHECK(fit.C1 == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(std::abs(fit.C2) < 1e-12);
  CHECK(fit.residual < 1e-12);
  const auto single = fit_single_exponent(samples);
  CHECK(single.exponent == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(single.C == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("zero samples fit to zero") {
  const auto samples = synthetic(uniform_grid(-2.0, 2.0, 0.5), [](double) { return 0.0; }, 0.0);
  const auto fit = fit_exponentials(samples, 0.5, 0.5);
  CHECK(fit.C1 == 0.0);
  CHECK(fit.C2 == 0.0);
  CHECK(decide_cuspidality(samples, fit) == Verdict::CuspidalNumeric);
  CHECK_THROWS_AS(fit_single_exponent(samples), std::invalid_argument);
}

TEST_CASE("fit preconditions") {
  const auto few = synthetic({0.0, 1.0, 2.0}, [](double s) { return s; });
  CHECK_THROWS_AS(fit_exponentials(few, 0.5, 0.5), std::invalid_argument);
  const auto ok = synthetic({0.0, 1.0, 2.0, 3.0}, [](double s) { return s; });
  CHECK_THROWS_AS(fit_exponentials(ok, 0.0, 0.5), std::invalid_argument);
  const auto flat = synthetic({1.0, 1.0, 1.0, 1.0}, [](double) { return 1.0; });
  CHECK_THROWS_AS(fit_exponentials(flat, 0.5, 0.5), IllConditioned);
}

TEST_CASE("verdicts on the reference parameters") {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-12;
  const auto a = make_profile(gen(2, 2, Rational(1, 2)), default_s_grid(make_space(2, 2)), cfg);
  CHECK(a.verdict == Verdict::CuspidalNumeric);
  const auto b = make_profile(gen(1, 3, Rational(1, 2)), default_s_grid(make_space(1, 3)), cfg);
  CHECK(b.verdict == Verdict::NonCuspidalNumeric);
  REQUIRE(b.single);
  CHECK(b.single->exponent == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(b.C1 == doctest::Approx(std::numbers::pi).epsilon(1e-9));
  const auto c = make_profile(gen(1, 5, Rational(1, 2)), default_s_grid(make_space(1, 5)), cfg);
  CHECK(c.verdict == Verdict::NonCuspidalNumeric);
  REQUIRE(c.single);
  CHECK(c.single->exponent == doctest::Approx(-2.0).epsilon(1e-6));
}

TEST_CASE("a failed sample makes the verdict inconclusive") {
  auto samples = synthetic(uniform_grid(-2.0, 2.0, 0.5), [](double s) { return std::exp(-s); });
  samples[3].converged = false;
  CHECK(decide_cuspidality(samples, fit_exponentials(samples, 0.5, 1.5)) == Verdict::Inconclusive);
}

TEST_CASE("both exponentials present is not a clean signal") {
  const auto samples =
      synthetic(uniform_grid(-3.0, 3.0, 0.25), [](double s) { return std::exp(-s) + std::exp(-2.0 * s); }, 1e-12);
  const auto fit = fit_exponentials(samples, 0.5, 1.5);
  CHECK(fit.C2 == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(decide_cuspidality(samples, fit) == Verdict::Inconclusive);
}

TEST_CASE("ODE defect on synthetic and real profiles") {
  const double lambda = 0.5;
  const auto grid = uniform_grid(-2.0, 1.0, 0.1);
  const auto exact = synthetic(grid, [](double s) { return std::exp(0.5 * s); });
  const double d = verify_A_ode(exact, lambda, 0.0);
  // Central differences of e^{lambda s}: relative defect lambda^2 h^2 / 12 to leading order.
  CHECK(d == doctest::Approx(0.25 * 0.01 / 12.0).epsilon(1e-2));

  const auto zeros = synthetic(grid, [](double) { return 0.0; }, 1e-15);
  CHECK(verify_A_ode(zeros, lambda, 0.5) == 0.0);

  QuadratureConfig cfg;
  cfg.rel_tol = 1e-13;
  const auto f = gen(1, 3, Rational(1, 2));
  const double coarse = verify_A_ode(radon_profile(f, grid, cfg), lambda, 1.5);
  const double fine = verify_A_ode(radon_profile(f, uniform_grid(-2.0, 1.0, 0.05), cfg), lambda, 1.5);
  CHECK(coarse <= 1e-2);
  CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.05));

  CHECK_THROWS_AS(verify_A_ode(synthetic({0.0, 0.1, 0.3}, [](double) { return 1.0; }), lambda, 0.0),
                  std::invalid_argument);
}

TEST_CASE("exceptional limit oracles") {
  const auto s15 = make_space(1, 5);
  CHECK(exceptional_limit_oracle(s15, make_discrete_series(s15, Rational(1, 2))) ==
        doctest::Approx(3 * std::numbers::pi).epsilon(1e-9));
  const auto s17 = make_space(1, 7);
  CHECK(exceptional_limit_oracle(s17, make_discrete_series(s17, Rational(1, 2))) ==
        doctest::Approx(-7.5 * std::numbers::pi).epsilon(1e-8));
  CHECK_THROWS_AS(exceptional_limit_oracle(s15, make_discrete_series(s15, Rational(3, 2))), std::invalid_argument);
}

TEST_CASE("odd oracle is nonzero across exceptional odd parameters") {
  for (int p = 1; p <= 3; ++p) {
    for (int q = p + 4; q <= 10; ++q) {
      const auto space = make_space(p, q);
      for (const auto& ds : enumerate_discrete_series(space, Rational(4))) {
        if (ds.tag != SeriesTag::ExceptionalOdd) continue;
        // The odd function carries one extra cosh t, so the second beta factor has l - 2k - 1 = -n.
        const double k = 0.5 * (space.beta + 1);
        const double l = to_double(ds.lambda + space.rho) + 1.0 - space.alpha;
        CHECK(l - 2 * k - 1 == doctest::Approx(-ds.n));
        CHECK(exceptional_limit_oracle(space, ds) != 0.0);
      }
    }
  }
}

TEST_CASE("growth trend detection") {
  CHECK(has_growth_trend({1, 2, 3, 4, 5, 6}));
  CHECK(has_growth_trend({6, 5, 4, 3, 2, 1}));
  CHECK(has_growth_trend({1, 1.1, 1.3, 2, 4, 8, 16}, GrowthEnd::High));
  CHECK_FALSE(has_growth_trend({16, 8, 4, 2, 1, 1.1, 1.3}, GrowthEnd::High));
  CHECK_FALSE(has_growth_trend({1, 3, 2, 3.5, 2.5, 3}));
  // Increments halving each step: bounded.
  CHECK_FALSE(has_growth_trend({0, 1, 1.5, 1.75, 1.875, 1.9375}));
  CHECK(growth_end_for({-4, -2, 0}) == GrowthEnd::Low);
  CHECK(growth_end_for({0, 2}) == GrowthEnd::High);
  CHECK(growth_end_for({-1, 1}) == GrowthEnd::Both);
}

TEST_CASE("decay bound in the directions where it holds") {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-10;
  CHECK(verify_decay_lemma(gen(2, 2, Rational(1, 2)), 0.5, uniform_grid(-4.0, 4.0, 0.5), cfg));
  CHECK(verify_decay_lemma(gen(1, 3, Rational(1, 2)), 0.5, uniform_grid(-4.0, 0.0, 0.5), cfg));
  const auto space = make_space(4, 2);
  CHECK(verify_decay_lemma(make_power(space, to_double(space.rho) + 1.0), 1.0, uniform_grid(-4.0, 4.0, 0.5), cfg));
  CHECK_THROWS_AS(verify_decay_lemma(gen(2, 2, Rational(1, 2)), 0.0, {0.0}), std::invalid_argument);
}

TEST_CASE("q = 1 conjugation symmetry") {
  const auto c = q1_conjugation_check(make_space(2, 1), Rational(1), {-1.0, 0.0, 1.0});
  CHECK(c.max_defect <= c.error_budget + 1e-15);
  CHECK_THROWS_AS(q1_conjugation_check(make_space(2, 2), Rational(1, 2), {0.0}), std::invalid_argument);
}
