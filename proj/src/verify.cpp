#include "cuspidal/verify.hpp"

#include "cuspidal/analysis.hpp"
#include "cuspidal/genfun.hpp"
#include "cuspidal/params.hpp"
#include "cuspidal/specfun.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace cuspidal {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string label(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

std::string label(int p, int q, const Rational& lambda) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," + to_string(lambda) + ")";
}

Check at_most(int criterion, std::string suite, std::string name, double measured, double tol) {
  return {criterion, std::move(suite), std::move(name), measured, tol, measured <= tol};
}

Check within(int criterion, std::string suite, std::string name, double measured, double target, double tol) {
  const double dev = std::abs(measured - target);
  return {criterion, std::move(suite), std::move(name), dev, tol, dev <= tol};
}

Check relative(int criterion, std::string suite, std::string name, double a, double b, double tol) {
  const double dev = std::abs(a - b) / std::max(std::abs(b), std::numeric_limits<double>::min());
  return {criterion, std::move(suite), std::move(name), dev, tol, dev <= tol};
}

Check holds(int criterion, std::string suite, std::string name, bool ok) {
  return {criterion, std::move(suite), std::move(name), ok ? 1.0 : 0.0, 1.0, ok};
}

double max_abs(const std::vector<RadonSample>& samples) {
  double m = 0.0;
  for (const auto& s : samples) m = std::max(m, std::abs(s.value));
  return m;
}

bool all_converged(const std::vector<RadonSample>& samples) {
  return std::all_of(samples.begin(), samples.end(), [](const RadonSample& s) { return s.converged; });
}

QuadratureConfig tight(double rel) {
  QuadratureConfig cfg;
  cfg.rel_tol = rel;
  return cfg;
}

GeneratingFunction gen(int p, int q, const Rational& lambda) {
  const auto space = make_space(p, q);
  return make_generating_function(space, make_discrete_series(space, lambda));
}

// Checks shared by the two exceptional suites and the spherical suite.
void non_cuspidal_profile_checks(std::vector<Check>& out, int criterion, const std::string& suite, int p, int q,
                                 const Rational& lambda, int expected_exponent) {
  const auto f = gen(p, q, lambda);
  const auto profile = make_profile(f, default_s_grid(f.space()), tight(1e-12));
  const std::string tag = label(p, q, lambda);
  out.push_back(holds(criterion, suite, tag + " all samples converged", all_converged(profile.samples)));
  out.push_back(holds(criterion, suite, tag + " verdict NonCuspidalNumeric",
                      profile.verdict == Verdict::NonCuspidalNumeric));
  const double exponent = profile.single ? profile.single->exponent : kInf;
  out.push_back(within(criterion, suite, tag + " fitted exponent vs " + std::to_string(expected_exponent),
                       exponent, expected_exponent, 1e-3));
  out.push_back(at_most(criterion, suite, tag + " |C2| / sigma_C2", std::abs(profile.C2) / profile.fit.sigma_C2, 1e3));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"classification", "vanishing", "spherical",  "exceptional-odd",
                                              "exceptional-even", "compact-support", "ode", "divergence",
                                              "oracles",          "decay"};
  return names;
}

std::vector<Check> run_suite(const std::string& name, const VerifyOptions& options) {
  if (name == "all") {
    std::vector<Check> all;
    for (const auto& n : suite_names()) {
      auto part = run_suite(n, options);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (name == "classification") return suite_classification();
  if (name == "vanishing") return suite_vanishing();
  if (name == "spherical") return suite_spherical();
  if (name == "exceptional-odd") return suite_exceptional_odd();
  if (name == "exceptional-even") return suite_exceptional_even();
  if (name == "compact-support") return suite_compact_support();
  if (name == "ode") return suite_ode();
  if (name == "divergence") return suite_divergence();
  if (name == "oracles") return suite_oracles(options);
  if (name == "decay") return suite_decay();
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<Check> suite_classification() {
  std::vector<Check> out;
  const Rational lambda_max(5);
  for (int p = 1; p <= 6; ++p) {
    for (int q = 1; q <= 6; ++q) {
      const auto space = make_space(p, q);
      const auto list = enumerate_discrete_series(space, lambda_max);
      int mismatches = 0;

      // Independent parameter set: half-integers 0 < |lambda| <= 5 with an integral K-type index.
      std::vector<Rational> expected;
      for (int k = -10; k <= 10; ++k) {
        if (k == 0 || (q > 1 && k < 0)) continue;
        const Rational lambda(k, 2);
        const Rational shift = q > 1 ? Rational(p - q + 1, 2) : (k > 0 ? Rational(p, 2) : Rational(-p, 2));
        if (is_integer(lambda + shift)) expected.push_back(lambda);
      }
      std::vector<Rational> got;
      for (const auto& ds : list) got.push_back(ds.lambda);
      std::sort(got.begin(), got.end());
      if (got != expected) ++mismatches;

      bool any_spherical_nc = false;
      bool any_exceptional = false;
      for (const auto& ds : list) {
        const Rational mu_exact = q > 1 ? ds.lambda + Rational(p - q + 1, 2)
                                        : (ds.lambda > 0 ? ds.lambda + Rational(p, 2) : ds.lambda - Rational(p, 2));
        const bool cuspidal_expected = q == 1 || mu_exact > 0;
        if (ds.cuspidal() != cuspidal_expected) ++mismatches;
        if (q <= p + 1 && !ds.cuspidal()) ++mismatches;
        if (classify(space, ds) != ds.tag) ++mismatches;
        if (Rational(ds.mu) != mu_exact) ++mismatches;
        any_spherical_nc = any_spherical_nc || (!ds.cuspidal() && ds.spherical());
        any_exceptional = any_exceptional || ds.exceptional();
      }
      if (any_spherical_nc != (q > p + 1)) ++mismatches;
      if (any_exceptional != (q > p + 3)) ++mismatches;
      out.push_back(at_most(1, "classification", label(p, q) + " rule mismatches", mismatches, 0.0));
    }
  }
  return out;
}

std::vector<Check> suite_vanishing() {
  std::vector<Check> out;
  const Rational half(1, 2);
  const std::vector<std::pair<int, int>> spaces{{2, 2}, {4, 2}, {1, 1}, {3, 3}};
  for (const auto& [p, q] : spaces) {
    const auto f = gen(p, q, half);
    const std::string tag = label(p, q, half);
    const auto samples = radon_profile(f, {-2.0, -1.0, 0.0, 1.0, 2.0}, tight(1e-8));
    out.push_back(holds(2, "vanishing", tag + " samples converged", all_converged(samples)));
    out.push_back(at_most(2, "vanishing", tag + " max |Rf(s)|, s in {-2..2}", max_abs(samples), 1e-6));

    const auto profile = make_profile(f, default_s_grid(f.space()), tight(1e-8));
    double worst = 0.0;
    for (const auto& s : profile.samples) worst = std::max(worst, std::abs(s.value) / std::max(s.error_estimate, 1e-300));
    out.push_back(holds(2, "vanishing", tag + " verdict CuspidalNumeric", profile.verdict == Verdict::CuspidalNumeric));
    out.push_back(at_most(2, "vanishing", tag + " max |Rf| / error estimate", worst, 1e3));
  }
  const auto conj = q1_conjugation_check(make_space(1, 1), half, {-2.0, -1.0, 0.0, 1.0, 2.0}, tight(1e-8));
  out.push_back(at_most(2, "vanishing", "(1,1) R psi_{-1/2} = conj R psi_{1/2}", conj.max_defect,
                        std::max(conj.error_budget, 1e-15)));
  return out;
}

std::vector<Check> suite_spherical() {
  std::vector<Check> out;
  const Rational half(1, 2);
  non_cuspidal_profile_checks(out, 3, "spherical", 1, 3, half, -1);
  const auto f = gen(1, 3, half);
  const auto profile = make_profile(f, default_s_grid(f.space()), tight(1e-12));
  const double limit = limit_at_plus_infinity(f, tight(1e-12));
  out.push_back(relative(3, "spherical", "(1,3,1/2) C1 vs limit of e^s Rf(s)", profile.C1, limit, 1e-4));
  out.push_back({3, "spherical", "(1,3,1/2) limit is positive", limit, 0.0, limit > 0.0});
  return out;
}

std::vector<Check> suite_exceptional_odd() {
  std::vector<Check> out;
  const Rational half(1, 2);
  const auto space = make_space(1, 5);
  const auto ds = make_discrete_series(space, half);
  out.push_back(holds(4, "exceptional-odd", "(1,5,1/2) tag ExceptionalOdd, n = 1, m = 1",
                      ds.tag == SeriesTag::ExceptionalOdd && ds.n == 1 && ds.m == 1));
  const RadialForm phi = phi_nm(space, 1, 1);
  out.push_back(holds(4, "exceptional-odd", "(1,5) phi_{1,1} = (6u - 2)(1 + u)^{-3}",
                      phi.poly == Polynomial({Rational(-2), Rational(6)}) && phi.nu == Rational(-3)));
  const auto xi = make_xi(space, ds);
  const auto& poly = std::get<radial::CoshPolynomial>(xi.radial()).poly;
  out.push_back(within(4, "exceptional-odd", "(1,5,1/2) degree of P_lambda vs m", poly.degree(), ds.m, 0.0));

  non_cuspidal_profile_checks(out, 4, "exceptional-odd", 1, 5, half, -2);
  const auto profile = make_profile(xi, default_s_grid(space), tight(1e-12));
  const double oracle = exceptional_limit_oracle(space, ds, tight(1e-12));
  out.push_back(relative(4, "exceptional-odd", "(1,5,1/2) C1 vs limit oracle", profile.C1, oracle, 1e-3));
  out.push_back({4, "exceptional-odd", "(1,5,1/2) oracle is nonzero", std::abs(oracle), 0.0, oracle != 0.0});
  out.push_back(holds(4, "exceptional-odd", "(1,5,1/2) sign of C1 matches oracle",
                      std::signbit(profile.C1) == std::signbit(oracle)));
  for (double s : {-4.0, -5.0}) {
    const auto r = radon_at(xi, s, tight(1e-12));
    out.push_back(relative(4, "exceptional-odd", "(1,5,1/2) e^{2s} Rf(s) at s = " + std::to_string(int(s)) + " vs oracle",
                           std::exp(2.0 * s) * r.value.real(), oracle, 1e-3));
  }
  return out;
}

std::vector<Check> suite_exceptional_even() {
  std::vector<Check> out;
  const Rational half(1, 2);
  const auto space = make_space(1, 7);
  const auto ds = make_discrete_series(space, half);
  out.push_back(holds(5, "exceptional-even", "(1,7,1/2) tag ExceptionalEven, n = 2, m = 1",
                      ds.tag == SeriesTag::ExceptionalEven && ds.n == 2 && ds.m == 1));
  non_cuspidal_profile_checks(out, 5, "exceptional-even", 1, 7, half, -3);
  const auto xi = make_xi(space, ds);
  const auto profile = make_profile(xi, default_s_grid(space), tight(1e-12));
  const double oracle = exceptional_limit_oracle(space, ds, tight(1e-12));
  out.push_back(relative(5, "exceptional-even", "(1,7,1/2) C1 vs limit oracle", profile.C1, oracle, 1e-3));
  out.push_back({5, "exceptional-even", "(1,7,1/2) oracle is nonzero", std::abs(oracle), 0.0, oracle != 0.0});
  for (double s : {-4.0, -5.0}) {
    const auto r = radon_at(xi, s, tight(1e-12));
    out.push_back(relative(5, "exceptional-even",
                           "(1,7,1/2) e^{3s} Rf(s) at s = " + std::to_string(int(s)) + " vs oracle",
                           std::exp(3.0 * s) * r.value.real(), oracle, 1e-3));
  }
  return out;
}

std::vector<Check> suite_compact_support() {
  std::vector<Check> out;
  QuadratureConfig cfg = tight(1e-10);
  cfg.abs_tol = 1e-13;
  {
    const auto f = make_bump(make_space(4, 2), 1.0);
    const auto outside = radon_profile(f, {-3.0, -2.0, -1.5, -1.0, 1.0, 1.5, 2.0, 3.0}, cfg);
    out.push_back(at_most(6, "compact-support", "(4,2) bump t0=1: max |Rf(s)|, |s| >= 1", max_abs(outside), 1e-10));
    const auto inside = radon_at(f, 0.0, cfg);
    out.push_back({6, "compact-support", "(4,2) bump t0=1: Rf(0) is nonzero", std::abs(inside.value), 1e-10,
                   std::abs(inside.value) > 1e-10});
  }
  {
    const auto f = make_bump(make_space(2, 3), 1.0);
    const auto outside = radon_profile(f, {-3.0, -2.0, -1.5, -1.0}, cfg);
    out.push_back(at_most(6, "compact-support", "(2,3) bump t0=1: max |Rf(s)|, s <= -1", max_abs(outside), 1e-10));
    const auto inside = radon_profile(f, {0.0, 2.0}, cfg);
    out.push_back({6, "compact-support", "(2,3) bump t0=1: Rf(0), Rf(2) nonzero",
                   std::min(std::abs(inside[0].value), std::abs(inside[1].value)), 1e-10,
                   std::abs(inside[0].value) > 1e-10 && std::abs(inside[1].value) > 1e-10});
  }
  return out;
}

std::vector<Check> suite_ode() {
  std::vector<Check> out;
  const Rational half(1, 2);
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{1, 3}, {1, 5}, {1, 7}}) {
    const auto f = gen(p, q, half);
    const double rho1 = to_double(f.space().rho1);
    const std::string tag = label(p, q, half);
    const auto coarse = radon_profile(f, uniform_grid(-2.0, 1.0, 0.1), tight(1e-13));
    const auto fine = radon_profile(f, uniform_grid(-2.0, 1.0, 0.05), tight(1e-13));
    const double d1 = verify_A_ode(coarse, 0.5, rho1);
    const double d2 = verify_A_ode(fine, 0.5, rho1);
    out.push_back(at_most(7, "ode", tag + " relative defect at h = 0.1", d1, 1e-2));
    const double ratio = d1 / d2;
    out.push_back({7, "ode", tag + " defect ratio h = 0.1 vs h = 0.05 in [3, 5]", ratio, 4.0,
                   ratio >= 3.0 && ratio <= 5.0});
  }
  return out;
}

std::vector<Check> suite_divergence() {
  std::vector<Check> out;
  const std::vector<double> T{8.0, 16.0, 32.0, 64.0};
  QuadratureConfig cfg = tight(1e-9);
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{2, 4}, {4, 2}}) {
    const auto space = make_space(p, q);
    const double nu = 0.5;
    const auto I = divergence_witness(space, nu, T, cfg);
    // The lower bound grows like T^{kappa} (log T when kappa = 0).
    const double kappa = -(to_double(space.rho) + nu) + p + q - 2;
    double c_min = kInf;
    double n_min = kInf;
    double n_max = 0.0;
    for (std::size_t i = 0; i + 1 < I.size(); ++i) {
      const double d = I[i + 1].value - I[i].value;
      c_min = std::min(c_min, d);
      const double scale = kappa == 0.0 ? std::log(2.0) : std::pow(I[i].T, kappa);
      n_min = std::min(n_min, d / scale);
      n_max = std::max(n_max, d / scale);
    }
    const std::string tag = label(p, q) + " nu=1/2";
    out.push_back({8, "divergence", tag + " min I(2T) - I(T), T in {8,16,32}", c_min, 0.0, c_min > 0.0});
    out.push_back(at_most(8, "divergence", tag + " spread of normalized increments", n_max / n_min, 2.0));
  }
  {
    const auto I = divergence_witness(make_space(2, 4), 3.0, T, cfg);
    const double d_first = I[1].value - I[0].value;
    const double d_last = I[3].value - I[2].value;
    out.push_back(at_most(8, "divergence", "(2,4) nu=3 increment shrinkage d(32) / d(8)", d_last / d_first, 0.25));
    out.push_back(at_most(8, "divergence", "(2,4) nu=3 last increment / I(64)", d_last / I[3].value, 1e-2));
  }
  return out;
}

std::vector<Check> suite_oracles(const VerifyOptions& options) {
  std::vector<Check> out;
  {
    // Closed form against tanh-sinh quadrature after y = t / (1 - t).
    boost::math::quadrature::tanh_sinh<double> ts;
    const std::vector<std::pair<double, double>> kl{{0.5, 2.0}, {1.0, 3.0}, {2.5, 4.0},  {0.5, 1.75}, {3.0, 5.5},
                                                    {1.5, 5.0}, {2.0, 6.0}, {0.75, 3.25}, {4.0, 7.0}, {1.0, 2.5}};
    double worst = 0.0;
    for (const auto& [k, l] : kl) {
      // tc is the exact distance to the nearer endpoint, which keeps 1 - t accurate near t = 1.
      auto g = [k = k, l = l](double t, double tc) {
        const double u = t < 0.5 ? 1.0 - t : tc;
        return (1.0 - 2.0 * t) / u * std::pow(t, k - 1.0) * std::pow(u, l - k - 1.0);
      };
      const double numeric = ts.integrate(g, 0.0, 1.0, 1e-14);
      const double closed = beta_linear_integral(k, l);
      // Relative to the integral of the absolute integrand, since the closed form vanishes at l = 2k + 1.
      const double scale = beta_integral(k, l) + beta_integral(k + 1.0, l);
      worst = std::max(worst, std::abs(numeric - closed) / scale);
    }
    out.push_back(at_most(9, "oracles", "beta_linear_integral vs quadrature, 10 (k,l) pairs", worst, 1e-8));
  }
  {
    double worst = 0.0;
    for (int q = 2; q <= 8; ++q) {
      for (int mu = 0; mu <= 20; ++mu) worst = std::max(worst, std::abs(zonal(mu, q, 1.0) - 1.0));
    }
    out.push_back(at_most(9, "oracles", "zonal R_mu(1) = 1, mu <= 20, q <= 8", worst, 1e-12));
  }
  {
    double worst = 0.0;
    int cases = 0;
    for (int p = 1; p <= 4; ++p) {
      for (int q = p + 4; q <= 10; ++q) {
        const auto space = make_space(p, q);
        for (const auto& ds : enumerate_discrete_series(space, Rational(4))) {
          if (!ds.exceptional()) continue;
          ++cases;
          const auto a = make_xi(space, ds);
          const auto b = make_xi_phi_form(space, ds);
          for (int i = 0; i <= 60; ++i) {
            const double t = 0.1 * i;
            worst = std::max(worst, std::abs(a.radial_at(t) - b.radial_at(t)));
          }
        }
      }
    }
    out.push_back(at_most(9, "oracles", "P_lambda vs phi_{n,m} forms, " + std::to_string(cases) + " parameters",
                          worst, 1e-12));
  }
  {
    // All substitutions valid for a case agree to their summed error estimates.
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> pick(-2.0, 2.0);
    struct Input {
      GeneratingFunction f;
      std::vector<double> s;
    };
    const Rational half(1, 2);
    const auto sp13 = make_space(1, 3);
    const auto sp23 = make_space(2, 3);
    const auto sp42 = make_space(4, 2);
    std::vector<Input> inputs;
    inputs.push_back({gen(1, 3, half), {-1.0, 0.0, 1.0}});
    inputs.push_back({make_bump(sp23, 1.0), {0.0, pick(rng)}});
    inputs.push_back({make_bump(sp42, 1.0), {0.0, 0.5 * pick(rng)}});
    inputs.push_back({make_power(sp23, to_double(sp23.rho) + 1.0), {pick(rng), pick(rng)}});
    inputs.push_back({make_power(sp42, to_double(sp42.rho) + 1.0), {pick(rng), pick(rng)}});
    inputs.push_back({gen(1, 5, half), {pick(rng), -4.0}});
    (void)sp13;
    double worst = 0.0;
    for (const auto& in : inputs) {
      std::vector<Substitution> subs{Substitution::CompactifyTan};
      if (in.f.space().case_tag == SpaceCase::A) {
        subs.push_back(Substitution::SubstA);
      } else {
        subs.push_back(Substitution::SubstB_zz);
        subs.push_back(Substitution::SubstB_uv);
      }
      if (in.f.majorant().support_cosh2 < kInf) subs.push_back(Substitution::Direct);
      for (double s : in.s) {
        std::vector<RadonSample> results;
        for (auto sub : subs) {
          QuadratureConfig cfg = tight(1e-10);
          cfg.substitution = sub;
          results.push_back(radon_at(in.f, s, cfg));
        }
        for (std::size_t i = 0; i < results.size(); ++i) {
          for (std::size_t j = i + 1; j < results.size(); ++j) {
            const double budget = results[i].error_estimate + results[j].error_estimate;
            const double gap = std::abs(results[i].value - results[j].value);
            worst = std::max(worst, budget > 0.0 ? gap / budget : (gap == 0.0 ? 0.0 : kInf));
          }
        }
      }
    }
    out.push_back(at_most(9, "oracles", "substitution paths: max |difference| / summed error", worst, 1.0));
  }
  return out;
}

std::vector<Check> suite_decay() {
  std::vector<Check> out;
  struct Case {
    int p;
    int q;
    double lo;
    double hi;
  };
  // Boundedness holds on all of R when p >= q and for s <= 0 when p < q.
  const std::vector<Case> cases{{2, 2, -4.0, 4.0}, {4, 2, -4.0, 4.0}, {1, 3, -4.0, 0.0}};
  for (const auto& c : cases) {
    const auto space = make_space(c.p, c.q);
    const double rho1 = to_double(space.rho1);
    const auto f = make_power(space, to_double(space.rho) + 1.0);
    const auto grid = uniform_grid(c.lo, c.hi, 0.5);
    const auto samples = radon_profile(f, grid, tight(1e-10));
    for (int N : {2, 4}) {
      const bool norm_finite = std::isfinite(decay_norm(f, N));
      std::vector<double> weighted;
      for (const auto& s : samples) {
        weighted.push_back(std::exp(rho1 * s.s) * std::abs(s.value) * std::pow(1.0 + std::abs(s.s), N - 2));
      }
      const bool trend = has_growth_trend(weighted, growth_end_for(grid));
      const double peak = *std::max_element(weighted.begin(), weighted.end());
      out.push_back({10, "decay",
                     label(c.p, c.q) + " N=" + std::to_string(N) + " e^{rho1 s}|Rf|(1+|s|)^{N-2} bounded, no trend",
                     peak, kInf, norm_finite && all_converged(samples) && std::isfinite(peak) && !trend});
    }
    out.push_back(holds(10, "decay", label(c.p, c.q) + " decay bound, gamma = 1",
                        verify_decay_lemma(f, 1.0, grid, tight(1e-10))));
  }
  {
    const auto f = gen(1, 3, Rational(1, 2));
    out.push_back(holds(10, "decay", "(1,3,1/2) decay bound for psi, gamma = lambda, s <= 0",
                        verify_decay_lemma(f, 0.5, uniform_grid(-4.0, 0.0, 0.5), tight(1e-10))));
  }
  return out;
}

}  // namespace cuspidal
