#include "cuspidal/analysis.hpp"

#include "cuspidal/quadrature.hpp"
#include "cuspidal/specfun.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace cuspidal {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::CuspidalNumeric: return "CuspidalNumeric";
    case Verdict::NonCuspidalNumeric: return "NonCuspidalNumeric";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

constexpr double kSaturationRatio = 0.9;

// Per-sample standard deviations, floored so that exact zeros with zero error stay finite.
std::vector<double> sample_sigmas(const std::vector<RadonSample>& samples) {
  double vmax = 0.0;
  for (const auto& s : samples) vmax = std::max(vmax, std::abs(s.value));
  std::vector<double> sigma;
  sigma.reserve(samples.size());
  for (const auto& s : samples) {
    sigma.push_back(std::max({s.error_estimate, 1e-15 * std::abs(s.value), 1e-15 * vmax, 1e-300}));
  }
  return sigma;
}

}  // namespace

ExponentialFit fit_exponentials(const std::vector<RadonSample>& samples, double lambda, double rho1) {
  if (samples.size() < 4) throw std::invalid_argument("fit_exponentials: need at least 4 samples");
  if (lambda == 0.0) throw std::invalid_argument("fit_exponentials: lambda must be nonzero");
  const auto n = static_cast<Eigen::Index>(samples.size());
  const auto sigma = sample_sigmas(samples);
  const double sigma_min = *std::min_element(sigma.begin(), sigma.end());

  Eigen::MatrixXd A(n, 2);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& smp = samples[static_cast<std::size_t>(i)];
    const double w = sigma_min / sigma[static_cast<std::size_t>(i)];
    A(i, 0) = w * std::exp((-rho1 + lambda) * smp.s);
    A(i, 1) = w * std::exp((-rho1 - lambda) * smp.s);
    b(i) = w * smp.value.real();
  }
  const Eigen::Vector2d scale(1.0 / A.col(0).norm(), 1.0 / A.col(1).norm());
  const Eigen::MatrixXd As = A * scale.asDiagonal();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(As);
  const auto sv = svd.singularValues();
  ExponentialFit fit;
  fit.condition = sv(1) > 0.0 ? sv(0) / sv(1) : std::numeric_limits<double>::infinity();
  if (!(fit.condition <= 1e12)) {
    throw IllConditioned("fit_exponentials: design is ill-conditioned (lambda too small or s-range too short)");
  }
  const Eigen::Vector2d z = As.colPivHouseholderQr().solve(b);
  const Eigen::Vector2d C = scale.asDiagonal() * z;
  const Eigen::Matrix2d cov = scale.asDiagonal() * (As.transpose() * As).inverse() * scale.asDiagonal();
  fit.C1 = C(0);
  fit.C2 = C(1);
  fit.sigma_C1 = sigma_min * std::sqrt(cov(0, 0));
  fit.sigma_C2 = sigma_min * std::sqrt(cov(1, 1));
  const double bnorm = b.norm();
  fit.residual = bnorm > 0.0 ? (A * C - b).norm() / bnorm : 0.0;
  return fit;
}

SingleExponentFit fit_single_exponent(const std::vector<RadonSample>& samples) {
  if (samples.size() < 2) throw std::invalid_argument("fit_single_exponent: need at least 2 samples");
  const auto n = static_cast<Eigen::Index>(samples.size());
  const auto sigma = sample_sigmas(samples);
  Eigen::MatrixXd A(n, 2);
  Eigen::VectorXd b(n);
  Eigen::VectorXd w(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const double v = samples[k].value.real();
    if (v == 0.0) throw std::invalid_argument("fit_single_exponent: zero sample");
    // sigma(log|v|) = sigma(v) / |v|
    w(i) = std::abs(v) / sigma[k];
    A(i, 0) = 1.0;
    A(i, 1) = samples[k].s;
    b(i) = std::log(std::abs(v));
  }
  w /= w.maxCoeff();
  const Eigen::MatrixXd Aw = w.asDiagonal() * A;
  const Eigen::VectorXd bw = w.asDiagonal() * b;
  const Eigen::Vector2d z = Aw.colPivHouseholderQr().solve(bw);
  SingleExponentFit fit;
  fit.exponent = z(1);
  fit.C = std::copysign(std::exp(z(0)), samples.front().value.real());
  fit.residual = (Aw * z - bw).norm() / std::sqrt(static_cast<double>(n));
  return fit;
}

Verdict decide_cuspidality(const std::vector<RadonSample>& samples, const ExponentialFit& fit,
                           const VerdictTolerances& tol) {
  if (samples.empty()) return Verdict::Inconclusive;
  for (const auto& s : samples) {
    if (!s.converged) return Verdict::Inconclusive;
  }
  const bool vanishes = std::all_of(samples.begin(), samples.end(), [&](const RadonSample& s) {
    return std::abs(s.value) <= tol.vanish_factor * s.error_estimate;
  });
  if (vanishes) return Verdict::CuspidalNumeric;
  if (std::abs(fit.C1) > tol.signal_factor * fit.sigma_C1 && std::abs(fit.C2) <= tol.vanish_factor * fit.sigma_C2) {
    return Verdict::NonCuspidalNumeric;
  }
  return Verdict::Inconclusive;
}

std::vector<double> default_s_grid(const SpaceParams& space) {
  return space.case_tag == SpaceCase::A ? uniform_grid(-4.0, 4.0, 0.25) : uniform_grid(-6.0, 2.0, 0.25);
}

RadonProfile make_profile(const GeneratingFunction& f, const std::vector<double>& s_grid, const QuadratureConfig& cfg,
                          const VerdictTolerances& tol) {
  RadonProfile profile;
  profile.space = f.space();
  profile.ds = f.ds();
  profile.samples = radon_profile(f, s_grid, cfg);
  const double rho1 = to_double(profile.space.rho1);
  const double lambda = profile.ds ? to_double(profile.ds->lambda) : 0.0;
  if (lambda != 0.0 && profile.samples.size() >= 4) {
    try {
      profile.fit = fit_exponentials(profile.samples, lambda, rho1);
      profile.C1 = profile.fit.C1;
      profile.C2 = profile.fit.C2;
      profile.residual = profile.fit.residual;
      profile.fitted = true;
      profile.verdict = decide_cuspidality(profile.samples, profile.fit, tol);
    } catch (const IllConditioned&) {
      profile.verdict = Verdict::Inconclusive;
    }
  } else {
    // Without a model only vanishing can be decided.
    ExponentialFit none;
    none.sigma_C1 = std::numeric_limits<double>::infinity();
    profile.verdict = decide_cuspidality(profile.samples, none, tol);
  }
  if (profile.verdict != Verdict::CuspidalNumeric) {
    const bool nonzero = std::none_of(profile.samples.begin(), profile.samples.end(),
                                      [](const RadonSample& s) { return s.value.real() == 0.0; });
    if (nonzero && profile.samples.size() >= 2) profile.single = fit_single_exponent(profile.samples);
  }
  return profile;
}

double verify_A_ode(const std::vector<RadonSample>& samples, double lambda, double rho1) {
  if (samples.size() < 3) throw std::invalid_argument("verify_A_ode: need at least 3 samples");
  const double h = samples[1].s - samples[0].s;
  if (!(h > 0.0)) throw std::invalid_argument("verify_A_ode: grid must be increasing");
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (std::abs(samples[i].s - samples[i - 1].s - h) > 1e-9 * std::max(1.0, h)) {
      throw std::invalid_argument("verify_A_ode: grid is not uniform");
    }
  }
  std::vector<double> A;
  double noise = 0.0;
  for (const auto& s : samples) {
    const double e = std::exp(rho1 * s.s);
    A.push_back(e * s.value.real());
    noise = std::max(noise, e * s.error_estimate);
  }
  const double l2 = lambda * lambda;
  const double floor = 4.0 * noise / (h * h);
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < A.size(); ++i) {
    const double d2 = (A[i + 1] - 2.0 * A[i] + A[i - 1]) / (h * h);
    const double denom = std::abs(l2 * A[i]) + floor;
    const double defect = std::abs(d2 - l2 * A[i]);
    if (defect == 0.0) continue;
    worst = std::max(worst, denom > 0.0 ? defect / denom : std::numeric_limits<double>::infinity());
  }
  return worst;
}

double exceptional_limit_oracle(const SpaceParams& space, const DiscreteSeriesParam& ds, const QuadratureConfig& cfg) {
  if (!ds.exceptional()) throw std::invalid_argument("exceptional_limit_oracle: parameter is not exceptional");
  const double c = make_xi(space, ds).radial_limit();
  const double g = to_double(ds.lambda + space.rho);
  const int alpha = space.alpha;
  const int beta = space.beta;
  const quad::Tolerance tol{cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions};

  if (ds.tag == SeriesTag::ExceptionalOdd) {
    double J1 = 1.0;
    if (!space.degenerate_x) {
      // x = tan(phi): (1+x^2)^{-(g+1)/2} x^alpha dx = cos^{g-1}(phi) tan^alpha(phi) dphi
      const auto r = quad::integrate(
          [&](double phi) { return std::pow(std::cos(phi), g - 1.0) * std::pow(std::tan(phi), alpha); }, 0.0,
          0.5 * std::numbers::pi, tol);
      J1 = r.value;
    }
    const double J2 = beta_linear_integral(0.5 * (beta + 1), g - alpha);
    return c * std::pow(2.0, g - alpha - 2.0) * J1 * J2;
  }

  // Even: int_0^inf int_{1/2}^inf (u^2+v^2)^{-g/2} (2v-1)^{(beta-1)/2} u^alpha dv du,
  // with v = 1/2 + tan^2(phi) and u = v tan(chi).
  const double hb = 0.5 * (beta - 1);
  auto v_weight = [&](double phi, double& v) {
    const double t = std::tan(phi);
    const double cs = std::cos(phi);
    v = 0.5 + t * t;
    // (2v-1)^{hb} dv/dphi = 2^{hb} t^{2 hb} * 2 t / cos^2
    return std::pow(2.0, hb) * std::pow(t, 2.0 * hb + 1.0) * 2.0 / (cs * cs);
  };
  quad::Result r;
  if (space.degenerate_x) {
    r = quad::integrate(
        [&](double phi) {
          double v = 0.0;
          const double wv = v_weight(phi, v);
          return wv * std::pow(v, -g);
        },
        0.0, 0.5 * std::numbers::pi, tol);
  } else {
    quad::Tolerance inner = tol;
    inner.rel = tol.rel / 4.0;
    inner.abs = tol.abs / 8.0;
    r = quad::integrate(
        quad::Integrand([&](double phi) {
          double v = 0.0;
          const double wv = v_weight(phi, v);
          const auto ri = quad::integrate(
              [&](double chi) {
                const double cs = std::cos(chi);
                const double u = v * std::tan(chi);
                return std::pow(u * u + v * v, -0.5 * g) * std::pow(u, alpha) * v / (cs * cs);
              },
              0.0, 0.5 * std::numbers::pi, inner);
          return quad::Estimate{wv * ri.value, std::abs(wv) * ri.error};
        }),
        0.0, 0.5 * std::numbers::pi, tol);
  }
  return c * r.value;
}

GrowthEnd growth_end_for(const std::vector<double>& s_grid) {
  if (s_grid.empty()) return GrowthEnd::Both;
  const auto [lo, hi] = std::minmax_element(s_grid.begin(), s_grid.end());
  if (*hi <= 0.0) return GrowthEnd::Low;
  if (*lo >= 0.0) return GrowthEnd::High;
  return GrowthEnd::Both;
}

bool has_growth_trend(const std::vector<double>& values, GrowthEnd end) {
  const std::size_t n = values.size();
  if (n < 3) return false;
  const std::size_t run = std::max<std::size_t>(2, n / 3);
  const auto argmax = static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin());
  // A run that rises towards the end counts as growth unless its increments shrink
  // geometrically, which leaves the sequence bounded by a convergent tail.
  auto grows = [&](std::size_t from, std::size_t to, long step) {
    double prev = 0.0;
    bool saturating = true;
    for (std::size_t i = from; i != to; i = static_cast<std::size_t>(static_cast<long>(i) + step)) {
      const std::size_t j = static_cast<std::size_t>(static_cast<long>(i) + step);
      const double d = values[j] - values[i];
      if (!(d > 0.0)) return false;
      if (prev > 0.0 && d > kSaturationRatio * prev) saturating = false;
      prev = d;
    }
    return !saturating;
  };
  if (end != GrowthEnd::Low && argmax == n - 1 && grows(n - 1 - run, n - 1, 1)) return true;
  // The first maximum is reported, so a leading run ties only with strictly larger values.
  if (end != GrowthEnd::High && argmax == 0 && grows(run, 0, -1)) return true;
  return false;
}

bool verify_decay_lemma(const GeneratingFunction& f, double gamma, const std::vector<double>& s_grid,
                        const QuadratureConfig& cfg) {
  if (!(gamma > 0.0)) throw std::invalid_argument("verify_decay_lemma: gamma must be positive");
  const auto samples = radon_profile(f, s_grid, cfg);
  const double rho1 = to_double(f.space().rho1);
  std::vector<double> ratio;
  for (const auto& s : samples) {
    if (!s.converged) return false;
    ratio.push_back(std::exp(rho1 * s.s) * std::abs(s.value) * std::pow(std::cosh(s.s), 0.5 * gamma));
  }
  return !has_growth_trend(ratio, growth_end_for(s_grid));
}

ConjugationCheck q1_conjugation_check(const SpaceParams& space, const Rational& lambda,
                                      const std::vector<double>& s_grid, const QuadratureConfig& cfg) {
  if (space.q != 1) throw std::invalid_argument("q1_conjugation_check: q must be 1");
  const auto plus = make_psi(space, make_discrete_series(space, lambda));
  const auto minus = make_psi(space, make_discrete_series(space, -lambda));
  const auto rp = radon_profile(plus, s_grid, cfg);
  const auto rm = radon_profile(minus, s_grid, cfg);
  ConjugationCheck out;
  for (std::size_t i = 0; i < rp.size(); ++i) {
    const double d = std::abs(rm[i].value - std::conj(rp[i].value));
    if (d >= out.max_defect) {
      out.max_defect = d;
      out.error_budget = rp[i].error_estimate + rm[i].error_estimate;
    }
  }
  return out;
}

}  // namespace cuspidal
