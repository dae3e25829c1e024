#include "cuspidal/genfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cuspidal {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double log_cosh(double t) {
  const double a = std::abs(t);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

// Phi radial forms are CoshPolynomials in disguise: with w = 1 + u,
// phi(u) [cosh t] = P(w - 1) w^nu [w^{1/2}].
radial::CoshPolynomial as_cosh_polynomial(const radial::Phi& r) {
  return {r.phi.poly.shifted(-1), Rational(2 * r.phi.nu + (r.times_cosh ? 1 : 0))};
}

double cosh_poly_value(const radial::CoshPolynomial& r, double w) {
  const double logw = std::log(w);
  const double half_power = 0.5 * to_double(r.power);
  double acc = 0.0;
  const auto& c = r.poly.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) acc += to_double(c[k]) * std::exp((static_cast<double>(k) + half_power) * logw);
  }
  return acc;
}

// log|P(w) w^{power/2}| at w = cosh^2 t, written to survive w overflowing.
double cosh_poly_log_abs(const radial::CoshPolynomial& r, double t) {
  if (r.poly.is_zero()) return -std::numeric_limits<double>::infinity();
  const double L = 2.0 * log_cosh(t);
  const int d = r.poly.degree();
  double acc = 0.0;
  const auto& c = r.poly.coeffs();
  for (int k = 0; k <= d; ++k) acc += to_double(c[static_cast<std::size_t>(k)]) * std::exp((k - d) * L);
  if (acc == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(std::abs(acc)) + (d + 0.5 * to_double(r.power)) * L;
}

double bump_value(const radial::Bump& b, double t) {
  const double r = std::abs(t) / b.t0;
  if (r >= 1.0) return 0.0;
  const double one_minus = 1.0 - r * r;
  if (b.smoothness == 0) return std::exp(1.0 - 1.0 / one_minus);
  return std::pow(one_minus, b.smoothness);
}

double t_from_cosh2(double w) {
  // asinh(sqrt(w-1)) keeps accuracy near t = 0.
  return std::asinh(std::sqrt(std::max(0.0, w - 1.0)));
}

}  // namespace

GeneratingFunction::GeneratingFunction(SpaceParams space, std::optional<DiscreteSeriesParam> ds, Angular angular,
                                       Radial radial, std::string provenance)
    : space_(std::move(space)),
      ds_(std::move(ds)),
      angular_(std::move(angular)),
      radial_(std::move(radial)),
      provenance_(std::move(provenance)) {
  const double raw = std::real(angular_value(1.0, 0.0)) * raw_radial(1.0);
  if (raw == 0.0 || !std::isfinite(raw)) {
    throw std::invalid_argument("generating function vanishes at the identity; cannot normalize");
  }
  normalization_ = raw;
}

double GeneratingFunction::raw_radial(double w) const {
  return std::visit(overloaded{
                        [&](const radial::CoshPolynomial& r) { return cosh_poly_value(r, w); },
                        [&](const radial::Phi& r) {
                          const double u = w - 1.0;
                          const double v = r.phi.poly.evaluate(u) * std::pow(w, to_double(r.phi.nu));
                          return r.times_cosh ? v * std::sqrt(w) : v;
                        },
                        [&](const radial::Bump& b) { return bump_value(b, t_from_cosh2(w)); },
                        [&](const radial::PowerLog& r) {
                          const double lw = std::log(w);
                          return std::exp(-0.5 * r.exponent * lw) * std::pow(1.0 + 0.5 * lw, -r.log_power);
                        },
                    },
                    radial_);
}

double GeneratingFunction::radial_value(double cosh2t) const { return raw_radial(cosh2t) / normalization_; }

double GeneratingFunction::log_abs_radial(double t) const {
  const double log_norm = std::log(std::abs(normalization_));
  return std::visit(overloaded{
                        [&](const radial::CoshPolynomial& r) { return cosh_poly_log_abs(r, t) - log_norm; },
                        [&](const radial::Phi& r) { return cosh_poly_log_abs(as_cosh_polynomial(r), t) - log_norm; },
                        [&](const radial::Bump& b) {
                          const double v = bump_value(b, t);
                          return v > 0.0 ? std::log(v) - log_norm : -std::numeric_limits<double>::infinity();
                        },
                        [&](const radial::PowerLog& r) {
                          const double lc = log_cosh(t);
                          return -r.exponent * lc - r.log_power * std::log1p(lc) - log_norm;
                        },
                    },
                    radial_);
}

double GeneratingFunction::radial_at(double t) const {
  const double c = std::cosh(t);
  const double w = c * c;
  if (std::isfinite(w) && w < 1e300) return radial_value(w);
  const double la = log_abs_radial(t);
  if (la == -std::numeric_limits<double>::infinity()) return 0.0;
  double sign = normalization_ < 0 ? -1.0 : 1.0;
  if (const auto* r = std::get_if<radial::CoshPolynomial>(&radial_)) {
    if (r->poly.leading() < 0) sign = -sign;
  } else if (const auto* r = std::get_if<radial::Phi>(&radial_)) {
    if (r->phi.poly.leading() < 0) sign = -sign;
  }
  return sign * std::exp(la);
}

std::complex<double> GeneratingFunction::angular_value(double cos_theta, double sin_theta) const {
  return std::visit(overloaded{
                        [&](const angular::Zonal& a) {
                          return std::complex<double>(zonal(a.mu, a.q, std::clamp(cos_theta, -1.0, 1.0)), 0.0);
                        },
                        [&](const angular::Exponential& a) {
                          return std::polar(1.0, a.mu * std::atan2(sin_theta, cos_theta));
                        },
                        [&](const angular::Constant&) { return std::complex<double>(1.0, 0.0); },
                        [&](const angular::Cosine&) { return std::complex<double>(cos_theta, 0.0); },
                    },
                    angular_);
}

std::complex<double> GeneratingFunction::at(const PolarPoint& point) const {
  return angular_value(point.cos_theta, point.sin_theta) * radial_value(point.cosh2t);
}

std::complex<double> GeneratingFunction::operator()(double theta, double t) const {
  return angular_value(std::cos(theta), std::sin(theta)) * radial_at(t);
}

ValueKind GeneratingFunction::value_kind() const {
  return std::holds_alternative<angular::Exponential>(angular_) ? ValueKind::Complex : ValueKind::Real;
}

Majorant GeneratingFunction::majorant() const {
  const double inv_norm = 1.0 / std::abs(normalization_);
  auto poly_majorant = [&](const radial::CoshPolynomial& r) {
    // For w >= 1, |P(w)| <= w^d * sum |c_k|.
    double total = 0.0;
    for (const auto& c : r.poly.coeffs()) total += std::abs(to_double(c));
    return Majorant{-(to_double(r.power) + 2.0 * r.poly.degree()), total * inv_norm};
  };
  return std::visit(overloaded{
                        [&](const radial::CoshPolynomial& r) { return poly_majorant(r); },
                        [&](const radial::Phi& r) { return poly_majorant(as_cosh_polynomial(r)); },
                        [&](const radial::Bump& b) {
                          const double c = std::cosh(b.t0);
                          return Majorant{0.0, inv_norm, c * c};
                        },
                        [&](const radial::PowerLog& r) { return Majorant{r.exponent, inv_norm}; },
                    },
                    radial_);
}

double GeneratingFunction::radial_limit() const {
  return std::visit(overloaded{
                        [&](const radial::CoshPolynomial& r) { return to_double(r.poly.leading()) / normalization_; },
                        [&](const radial::Phi& r) { return to_double(r.phi.poly.leading()) / normalization_; },
                        [&](const radial::Bump&) { return 0.0; },
                        [&](const radial::PowerLog& r) { return r.log_power > 0.0 ? 0.0 : 1.0 / normalization_; },
                    },
                    radial_);
}

GeneratingFunction make_psi(const SpaceParams& space, const DiscreteSeriesParam& ds) {
  classify(space, ds);
  if (space.q > 1 && ds.mu < 0) {
    throw std::invalid_argument("make_psi: mu_lambda < 0 needs the exceptional generating function");
  }
  const Rational power = -(abs(ds.lambda) + space.rho);
  Angular ang;
  if (space.q == 1) {
    ang = angular::Exponential{static_cast<int>(ds.mu)};
  } else if (ds.mu == 0) {
    ang = angular::Constant{};
  } else {
    ang = angular::Zonal{static_cast<int>(ds.mu), space.q};
  }
  return GeneratingFunction(space, ds, ang, radial::CoshPolynomial{Polynomial::constant(1), power},
                            "psi_lambda, lambda = " + to_string(ds.lambda));
}

namespace {

RadialForm checked_phi(const SpaceParams& space, const DiscreteSeriesParam& ds) {
  classify(space, ds);
  if (!ds.exceptional()) throw std::invalid_argument("xi_lambda requires an exceptional parameter (mu < 0)");
  return phi_nm(space, ds.n, ds.m);
}

Angular xi_angular(const DiscreteSeriesParam& ds) {
  if (ds.tag == SeriesTag::ExceptionalOdd) return angular::Cosine{};
  return angular::Constant{};
}

}  // namespace

GeneratingFunction make_xi(const SpaceParams& space, const DiscreteSeriesParam& ds) {
  const RadialForm phi = checked_phi(space, ds);
  const bool odd = ds.tag == SeriesTag::ExceptionalOdd;
  Polynomial p_lambda = phi.poly.shifted(-1);
  const Rational power = -(ds.lambda + space.rho + 2 * ds.m);
  if (power != 2 * phi.nu + (odd ? 1 : 0) || p_lambda.degree() != ds.m) {
    throw std::logic_error("make_xi: closed form does not match phi_{n,m}");
  }
  return GeneratingFunction(space, ds, xi_angular(ds), radial::CoshPolynomial{std::move(p_lambda), power},
                            "xi_lambda (P_lambda form), lambda = " + to_string(ds.lambda));
}

GeneratingFunction make_xi_phi_form(const SpaceParams& space, const DiscreteSeriesParam& ds) {
  RadialForm phi = checked_phi(space, ds);
  const bool odd = ds.tag == SeriesTag::ExceptionalOdd;
  return GeneratingFunction(space, ds, xi_angular(ds), radial::Phi{std::move(phi), odd},
                            "xi_lambda (phi form), lambda = " + to_string(ds.lambda));
}

GeneratingFunction make_generating_function(const SpaceParams& space, const DiscreteSeriesParam& ds) {
  return ds.exceptional() ? make_xi(space, ds) : make_psi(space, ds);
}

GeneratingFunction make_bump(const SpaceParams& space, double t0, int smoothness) {
  if (!(t0 > 0.0)) throw std::invalid_argument("make_bump: t0 must be positive");
  if (smoothness < 0) throw std::invalid_argument("make_bump: smoothness must be >= 0");
  return GeneratingFunction(space, std::nullopt, angular::Constant{}, radial::Bump{t0, smoothness},
                            "bump, t0 = " + std::to_string(t0));
}

GeneratingFunction make_power(const SpaceParams& space, double exponent, double log_power) {
  return GeneratingFunction(space, std::nullopt, angular::Constant{}, radial::PowerLog{exponent, log_power},
                            "power, exponent = " + std::to_string(exponent) +
                                ", log power = " + std::to_string(log_power));
}

double decay_norm(const GeneratingFunction& f, int N) {
  if (N < 2) throw std::invalid_argument("decay_norm: N must be >= 2");
  // Every angular factor used here has sup |a(theta)| = 1, attained at theta = 0.
  const double rho = to_double(f.space().rho);
  constexpr int kPoints = 4000;
  std::vector<double> logs;
  logs.reserve(kPoints + 1);
  auto log_weighted = [&](double t) {
    const double lc = log_cosh(t);
    return rho * lc + N * std::log1p(lc) + f.log_abs_radial(t);
  };
  logs.push_back(log_weighted(0.0));
  for (int k = 0; k < kPoints; ++k) {
    const double t = std::pow(10.0, -4.0 + 8.0 * k / (kPoints - 1));
    logs.push_back(log_weighted(t));
  }
  const auto argmax = std::max_element(logs.begin(), logs.end());
  const auto tail_start = logs.end() - kPoints / 50;
  if (argmax >= tail_start && std::is_sorted(tail_start, logs.end())) {
    return std::numeric_limits<double>::infinity();
  }
  return std::exp(*argmax);
}

}  // namespace cuspidal
