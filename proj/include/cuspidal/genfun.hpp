#pragma once

#include "cuspidal/params.hpp"
#include "cuspidal/specfun.hpp"

#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <variant>

namespace cuspidal {

/// Angular factor k_theta -> a(theta) of a K∩H-invariant function.
namespace angular {
struct Zonal {
  int mu;
  int q;
};  // R_mu(cos theta), q >= 2
struct Exponential {
  int mu;
};  // e^{i mu theta}, q == 1
struct Constant {};
struct Cosine {};
}  // namespace angular

using Angular = std::variant<angular::Zonal, angular::Exponential, angular::Constant, angular::Cosine>;

/// Radial factor t -> r(t), always even in t.
namespace radial {
/// P(cosh^2 t) (cosh t)^power.
struct CoshPolynomial {
  Polynomial poly;
  Rational power;
};
/// phi(sinh^2 t), times cosh t when times_cosh is set.
struct Phi {
  RadialForm phi;
  bool times_cosh;
};
/// Smooth bump supported in |t| < t0: exp(1 - 1/(1-r^2)) for smoothness 0,
/// (1-r^2)^smoothness otherwise, with r = t/t0.
struct Bump {
  double t0;
  int smoothness;
};
/// (cosh t)^{-exponent} (1 + log cosh t)^{-log_power}.
struct PowerLog {
  double exponent;
  double log_power;
};
}  // namespace radial

using Radial = std::variant<radial::CoshPolynomial, radial::Phi, radial::Bump, radial::PowerLog>;

enum class ValueKind { Real, Complex };

/// A point k_theta a_t H described by cos(theta), sin(theta) and cosh^2(t).
struct PolarPoint {
  double cos_theta;
  double sin_theta;
  double cosh2t;
};

/// |f(k a_t)| <= constant * (cosh t)^{-gamma}, and f vanishes once cosh^2 t >= support_cosh2.
struct Majorant {
  double gamma;
  double constant;
  double support_cosh2 = std::numeric_limits<double>::infinity();
};

/// K∩H-invariant function f(k_theta a_t H) = angular(theta) * radial(t) / f_raw(e).
class GeneratingFunction {
 public:
  GeneratingFunction(SpaceParams space, std::optional<DiscreteSeriesParam> ds, Angular angular, Radial radial,
                     std::string provenance);

  std::complex<double> operator()(double theta, double t) const;
  std::complex<double> at(const PolarPoint& point) const;

  std::complex<double> angular_value(double cos_theta, double sin_theta) const;
  /// Normalized radial factor as a function of w = cosh^2 t >= 1.
  double radial_value(double cosh2t) const;
  /// Normalized radial factor at t; stays finite past the overflow of cosh^2 t.
  double radial_at(double t) const;
  /// log |radial_at(t)|, -inf where it vanishes.
  double log_abs_radial(double t) const;

  ValueKind value_kind() const;
  bool k_invariant() const { return std::holds_alternative<angular::Constant>(angular_); }
  Majorant majorant() const;
  /// lim_{t->inf} (cosh t)^gamma radial(t) with gamma from majorant(); 0 for compact support.
  double radial_limit() const;

  const SpaceParams& space() const { return space_; }
  const std::optional<DiscreteSeriesParam>& ds() const { return ds_; }
  const Angular& angular() const { return angular_; }
  const Radial& radial() const { return radial_; }
  const std::string& provenance() const { return provenance_; }
  double normalization() const { return normalization_; }

 private:
  double raw_radial(double cosh2t) const;

  SpaceParams space_;
  std::optional<DiscreteSeriesParam> ds_;
  Angular angular_;
  Radial radial_;
  std::string provenance_;
  double normalization_ = 1.0;
};

/// psi_lambda: R_mu(cos theta)(cosh t)^{-lambda-rho} for q > 1 and mu >= 0,
/// e^{i mu theta}(cosh t)^{-|lambda|-rho} for q == 1.
GeneratingFunction make_psi(const SpaceParams& space, const DiscreteSeriesParam& ds);

/// xi_lambda for exceptional parameters in the closed form
/// [cos theta] P_lambda(cosh^2 t)(cosh t)^{-lambda-rho-2m}, P_lambda built from phi_{n,m}.
GeneratingFunction make_xi(const SpaceParams& space, const DiscreteSeriesParam& ds);

/// The same xi_lambda evaluated through phi_{n,m}(sinh^2 t) directly.
GeneratingFunction make_xi_phi_form(const SpaceParams& space, const DiscreteSeriesParam& ds);

/// psi or xi as appropriate for ds.
GeneratingFunction make_generating_function(const SpaceParams& space, const DiscreteSeriesParam& ds);

/// K-invariant bump g(t) with g(0) = 1, g >= 0, supported in |t| < t0.
GeneratingFunction make_bump(const SpaceParams& space, double t0, int smoothness = 0);

/// K-invariant (cosh t)^{-exponent} (1 + log cosh t)^{-log_power}.
GeneratingFunction make_power(const SpaceParams& space, double exponent, double log_power = 0.0);

/// Grid approximation of sup_t (cosh t)^rho (1 + log cosh t)^N sup_theta |f|.
/// Returns +inf when the supremum keeps growing at the end of the grid.
double decay_norm(const GeneratingFunction& f, int N);

}  // namespace cuspidal
