#pragma once

#include "cuspidal/genfun.hpp"
#include "cuspidal/params.hpp"

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cuspidal {

/// Coordinates in which the N*-integral is evaluated.
///   Direct         truncated box [0,R]^2 in (x, y), R certified by a closed-form tail bound
///   CompactifyTan  (x, y) mapped onto finite intervals, tails through x = c + L sinh(tan phi)
///   SubstA         case A: e^s x^2 / 2 = cosh(s) xi^2, y = cosh(s) eta
///   SubstB_zz      case B: v = -sinh s + e^s y^2 / 2, so that Theta = 1 + x^2 + v^2
///   SubstB_uv      case B: u = e^s x, v = (1 + e^{2s}(y^2 - 1)) / 2, Theta = 1 + e^{-2s}(u^2 + v^2)
///   Auto           CompactifyTan, except SubstB_zz for case B with s > 0
enum class Substitution { Auto, Direct, CompactifyTan, SubstA, SubstB_zz, SubstB_uv };

std::string_view to_string(Substitution s);
/// Accepts the names printed by to_string; throws std::invalid_argument otherwise.
Substitution parse_substitution(std::string_view name);

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
  std::size_t max_subdivisions = 4000;
  /// Direct only: the certified tail must be below truncation_margin * abs_tol.
  double truncation_margin = 0.5;
  Substitution substitution = Substitution::Auto;

  /// Throws std::invalid_argument on nonpositive tolerances or max_subdivisions == 0.
  void validate() const;
};

struct RadonSample {
  double s = 0.0;
  std::complex<double> value;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
  double l1_norm = 0.0;     // integral of |integrand| as seen by the outer rule
  double tail_bound = 0.0;  // Direct only: certified bound on the discarded tail
};

/// The requested tolerance was not met; best() is the estimate reached.
class QuadratureFailure : public std::runtime_error {
 public:
  QuadratureFailure(const std::string& what, RadonSample best);
  const RadonSample& best() const { return best_; }

 private:
  RadonSample best_;
};

/// The decay hypothesis of the Radon transform does not hold for f.
class DecayViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rf(s) = int_0^inf int_0^inf f(a_s n* H) x^alpha y^beta dx dy.
///
/// For q == 1 the v-coordinate carries a sign; both signs are averaged, which is the
/// same as integrating over the whole line with weight 1/2.
/// Throws DecayViolation if decay_norm(f, 2) is infinite, QuadratureFailure if the
/// tolerance is not reached.
RadonSample radon_at(const GeneratingFunction& f, double s, const QuadratureConfig& cfg = {});

/// Rf(s) through SubstB_zz (s > 0) or SubstB_uv (s <= 0), unless cfg already
/// names one of them. Case B only (std::invalid_argument otherwise).
RadonSample radon_substituted_B(const GeneratingFunction& f, double s, const QuadratureConfig& cfg = {});

/// Rf at every s, evaluated concurrently. The thread count is the hardware concurrency,
/// capped by CUSPIDAL_RADON_THREADS when set. Failed samples are returned with
/// converged == false instead of throwing.
std::vector<RadonSample> radon_profile(const GeneratingFunction& f, const std::vector<double>& s_values,
                                       const QuadratureConfig& cfg = {});

/// Uniform grid lo, lo + step, ..., up to hi inclusive (within step / 1000).
std::vector<double> uniform_grid(double lo, double hi, double step);

/// Worker count for parallel evaluation (>= 1).
unsigned radon_threads();

/// lim_{s -> inf} e^s Rf(s) = int_0^inf int_R F(1 + x^2 + v^2) x^alpha dv dx, evaluated
/// directly. Requires p < q and K-invariant f.
double limit_at_plus_infinity(const GeneratingFunction& f, const QuadratureConfig& cfg = {});

struct TruncatedIntegral {
  double T;
  double value;
  double error;
};

/// int_0^T int_0^T (y^2 + (1 + (x^2 - y^2)/2)^2)^{-(rho+nu)/2} x^{p-2} y^{q-1} dx dy for
/// each T: the radial form of the integral of (cosh t)^{-rho-nu} over all of N.
/// Requires p > 1 and p + q > 3.
std::vector<TruncatedIntegral> divergence_witness(const SpaceParams& space, double nu,
                                                  const std::vector<double>& T_list, const QuadratureConfig& cfg = {});

}  // namespace cuspidal
