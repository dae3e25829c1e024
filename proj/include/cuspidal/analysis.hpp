#pragma once

#include "cuspidal/genfun.hpp"
#include "cuspidal/params.hpp"
#include "cuspidal/radon.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace cuspidal {

enum class Verdict { CuspidalNumeric, NonCuspidalNumeric, Inconclusive };

std::string_view to_string(Verdict v);

/// The design matrix of a fit is numerically singular.
class IllConditioned : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Rf(s) ~ C1 e^{(-rho1+lambda)s} + C2 e^{(-rho1-lambda)s}, fitted on the real parts.
struct ExponentialFit {
  double C1 = 0.0;
  double C2 = 0.0;
  double sigma_C1 = 0.0;  // standard errors implied by the per-sample error estimates
  double sigma_C2 = 0.0;
  double residual = 0.0;  // weighted RMS misfit divided by the weighted RMS of the samples
  double condition = 1.0;
};

/// Rf(s) ~ C e^{exponent s}, fitted on log|Rf|.
struct SingleExponentFit {
  double exponent = 0.0;
  double C = 0.0;
  double residual = 0.0;  // RMS of the weighted log misfit
};

struct VerdictTolerances {
  double vanish_factor = 1e3;  // |value| <= vanish_factor * error counts as zero
  double signal_factor = 1e6;  // |C1| > signal_factor * sigma_C1 counts as a signal
};

struct RadonProfile {
  SpaceParams space;
  std::optional<DiscreteSeriesParam> ds;
  std::vector<RadonSample> samples;
  double C1 = 0.0;
  double C2 = 0.0;
  double residual = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  bool fitted = false;  // the two-exponential fit ran (enough samples, well conditioned)
  ExponentialFit fit;
  std::optional<SingleExponentFit> single;
};

/// Weighted least squares with weights 1/error_estimate (floored at 1e-15 |value|).
/// Throws std::invalid_argument for fewer than 4 samples or lambda == 0, IllConditioned
/// when the weighted design has condition number above 1e12.
ExponentialFit fit_exponentials(const std::vector<RadonSample>& samples, double lambda, double rho1);

/// Throws std::invalid_argument for fewer than 2 samples or if any sample is zero.
SingleExponentFit fit_single_exponent(const std::vector<RadonSample>& samples);

/// CuspidalNumeric when every |Rf(s_i)| is within vanish_factor of its error estimate;
/// NonCuspidalNumeric when |C1| > signal_factor sigma_C1 and |C2| <= vanish_factor sigma_C2.
Verdict decide_cuspidality(const std::vector<RadonSample>& samples, const ExponentialFit& fit,
                           const VerdictTolerances& tol = {});

/// Samples Rf on s_grid and fits both models. Failed samples make the verdict Inconclusive.
RadonProfile make_profile(const GeneratingFunction& f, const std::vector<double>& s_grid,
                          const QuadratureConfig& cfg = {}, const VerdictTolerances& tol = {});

/// Uniform [-4, 4] for case A and [-6, 2] for case B, step 0.25.
std::vector<double> default_s_grid(const SpaceParams& space);

/// max over interior nodes of |D^2 A(s) - lambda^2 A(s)| / (|lambda^2 A(s)| + floor), with
/// A(s) = e^{rho1 s} Re Rf(s), D^2 the central second difference and floor the size of
/// D^2 applied to the sample noise. Throws std::invalid_argument on a nonuniform grid.
double verify_A_ode(const std::vector<RadonSample>& samples, double lambda, double rho1);

/// Predicted lim_{s -> -inf} e^{(1 - mu) s} Rf(s) for the exceptional generating function.
/// Odd case: a product of two one-dimensional integrals, the second in closed form.
/// Even case: the limiting double integral by quadrature.
double exceptional_limit_oracle(const SpaceParams& space, const DiscreteSeriesParam& ds,
                                const QuadratureConfig& cfg = {});

/// Which ends of a grid point towards an unbounded direction.
enum class GrowthEnd { Both, Low, High };

/// Picks Low for grids within s <= 0, High for s >= 0, Both otherwise.
GrowthEnd growth_end_for(const std::vector<double>& s_grid);

/// True when the values grow towards a checked end of the grid: the maximum sits at that
/// end, the last third leading up to it is strictly monotone, and its increments do not
/// shrink by a factor 0.9 or better at every step (which would leave them summable).
bool has_growth_trend(const std::vector<double>& values, GrowthEnd end = GrowthEnd::Both);

/// Checks e^{rho1 s}|Rf(s)| <= C (cosh s)^{-gamma/2} on s_grid with C the largest ratio,
/// i.e. that the ratio shows no growth trend towards the unbounded end(s) of the grid.
bool verify_decay_lemma(const GeneratingFunction& f, double gamma, const std::vector<double>& s_grid,
                        const QuadratureConfig& cfg = {});

/// max_s |R psi_{-lambda}(s) - conj(R psi_lambda(s))| for q == 1, together with the summed
/// error estimates at the worst point.
struct ConjugationCheck {
  double max_defect = 0.0;
  double error_budget = 0.0;
};
ConjugationCheck q1_conjugation_check(const SpaceParams& space, const Rational& lambda,
                                      const std::vector<double>& s_grid, const QuadratureConfig& cfg = {});

}  // namespace cuspidal
