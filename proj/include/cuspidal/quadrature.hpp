#pragma once

#include <cstddef>
#include <functional>

namespace cuspidal::quad {

/// A value together with an absolute error bound, as returned by a nested integrand.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

struct Tolerance {
  double rel = 1e-10;  // relative to the L1 norm of the integrand
  double abs = 1e-14;
  std::size_t max_subdivisions = 2000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;  // Gauss/Kronrod discrepancy plus propagated integrand errors
  double l1 = 0.0;     // Kronrod estimate of int |f|
  std::size_t evaluations = 0;
  std::size_t subdivisions = 0;
  bool converged = false;

  double target(const Tolerance& tol) const;
};

using Integrand = std::function<Estimate(double)>;

/// Globally adaptive 7/15-point Gauss-Kronrod integration of f over [a, b].
///
/// Stops once error <= max(tol.abs, tol.rel * l1); otherwise bisects the interval
/// with the largest error, up to tol.max_subdivisions intervals. Endpoints are
/// never evaluated, so integrable endpoint singularities are allowed.
Result integrate(const Integrand& f, double a, double b, const Tolerance& tol);

/// Convenience overload for plain scalar integrands.
Result integrate(const std::function<double(double)>& f, double a, double b, const Tolerance& tol);

}  // namespace cuspidal::quad
