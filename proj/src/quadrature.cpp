#include "cuspidal/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace cuspidal::quad {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
using Gauss = boost::math::quadrature::gauss<double, 7>;

struct Segment {
  double a;
  double b;
  double value;
  double error;
  double l1;
  bool operator<(const Segment& other) const { return error < other.error; }
};

// Kronrod abscissae: index 0 is the centre, even indices are shared with the
// 7-point Gauss rule (weight index i/2), odd indices are Kronrod-only.
Segment apply_rule(const Integrand& f, double a, double b) {
  const auto& xk = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const Estimate f0 = f(centre);
  double kronrod = f0.value * wk[0];
  double gauss = f0.value * wg[0];
  double l1 = std::abs(f0.value) * wk[0];
  double propagated = f0.error * wk[0];
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const Estimate fp = f(centre + half * xk[i]);
    const Estimate fm = f(centre - half * xk[i]);
    const double sum = fp.value + fm.value;
    kronrod += sum * wk[i];
    l1 += (std::abs(fp.value) + std::abs(fm.value)) * wk[i];
    propagated += (fp.error + fm.error) * wk[i];
    if (i % 2 == 0) gauss += sum * wg[i / 2];
  }
  const double width = std::abs(half);
  const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * l1 * width;
  const double error = std::abs(kronrod - gauss) * width + propagated * width + roundoff;
  return Segment{a, b, kronrod * half, error, l1 * width};
}

}  // namespace

double Result::target(const Tolerance& tol) const { return std::max(tol.abs, tol.rel * l1); }

Result integrate(const Integrand& f, double a, double b, const Tolerance& tol) {
  Result result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  constexpr std::size_t kEvalsPerRule = 15;
  std::priority_queue<Segment> heap;
  heap.push(apply_rule(f, a, b));
  result.evaluations = kEvalsPerRule;

  double value = heap.top().value;
  double error = heap.top().error;
  double l1 = heap.top().l1;
  while (true) {
    if (!std::isfinite(value) || !std::isfinite(error)) break;
    if (error <= std::max(tol.abs, tol.rel * l1)) {
      result.converged = true;
      break;
    }
    if (heap.size() >= tol.max_subdivisions) break;
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) break;  // interval exhausted at machine precision
    heap.pop();
    const Segment left = apply_rule(f, worst.a, mid);
    const Segment right = apply_rule(f, mid, worst.b);
    result.evaluations += 2 * kEvalsPerRule;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum to shed the drift of the running updates.
  value = error = l1 = 0.0;
  result.subdivisions = heap.size();
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    l1 += heap.top().l1;
    heap.pop();
  }
  result.value = value;
  result.error = error;
  result.l1 = l1;
  if (!result.converged && error <= std::max(tol.abs, tol.rel * l1)) result.converged = true;
  return result;
}

Result integrate(const std::function<double(double)>& f, double a, double b, const Tolerance& tol) {
  return integrate(Integrand([&f](double x) { return Estimate{f(x), 0.0}; }), a, b, tol);
}

}  // namespace cuspidal::quad
