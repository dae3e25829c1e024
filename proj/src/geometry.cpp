#include "cuspidal/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cuspidal {

namespace {

// cosh t * cos theta, the last coordinate of a_s n* x0.
double cos_numerator(const SpaceParams& space, double s, double x, double y) {
  const double half_es = 0.5 * std::exp(s);
  return space.case_tag == SpaceCase::A ? std::cosh(s) + half_es * x * x : std::cosh(s) - half_es * y * y;
}

}  // namespace

double theta(const SpaceParams& space, double s, double x, double y) {
  const double c = cos_numerator(space, s, x, y);
  if (space.case_tag == SpaceCase::A) return y * y + c * c;
  return x * x + y * y + c * c;
}

PolarCoords recover_coords(const SpaceParams& space, double s, double x, double y) {
  if (space.degenerate_x) x = 0.0;
  const double c = cos_numerator(space, s, x, y);
  const double sin_num = space.case_tag == SpaceCase::A ? std::abs(y) : std::hypot(x, y);
  const double cosh2t = sin_num * sin_num + c * c;
  const double cosh_t = std::sqrt(cosh2t);
  double cos_theta = c / cosh_t;
  if (std::abs(cos_theta) > 1.0 + 1e-12) throw std::logic_error("recover_coords: |cos theta| > 1");
  cos_theta = std::clamp(cos_theta, -1.0, 1.0);

  double t = std::asinh(std::sqrt(std::max(0.0, cosh2t - 1.0)));
  if (space.p == 1) {
    // Only case B reaches p == 1; there x vanishes and the sign of t is meaningful.
    const double sinh_t = std::sinh(s) - 0.5 * std::exp(s) * y * y;
    t = std::asinh(sinh_t);
  }
  return PolarCoords{t, cos_theta, sin_num / cosh_t, cosh2t};
}

ThetaBound theta_lower_bound(const SpaceParams& space, double s) {
  if (space.case_tag == SpaceCase::A || s <= 0.0) {
    const double c = std::cosh(s);
    return ThetaBound{0.25 * std::exp(2.0 * s), c * c,
                      space.case_tag == SpaceCase::A ? BoundShape::QuarticInX : BoundShape::QuarticInY};
  }
  return ThetaBound{0.25, 0.75, BoundShape::QuarticInY};
}

Convergence convergence_criterion(double a, double b, double c, double d, double gamma, double delta) {
  if (!(a > 0 && b > 0 && c > 0 && d > 0 && gamma > 0)) {
    throw std::invalid_argument("convergence_criterion: a, b, c, d, gamma must be positive");
  }
  const double lhs = c / a + d / b;
  const double scale = std::max(std::abs(lhs), std::abs(gamma));
  if (std::abs(lhs - gamma) <= 1e-14 * scale) return delta > 1.0 ? Convergence::ConvergesLog : Convergence::Unknown;
  return lhs < gamma ? Convergence::Converges : Convergence::Unknown;
}

}  // namespace cuspidal
