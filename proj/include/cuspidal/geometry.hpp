#pragma once

#include "cuspidal/params.hpp"

namespace cuspidal {

/// cosh^2 t of the point a_s n* H with radial N*-coordinates (x, y):
///   case A: y^2 + (cosh s + e^s x^2 / 2)^2
///   case B: x^2 + y^2 + (cosh s - e^s y^2 / 2)^2
double theta(const SpaceParams& space, double s, double x, double y);

/// (t, theta) of the double coset (K∩H) a_s n* H.
///
/// sin_theta is reported nonnegative: its magnitude is y / cosh t (case A) or
/// sqrt(x^2 + y^2) / cosh t (case B). For q == 1 the true sign is that of -v, where
/// v is the signed N*-coordinate with |v| = y; callers integrating over v supply it.
struct PolarCoords {
  double t;
  double cos_theta;
  double sin_theta;
  double cosh2t;
};

/// t >= 0 for p > 1; for p == 1 the sign of t follows sinh t = sinh s - e^s y^2 / 2.
/// Throws std::logic_error if |cos theta| exceeds 1 beyond rounding.
PolarCoords recover_coords(const SpaceParams& space, double s, double x, double y);

enum class BoundShape {
  QuarticInX,  // Theta >= y^2 + a x^4 + b  (case A)
  QuarticInY,  // Theta >= x^2 + a y^4 + b  (case B)
};

struct ThetaBound {
  double a;
  double b;
  BoundShape shape;
};

/// Lower bound for Theta(s, ., .): a = e^{2s}/4, b = cosh^2 s in case A or for s <= 0;
/// a = 1/4, b = 3/4 in case B with s > 0.
ThetaBound theta_lower_bound(const SpaceParams& space, double s);

enum class Convergence { Converges, ConvergesLog, Unknown };

/// Integrability of int int (1 + x^a + y^b)^{-gamma} x^{c-1} y^{d-1} [(1 + log(...))^{-delta}]:
/// Converges when c/a + d/b < gamma, ConvergesLog on equality with delta > 1, else Unknown.
Convergence convergence_criterion(double a, double b, double c, double d, double gamma, double delta = 0.0);

}  // namespace cuspidal
