#pragma once

#include "cuspidal/rational.hpp"

#include <string_view>
#include <vector>

namespace cuspidal {

/// Which coordinate reduction of the N*-integral applies: A is p > q, B is q >= p.
enum class SpaceCase { A, B };

/// The hyperbolic space X_{p,q} = SO(p,q+1)_e / SO(p,q)_e and its derived constants.
///
/// All half-integer constants are exact. alpha and beta are the exponents of the
/// radial N*-measure x^alpha y^beta dx dy; alpha == -1 exactly when the x-integral
/// is absent (degenerate_x).
struct SpaceParams {
  int p = 1;
  int q = 1;
  Rational rho;    // (p+q-1)/2
  Rational rho_c;  // (q-1)/2
  Rational rho1;   // shift in A f(s) = e^{rho1 s} R f(s)
  int alpha = 0;
  int beta = 0;
  SpaceCase case_tag = SpaceCase::B;
  bool degenerate_x = false;

  bool operator==(const SpaceParams&) const = default;
};

/// Throws std::invalid_argument unless p >= 1 and q >= 1.
SpaceParams make_space(int p, int q);

enum class SeriesTag { Cuspidal, SphericalNonCuspidal, ExceptionalEven, ExceptionalOdd };

std::string_view to_string(SeriesTag tag);

/// A discrete-series parameter lambda with its K-type index mu and classification.
///
/// n and m index the exceptional generating function: mu = -n, n = 2m (even) or
/// n = 2m - 1 (odd). Both are zero when mu >= 0.
struct DiscreteSeriesParam {
  Rational lambda;
  long mu = 0;
  SeriesTag tag = SeriesTag::Cuspidal;
  int n = 0;
  int m = 0;
  bool descends_to_projective = false;

  bool cuspidal() const { return tag == SeriesTag::Cuspidal; }
  bool exceptional() const {
    return tag == SeriesTag::ExceptionalEven || tag == SeriesTag::ExceptionalOdd;
  }
  /// Contains the trivial K-type: mu <= 0 and even (q > 1).
  bool spherical() const { return tag != SeriesTag::Cuspidal && mu % 2 == 0; }

  bool operator==(const DiscreteSeriesParam&) const = default;
};

/// mu_lambda for a nonzero lambda; negative lambda is accepted only for q == 1.
/// Throws std::invalid_argument if mu_lambda is not an integer or lambda is not admissible.
long mu_of(const SpaceParams& space, const Rational& lambda);

/// Validates lambda against the space and classifies it.
DiscreteSeriesParam make_discrete_series(const SpaceParams& space, const Rational& lambda);

/// All discrete-series parameters with 0 < |lambda| <= lambda_max, ordered by lambda.
/// For q == 1 both signs are returned.
std::vector<DiscreteSeriesParam> enumerate_discrete_series(const SpaceParams& space,
                                                           const Rational& lambda_max);

/// Recomputes the tag from (space, lambda) and checks it against ds.
/// Throws std::invalid_argument if ds is inconsistent with the space.
SeriesTag classify(const SpaceParams& space, const DiscreteSeriesParam& ds);

}  // namespace cuspidal
