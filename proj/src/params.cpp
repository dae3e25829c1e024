#include "cuspidal/params.hpp"

#include <stdexcept>
#include <string>

namespace cuspidal {

SpaceParams make_space(int p, int q) {
  if (p < 1 || q < 1) {
    throw std::invalid_argument("make_space: need p >= 1 and q >= 1, got (" + std::to_string(p) + "," +
                                std::to_string(q) + ")");
  }
  SpaceParams s;
  s.p = p;
  s.q = q;
  s.rho = half(p + q - 1);
  s.rho_c = half(q - 1);
  if (p > q) {
    s.case_tag = SpaceCase::A;
    s.rho1 = half(p - q - 1);
    s.alpha = p - 2 - q;
    s.beta = q - 1;
    s.degenerate_x = (p - 1 == q);
  } else {
    s.case_tag = SpaceCase::B;
    s.rho1 = half(q - p + 1);
    s.alpha = p - 2;
    s.beta = q - p;
    s.degenerate_x = (p == 1);
  }
  return s;
}

std::string_view to_string(SeriesTag tag) {
  switch (tag) {
    case SeriesTag::Cuspidal: return "Cuspidal";
    case SeriesTag::SphericalNonCuspidal: return "SphericalNonCuspidal";
    case SeriesTag::ExceptionalEven: return "ExceptionalEven";
    case SeriesTag::ExceptionalOdd: return "ExceptionalOdd";
  }
  return "?";
}

long mu_of(const SpaceParams& space, const Rational& lambda) {
  if (lambda == 0) throw std::invalid_argument("discrete-series parameter must be nonzero");
  Rational mu;
  if (space.q > 1) {
    if (lambda < 0) {
      throw std::invalid_argument("negative lambda " + to_string(lambda) + " requires q == 1");
    }
    mu = lambda + space.rho - 2 * space.rho_c;
  } else {
    if (!is_integer(abs(lambda) + space.rho)) {
      throw std::invalid_argument("|lambda| + rho is not an integer for lambda = " + to_string(lambda));
    }
    mu = lambda > 0 ? Rational(lambda + space.rho) : Rational(lambda - space.rho);
  }
  if (!is_integer(mu)) {
    throw std::invalid_argument("mu_lambda = " + to_string(mu) + " is not an integer");
  }
  return to_long(mu);
}

namespace {

SeriesTag tag_for(const SpaceParams& space, long mu) {
  if (space.q == 1 || mu > 0) return SeriesTag::Cuspidal;
  if (mu == 0) return SeriesTag::SphericalNonCuspidal;
  return (-mu) % 2 == 0 ? SeriesTag::ExceptionalEven : SeriesTag::ExceptionalOdd;
}

}  // namespace

DiscreteSeriesParam make_discrete_series(const SpaceParams& space, const Rational& lambda) {
  DiscreteSeriesParam ds;
  ds.lambda = lambda;
  ds.mu = mu_of(space, lambda);
  ds.tag = tag_for(space, ds.mu);
  if (ds.mu < 0) {
    ds.n = static_cast<int>(-ds.mu);
    ds.m = (ds.n + 1) / 2;
  }
  ds.descends_to_projective = (ds.mu % 2 == 0);
  return ds;
}

std::vector<DiscreteSeriesParam> enumerate_discrete_series(const SpaceParams& space,
                                                           const Rational& lambda_max) {
  if (lambda_max <= 0) throw std::invalid_argument("lambda_max must be positive");
  // Admissible lambda form a coset offset + Z intersected with (0, lambda_max].
  const Rational offset = space.q > 1 ? Rational(space.rho_c * 2 - space.rho) : Rational(-space.rho);
  Rational frac = offset - Rational(floor(offset.convert_to<double>()));
  while (frac < 0) frac += 1;
  while (frac >= 1) frac -= 1;
  Rational first = frac == 0 ? Rational(1) : frac;

  std::vector<DiscreteSeriesParam> positive;
  for (Rational lambda = first; lambda <= lambda_max; lambda += 1) {
    positive.push_back(make_discrete_series(space, lambda));
  }
  if (space.q > 1) return positive;

  std::vector<DiscreteSeriesParam> out;
  out.reserve(2 * positive.size());
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
    out.push_back(make_discrete_series(space, Rational(-it->lambda)));
  }
  out.insert(out.end(), positive.begin(), positive.end());
  return out;
}

SeriesTag classify(const SpaceParams& space, const DiscreteSeriesParam& ds) {
  const DiscreteSeriesParam expected = make_discrete_series(space, ds.lambda);
  if (expected != ds) {
    throw std::invalid_argument("discrete-series record for lambda = " + to_string(ds.lambda) +
                                " is inconsistent with space (" + std::to_string(space.p) + "," +
                                std::to_string(space.q) + ")");
  }
  return expected.tag;
}

}  // namespace cuspidal
