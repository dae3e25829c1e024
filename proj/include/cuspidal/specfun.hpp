#pragma once

#include "cuspidal/params.hpp"
#include "cuspidal/rational.hpp"

#include <vector>

namespace cuspidal {

/// Dense polynomial with exact rational coefficients, lowest degree first.
/// The highest stored coefficient is nonzero; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;

  Polynomial derivative() const;
  /// P(u) -> P(u + shift).
  Polynomial shifted(const Rational& shift) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  bool operator==(const Polynomial&) const = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// u -> P(u) (1+u)^nu, the radial factor of iterated Laplacians of (1+|x|^2)^nu.
struct RadialForm {
  Polynomial poly;
  Rational nu;

  /// Finite for every u >= 0.
  double evaluate(double u) const;
  bool operator==(const RadialForm&) const = default;
};

/// Normalized zonal spherical polynomial R_mu on SO(q+1)/SO(q):
/// the Gegenbauer polynomial C_mu^{(q-1)/2} divided by its value at 1.
/// Requires mu >= 0, q >= 2, |x| <= 1 (std::domain_error / std::invalid_argument).
double zonal(int mu, int q, double x);

/// Exact coefficients of R_mu in powers of x.
Polynomial zonal_coefficients(int mu, int q);

/// Radial form of the Euclidean Laplacian on R^p applied to x -> P(|x|^2)(1+|x|^2)^nu.
/// With u = |x|^2 the Laplacian acts as 4u d^2/du^2 + 2p d/du; the returned exponent is
/// always nu - 2, with any leftover (1+u) factors multiplied into the polynomial.
RadialForm laplacian_step(const RadialForm& form, int p);

/// phi_{n,m}(u): the m-fold Laplacian on R^p of (1+|x|^2)^{n - rho_c}, restricted radially.
/// Requires n in {2m-1, 2m} and n - rho_c < -p/2. The result has degree exactly m and
/// exponent n - 2m - rho_c; a shortfall throws std::logic_error.
RadialForm phi_nm(const SpaceParams& space, int n, int m);

/// int_0^inf y^{k-1} (1+y)^{-l} dy = Gamma(k) Gamma(l-k) / Gamma(l), for 0 < k < l.
double beta_integral(double k, double l);

/// int_0^inf (1-y) y^{k-1} (1+y)^{-l} dy = (l-2k-1) Gamma(k) Gamma(l-k-1) / Gamma(l), for 0 < k < l-1.
double beta_linear_integral(double k, double l);

}  // namespace cuspidal
