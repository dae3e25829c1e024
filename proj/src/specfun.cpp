#include "cuspidal/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cuspidal {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(const Rational& shift) const {
  // Horner in polynomial arithmetic: P(u + c) = (...(a_d (u+c) + a_{d-1})(u+c) + ...).
  const Polynomial linear({shift, Rational(1)});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * linear + constant(*it);
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  std::vector<Rational> out = a.coeffs_;
  for (auto& v : out) v *= c;
  return Polynomial(std::move(out));
}

double RadialForm::evaluate(double u) const {
  return poly.evaluate(u) * std::pow(1.0 + u, to_double(nu));
}

namespace {

void check_zonal_args(int mu, int q) {
  if (mu < 0) throw std::invalid_argument("zonal: degree must be nonnegative");
  if (q < 2) throw std::invalid_argument("zonal: q must be >= 2 (q = 1 uses e^{i mu theta})");
}

}  // namespace

double zonal(int mu, int q, double x) {
  check_zonal_args(mu, q);
  if (!(std::abs(x) <= 1.0)) throw std::domain_error("zonal: |x| > 1");
  if (mu == 0) return 1.0;
  // Gegenbauer recurrence run at x and at 1 side by side.
  const double a = 0.5 * (q - 1);
  double c_prev = 1.0, c = 2.0 * a * x;
  double one_prev = 1.0, one = 2.0 * a;
  for (int n = 2; n <= mu; ++n) {
    const double c_next = (2.0 * x * (n + a - 1.0) * c - (n + 2.0 * a - 2.0) * c_prev) / n;
    const double one_next = (2.0 * (n + a - 1.0) * one - (n + 2.0 * a - 2.0) * one_prev) / n;
    c_prev = c;
    c = c_next;
    one_prev = one;
    one = one_next;
  }
  return c / one;
}

Polynomial zonal_coefficients(int mu, int q) {
  check_zonal_args(mu, q);
  const Rational a = half(q - 1);
  const Polynomial x = Polynomial::monomial(1, 1);
  Polynomial c_prev = Polynomial::constant(1);
  if (mu == 0) return c_prev;
  Polynomial c = Rational(2 * a) * x;
  for (int n = 2; n <= mu; ++n) {
    Polynomial next = Rational(Rational(2) * (n + a - 1) / n) * (x * c) -
                      Rational((n + 2 * a - 2) / n) * c_prev;
    c_prev = std::move(c);
    c = std::move(next);
  }
  return Rational(1 / c(Rational(1))) * c;
}

RadialForm laplacian_step(const RadialForm& form, int p) {
  // g = P (1+u)^nu;  4u g'' + 2p g' = (1+u)^{nu-2} * [
  //   4u(1+u)^2 P'' + 8 nu u(1+u) P' + 4 nu(nu-1) u P + 2p(1+u)^2 P' + 2p nu (1+u) P ].
  const Polynomial& P = form.poly;
  const Rational& nu = form.nu;
  const Polynomial u = Polynomial::monomial(1, 1);
  const Polynomial one_plus_u({Rational(1), Rational(1)});
  const Polynomial sq = one_plus_u * one_plus_u;
  const Polynomial d1 = P.derivative();
  const Polynomial d2 = d1.derivative();

  Polynomial out = Rational(4) * (u * sq * d2) + Rational(8 * nu) * (u * one_plus_u * d1) +
                   Rational(4 * nu * (nu - 1)) * (u * P) + Rational(2 * p) * (sq * d1) +
                   Rational(2 * p * nu) * (one_plus_u * P);
  return RadialForm{std::move(out), nu - 2};
}

RadialForm phi_nm(const SpaceParams& space, int n, int m) {
  if (m < 1 || (n != 2 * m && n != 2 * m - 1)) {
    throw std::invalid_argument("phi_nm: need m >= 1 and n in {2m-1, 2m}, got n=" + std::to_string(n) +
                                ", m=" + std::to_string(m));
  }
  const Rational nu0 = Rational(n) - space.rho_c;
  if (!(nu0 < Rational(-space.p, 2))) {
    throw std::invalid_argument("phi_nm: requires n - rho_c < -p/2");
  }
  RadialForm form{Polynomial::constant(1), nu0};
  for (int k = 0; k < m; ++k) form = laplacian_step(form, space.p);
  if (form.poly.degree() != m) {
    throw std::logic_error("phi_nm: polynomial degree " + std::to_string(form.poly.degree()) +
                           " differs from m = " + std::to_string(m));
  }
  return form;
}

double beta_integral(double k, double l) {
  if (!(k > 0.0 && l > k)) throw std::domain_error("beta_integral: requires 0 < k < l");
  return std::exp(std::lgamma(k) + std::lgamma(l - k) - std::lgamma(l));
}

double beta_linear_integral(double k, double l) {
  if (!(k > 0.0 && k < l - 1.0)) throw std::domain_error("beta_linear_integral: requires 0 < k < l - 1");
  return (l - 2.0 * k - 1.0) * std::exp(std::lgamma(k) + std::lgamma(l - k - 1.0) - std::lgamma(l));
}

}  // namespace cuspidal
