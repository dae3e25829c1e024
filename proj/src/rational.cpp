#include "cuspidal/rational.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace cuspidal {

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

BigInt parse_digits(std::string_view digits, std::string_view original) {
  if (digits.empty()) throw std::invalid_argument("malformed rational: '" + std::string(original) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("malformed rational: '" + std::string(original) + "'");
  }
  return BigInt(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_digits(body.substr(0, slash), text);
    BigInt den = parse_digits(body.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Rational(num, den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part = body.substr(dot + 1);
    BigInt whole = int_part.empty() ? BigInt(0) : parse_digits(int_part, text);
    BigInt frac = frac_part.empty() ? BigInt(0) : parse_digits(frac_part, text);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
    value = Rational(whole * scale + frac, scale);
  } else {
    value = Rational(parse_digits(body, text));
  }
  return negative ? Rational(-value) : value;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

long to_long(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("not an integer: " + to_string(r));
  const BigInt& n = numerator(r);
  if (n > std::numeric_limits<long>::max() || n < std::numeric_limits<long>::min()) {
    throw std::domain_error("integer out of range: " + to_string(r));
  }
  return n.convert_to<long>();
}

}  // namespace cuspidal
