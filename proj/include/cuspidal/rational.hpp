#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace cuspidal {

/// Exact arbitrary-precision rational number.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Serializes as "num/den", always with an explicit denominator.
std::string to_string(const Rational& r);

/// Parses "n", "n/d" or a finite decimal such as "-0.25". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

bool is_integer(const Rational& r);

/// Requires is_integer(r); throws std::domain_error otherwise or on overflow.
long to_long(const Rational& r);

inline Rational half(long numerator) { return Rational(numerator, 2); }

}  // namespace cuspidal
