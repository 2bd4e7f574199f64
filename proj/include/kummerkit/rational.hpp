#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace kummerkit {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational scalar. Kept reduced to lowest terms
/// with a positive denominator; the canonical zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

/// Parse "p/q", a plain integer, or a decimal string ("0.25", "-2.5e-3").
/// Decimal input converts exactly, never through a float.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational rational_from_string(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_fraction_string(const Rational& q);

/// Nearest double (overflow saturates to +/-inf, underflow to 0).
double to_double(const Rational& q);

/// Exact dyadic rational equal to the given double.
/// Throws std::invalid_argument for NaN or infinities.
Rational rational_from_double(double x);

bool is_integer(const Rational& q);
bool is_nonpositive_integer(const Rational& q);
bool is_odd_integer(const Rational& q);

}  // namespace kummerkit
