#include "kummerkit/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace kummerkit {

namespace {

bool valid_integer_token(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

[[noreturn]] void bad_input(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

// The cpp_int string constructor treats a leading 0 as an octal prefix, so
// feed it canonicalized digits.
BigInt bigint_from_token(std::string_view token) {
  bool negative = false;
  std::size_t i = 0;
  if (!token.empty() && (token[0] == '+' || token[0] == '-')) {
    negative = (token[0] == '-');
    i = 1;
  }
  while (i + 1 < token.size() && token[i] == '0') ++i;
  BigInt value{std::string(token.substr(i))};
  return negative ? -value : value;
}

Rational parse_decimal(std::string_view s, std::string_view original) {
  bool negative = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    negative = (s[i] == '-');
    ++i;
  }

  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
    if (s[i] == '.') {
      if (seen_point) bad_input(original);
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i];
      if (seen_point) ++frac_digits;
      seen_digit = true;
    } else {
      bad_input(original);
    }
  }
  if (!seen_digit) bad_input(original);

  long exponent = 0;
  if (i < s.size()) {
    std::string_view exp_token = s.substr(i + 1);
    if (!valid_integer_token(exp_token, true)) bad_input(original);
    exponent = std::stol(std::string(exp_token));
  }

  Rational value(bigint_from_token(digits), 1);
  long net = exponent - frac_digits;
  BigInt scale = pow(BigInt(10), static_cast<unsigned>(net < 0 ? -net : net));
  if (net >= 0) {
    value *= scale;
  } else {
    value /= scale;
  }
  return negative ? -value : value;
}

}  // namespace

Rational rational_from_string(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!valid_integer_token(num, true) || !valid_integer_token(den, false)) bad_input(text);
    const BigInt d = bigint_from_token(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(bigint_from_token(num), d);
  }
  return parse_decimal(text, text);
}

std::string to_fraction_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += '/';
    s += denominator(q).str();
  }
  return s;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot convert non-finite double to rational");
  return Rational(x);
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

bool is_nonpositive_integer(const Rational& q) { return is_integer(q) && numerator(q) <= 0; }

bool is_odd_integer(const Rational& q) { return is_integer(q) && numerator(q) % 2 != 0; }

}  // namespace kummerkit
