#include "doctest.h"
#include "kummerkit/rational.hpp"

#include <limits>
#include <stdexcept>

using namespace kummerkit;

TEST_CASE("fraction strings parse to reduced rationals") {
  CHECK(rational_from_string("1/3") == Rational(1, 3));
  CHECK(rational_from_string("-2/4") == Rational(-1, 2));
  CHECK(rational_from_string("+3/4") == Rational(3, 4));
  CHECK(rational_from_string("00/03") == Rational(0));
  CHECK(rational_from_string("007") == Rational(7));
  CHECK(rational_from_string("-5") == Rational(-5));
}

TEST_CASE("decimal strings convert exactly, never through binary") {
  CHECK(rational_from_string("0.1") == Rational(1, 10));
  CHECK(rational_from_string("0.25") == Rational(1, 4));
  CHECK(rational_from_string("-0.1") == Rational(-1, 10));
  CHECK(rational_from_string("2.5") == Rational(5, 2));
  CHECK(rational_from_string("10.250") == Rational(41, 4));
  CHECK(rational_from_string("1e-3") == Rational(1, 1000));
  CHECK(rational_from_string("1.5e-2") == Rational(3, 200));
  CHECK(rational_from_string("3.25e2") == Rational(325));
  // 0.1 has no finite binary expansion; the decimal parser must not see one
  CHECK(rational_from_string("0.1") != rational_from_double(0.1));
}

TEST_CASE("malformed input is rejected") {
  for (const char* bad : {"", "1/0", "1//2", "a", "1.2.3", "1/2/3", "2e", "--3", "1/-2", ".", "1e1.5"}) {
    CHECK_THROWS_AS(rational_from_string(bad), std::invalid_argument);
  }
}

TEST_CASE("fraction strings print reduced, integers bare") {
  CHECK(to_fraction_string(Rational(1, 3)) == "1/3");
  CHECK(to_fraction_string(Rational(-2, 6)) == "-1/3");
  CHECK(to_fraction_string(Rational(8, 4)) == "2");
  CHECK(to_fraction_string(Rational(0)) == "0");
}

TEST_CASE("doubles convert exactly to dyadic rationals and back") {
  CHECK(rational_from_double(0.5) == Rational(1, 2));
  CHECK(rational_from_double(-3.0) == Rational(-3));
  CHECK(rational_from_double(0.1) == Rational(BigInt("3602879701896397"), BigInt(1) << 55));
  CHECK(to_double(rational_from_double(0.1)) == 0.1);
  CHECK_THROWS_AS(rational_from_double(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK(to_double(Rational(1, 3)) == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
}

TEST_CASE("integer predicates") {
  CHECK(is_integer(Rational(4)));
  CHECK(!is_integer(Rational(1, 2)));
  CHECK(is_nonpositive_integer(Rational(0)));
  CHECK(is_nonpositive_integer(Rational(-7)));
  CHECK(!is_nonpositive_integer(Rational(3)));
  CHECK(!is_nonpositive_integer(Rational(-1, 2)));
  CHECK(is_odd_integer(Rational(3)));
  CHECK(is_odd_integer(Rational(-5)));
  CHECK(!is_odd_integer(Rational(4)));
  CHECK(!is_odd_integer(Rational(3, 2)));
}
