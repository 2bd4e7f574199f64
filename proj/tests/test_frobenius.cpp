#include "doctest.h"
#include "kummerkit/frobenius.hpp"

#include <cmath>

using namespace kummerkit;

TEST_CASE("reduction of Kummer's equation to the three-scalar family") {
  const OdeSpecQ plus = reduce_kummer(Rational(1, 3), 1);
  CHECK(plus.beta == Rational(5, 3));
  CHECK(plus.gamma == 1);
  CHECK(plus.delta == -1);

  const OdeSpecQ zero = reduce_kummer(Rational(1, 3), 0);
  CHECK(zero.beta == Rational(2, 3));
  CHECK(zero.gamma == 0);
  CHECK(zero.delta == -1);

  const OdeSpecQ minus = reduce_kummer(Rational(1, 3), -1);
  CHECK(minus.beta == Rational(-1, 3));
  CHECK(minus.gamma == -1);
  CHECK(minus.delta == -1);

  CHECK_THROWS_AS(reduce_kummer(Rational(1), 2), std::invalid_argument);
}

TEST_CASE("indicial roots are 0 and 1 - beta, with integer gaps flagged") {
  const auto plain = indicial_roots(reduce_kummer(Rational(1, 4), 1));
  CHECK(plain.root_zero == 0);
  CHECK(plain.root_other == Rational(-1, 2));
  CHECK(!plain.integer_gap.has_value());

  const auto gap1 = indicial_roots(reduce_kummer(Rational(1, 2), 1));
  CHECK(gap1.root_other == -1);
  CHECK(gap1.integer_gap == 1);

  const auto gap2 = indicial_roots(reduce_kummer(Rational(1), 1));
  CHECK(gap2.root_other == -2);
  CHECK(gap2.integer_gap == 2);

  // beta = 1 collapses both roots onto 0
  const auto doubled = indicial_roots(reduce_kummer(Rational(1), -1));
  CHECK(doubled.root_other == 0);
  CHECK(doubled.integer_gap == 0);

  const auto floats = indicial_roots(reduce_kummer(0.25, 1));
  CHECK(floats.root_other == doctest::Approx(-0.5));
  CHECK(!floats.integer_gap.has_value());
}

TEST_CASE("recurrence iteration matches the hand-iterated coefficients") {
  // offset +1, a = 1, lambda = 0: c1 = -1/3, c_n = (c_{n-2} - c_{n-1})/(n(n+2))
  const OdeSpecQ ode = reduce_kummer(Rational(1), 1);
  const auto sol = solve_frobenius(ode, Rational(0), 6);
  CHECK(sol.coeffs.size() == 7);
  CHECK(sol.coeffs[0] == 1);
  CHECK(sol.coeffs[1] == Rational(-1, 3));
  CHECK(sol.coeffs[2] == Rational(1, 6));
  CHECK(sol.coeffs[3] == Rational(-1, 30));
  CHECK(sol.coeffs[4] == Rational(1, 120));
  CHECK(!sol.log_case);
  CHECK(sol.order == 6);
}

TEST_CASE("the second branch picks up c1 = c0/(2a-1)") {
  // offset +1 at the non-principal exponent lambda = -2a
  const Rational a(1, 4);
  const OdeSpecQ ode = reduce_kummer(a, 1);
  const auto sol = solve_frobenius(ode, Rational(-1, 2), 8);
  CHECK(sol.coeffs[1] == 1 / (2 * a - 1));
  CHECK(sol.coeffs[1] == -2);
}

TEST_CASE("solver rejects invalid inputs") {
  const OdeSpecQ ode = reduce_kummer(Rational(1, 3), 0);
  CHECK_THROWS_AS(solve_frobenius(ode, Rational(0), 1), std::invalid_argument);
  CHECK_THROWS_AS(solve_frobenius(ode, Rational(0), 8, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(solve_frobenius(ode, Rational(1, 7), 8), std::invalid_argument);
}

TEST_CASE("vanishing denominators raise or truncate") {
  // offset +1, a = 1/2: roots 0 and -1; stepping from -1 resonates at n = 1
  const OdeSpecQ ode = reduce_kummer(Rational(1, 2), 1);
  CHECK_THROWS_AS(recurrence_step(ode, Rational(-1), 1, Rational(1), Rational(0)),
                  ResonantDenominatorError);

  const auto sol = solve_frobenius(ode, Rational(-1), 8);
  CHECK(sol.log_case);
  CHECK(sol.coeffs.size() == 1);  // truncated at the resonance

  // the gap-2 case resonates at n = 2 instead
  const auto gap2 = solve_frobenius(reduce_kummer(Rational(1), 1), Rational(-2), 8);
  CHECK(gap2.log_case);
  CHECK(gap2.coeffs.size() == 2);
}

TEST_CASE("exact residuals vanish identically on both branches") {
  for (int offset : {-1, 0, 1}) {
    for (const Rational& a : {Rational(1, 4), Rational(1, 3)}) {
      const OdeSpecQ ode = reduce_kummer(a, offset);
      const auto roots = indicial_roots(ode);
      for (const Rational& lambda : {roots.root_zero, roots.root_other}) {
        const auto sol = solve_frobenius(ode, lambda, 16);
        REQUIRE(!sol.log_case);
        const auto residuals = ode_residual(ode, sol);
        CHECK(residuals.size() == 16);
        for (const auto& r : residuals) CHECK(r == 0);
      }
    }
  }
}

TEST_CASE("float mode tracks the exact coefficients") {
  const OdeSpecF ode = reduce_kummer(0.25, -1);
  const auto sol = solve_frobenius(ode, 0.0, 12);
  const auto exact = solve_frobenius(reduce_kummer(Rational(1, 4), -1), Rational(0), 12);
  for (std::size_t n = 0; n < sol.coeffs.size(); ++n) {
    CHECK(sol.coeffs[n] == doctest::Approx(to_double(exact.coeffs[n])).epsilon(1e-14));
  }
}
