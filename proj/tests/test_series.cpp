#include "doctest.h"
#include "kummerkit/series.hpp"

#include <cmath>

using namespace kummerkit;

TEST_CASE("pochhammer rising factorial") {
  CHECK(pochhammer(3.0, 4) == 360.0);
  CHECK(pochhammer(2.5, 0) == 1.0);
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer(Rational(-2), 4) == Rational(0));
  CHECK_THROWS_AS(pochhammer(1.0, -1), std::invalid_argument);
}

TEST_CASE("0F1 against the cosh/sinh closed forms") {
  for (double z : {0.1, 0.5, 1.0, 2.0, 4.0}) {
    const double x = z * z / 4;
    CHECK(eval_0f1(0.5, x, 1e-14).value == doctest::Approx(std::cosh(z)).epsilon(1e-13));
    CHECK(z * eval_0f1(1.5, x, 1e-14).value == doctest::Approx(std::sinh(z)).epsilon(1e-13));
  }
}

TEST_CASE("1F1 reductions to the exponential") {
  for (double x : {-3.0, -0.5, 0.25, 2.0, 8.0}) {
    CHECK(eval_1f1(1.75, 1.75, x, 1e-14).value == doctest::Approx(std::exp(x)).epsilon(1e-13));
    CHECK(eval_1f1(1.0, 2.0, x, 1e-14).value ==
          doctest::Approx((std::exp(x) - 1) / x).epsilon(1e-13));
  }
}

TEST_CASE("zero argument stops after the exact-zero term") {
  const EvalResult r = eval_0f1(0.75, 0.0, 1e-12);
  CHECK(r.value == 1.0);
  CHECK(r.terms_used == 1);
  CHECK(r.last_term_magnitude == 0.0);
}

TEST_CASE("lower-parameter poles are rejected") {
  CHECK(near_nonpositive_integer(0.0));
  CHECK(near_nonpositive_integer(-3.0 + 1e-10));
  CHECK(!near_nonpositive_integer(0.5));
  CHECK(!near_nonpositive_integer(-2.5));
  CHECK_THROWS_AS(eval_0f1(0.0, 1.0, 1e-12), PoleParameterError);
  CHECK_THROWS_AS(eval_0f1(-3.0 + 1e-10, 1.0, 1e-12), PoleParameterError);
  CHECK_THROWS_AS(eval_1f1(1.0, -2.0, 1.0, 1e-12), PoleParameterError);
  CHECK_THROWS_AS(eval_0f1_exact(Rational(-3), Rational(1), 1e-12), PoleParameterError);
  // exact arithmetic only faults on the exact pole
  CHECK_NOTHROW(eval_0f1_exact(Rational(-3) + Rational(1, 1000000000), Rational(1), 1e-12));
}

TEST_CASE("tolerance must be positive") {
  CHECK_THROWS_AS(eval_0f1(1.5, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(eval_1f1(1.0, 2.0, 1.0, -1e-10), std::invalid_argument);
}

TEST_CASE("series that leave the double range raise NoConvergence") {
  CHECK_THROWS_AS(eval_0f1(0.5, 1e7, 1e-12), NoConvergenceError);
}

TEST_CASE("deep-cancellation arguments are redone in exact arithmetic") {
  const EvalResult promoted = eval_1f1(0.5, 1.7, -12.0, 1e-13);
  CHECK(promoted.mode == EvalMode::kExactThenRound);

  // a = b makes the sum e^x; heavy cancellation at moderate negative x must
  // trigger the a-posteriori rerun even above the static threshold.
  const EvalResult rerun = eval_1f1(2.5, 2.5, -8.0, 1e-13);
  CHECK(rerun.mode == EvalMode::kExactThenRound);
  CHECK(rerun.value == doctest::Approx(std::exp(-8.0)).epsilon(1e-13));

  const EvalResult plain = eval_1f1(1.0, 2.0, 1.0, 1e-13);
  CHECK(plain.mode == EvalMode::kFloat64);
}

TEST_CASE("float and exact modes agree to 1e-12 for |x| <= 25") {
  for (double x : {-25.0, -11.0, -8.0, -2.0, 0.5, 10.0, 25.0}) {
    const double f = eval_1f1(0.75, 2.25, x, 1e-13).value;
    const ExactEvalResult q =
        eval_1f1_exact(rational_from_double(0.75), rational_from_double(2.25),
                       rational_from_double(x), 1e-13);
    CHECK(f == doctest::Approx(to_double(q.value)).epsilon(1e-12));
  }
}

TEST_CASE("spec evaluation applies argument maps and prefactors") {
  HypergeometricSpec spec;
  spec.upper = {1.0};
  spec.lower = {2.0};
  spec.argument_map = ArgumentMap::kScaleTwice;
  spec.prefactor = Prefactor::exp_neg();
  // e^{-z} 1F1(1; 2; 2z) = sinh(z)/z
  for (double z : {0.5, 1.0, 3.0}) {
    CHECK(eval_spec(spec, z, 1e-14).value ==
          doctest::Approx(std::sinh(z) / z).epsilon(1e-13));
  }

  HypergeometricSpec powered;
  powered.lower = {1.25};
  powered.argument_map = ArgumentMap::kSquareQuarter;
  powered.prefactor = Prefactor::power(0.5);
  const double z = 0.7;
  CHECK(eval_spec(powered, z, 1e-14).value ==
        doctest::Approx(std::sqrt(z) * eval_0f1(1.25, z * z / 4, 1e-14).value).epsilon(1e-14));

  // negative exponent at the origin and fractional power of a negative base
  powered.prefactor = Prefactor::power(-0.5);
  CHECK_THROWS_AS(eval_spec(powered, 0.0, 1e-12), DomainError);
  CHECK_THROWS_AS(eval_spec(powered, -1.0, 1e-12), DomainError);
  // integer exponents extend to negative arguments
  powered.prefactor = Prefactor::power(2.0);
  CHECK_NOTHROW(eval_spec(powered, -1.0, 1e-12));
}

TEST_CASE("spec validation rejects malformed parameter lists") {
  HypergeometricSpec spec;
  spec.lower = {};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.lower = {1.0, 2.0};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.lower = {-1.0};
  CHECK_THROWS_AS(spec.validate(), PoleParameterError);
  spec.lower = {0.5};
  spec.upper = {1.0, 2.0};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("exact kernels return the truncated sum as a single rational") {
  // 0F1(-; 1; 1) partial sums: 1 + 1 + 1/4 + 1/36 + ...
  const ExactEvalResult r = eval_0f1_exact(Rational(1), Rational(1), 1e-3);
  CHECK(denominator(r.value) > 1);
  CHECK(to_double(r.value) == doctest::Approx(eval_0f1(1.0, 1.0, 1e-12).value).epsilon(1e-6));
  CHECK(r.terms_used >= 4);
}
