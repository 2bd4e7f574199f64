#include "kummerkit/closed_forms.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "kummerkit/frobenius.hpp"

namespace kummerkit {
namespace {

struct FamilyRow {
  FamilyId id;
  const char* name;
};

constexpr FamilyRow kFamilyTable[] = {
    {FamilyId::kK2Even, "K2-even"},
    {FamilyId::kK2OddExponent, "K2-odd-exponent"},
    {FamilyId::kP1Lambda0, "P1-λ0"},
    {FamilyId::kP1LambdaMinus2a, "P1-λ-2a"},
    {FamilyId::kM1Lambda0, "M1-λ0"},
    {FamilyId::kM1Lambda2Minus2a, "M1-λ2-2a"},
};

// Lowercases, maps λ (UTF-8 CE BB) to "lambda", the Unicode minus
// (E2 88 92) to '-', then drops separators entirely.
std::string normalized(std::string_view name) {
  std::string out;
  for (std::size_t i = 0; i < name.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(name[i]);
    if (c == 0xCE && i + 1 < name.size() &&
        static_cast<unsigned char>(name[i + 1]) == 0xBB) {
      out += "lambda";
      ++i;
    } else if (c == 0xE2 && i + 2 < name.size() &&
               static_cast<unsigned char>(name[i + 1]) == 0x88 &&
               static_cast<unsigned char>(name[i + 2]) == 0x92) {
      i += 2;
    } else if (c == '-' || c == '_' || c == ' ') {
      continue;
    } else {
      out += static_cast<char>(std::tolower(c));
    }
  }
  return out;
}

bool is_integer_at_least(const Rational& q, long bound) {
  return is_integer(q) && q >= bound;
}

Rational factorial_q(int m) {
  Rational f = 1;
  for (int k = 2; k <= m; ++k) f *= k;
  return f;
}

Rational power_of_four(int m) { return Rational(BigInt(1) << (2 * m)); }

bool float_integer_at_least(double x, double bound) {
  double r = std::round(x);
  return std::abs(x - r) <= 1e-9 && r >= bound - 0.5;
}

bool float_odd_integer(double x) {
  double r = std::round(x);
  return std::abs(x - r) <= 1e-9 && std::abs(std::fmod(r, 2.0)) == 1.0;
}

HypergeometricSpec zero_f_one(double b, double mu) {
  HypergeometricSpec spec;
  spec.lower = {b};
  spec.argument_map = ArgumentMap::kSquareQuarter;
  spec.prefactor = mu == 0.0 ? Prefactor::none() : Prefactor::power(mu);
  return spec;
}

}  // namespace

std::string family_name(FamilyId id) {
  for (const auto& row : kFamilyTable) {
    if (row.id == id) return row.name;
  }
  throw std::invalid_argument("unknown family id");
}

FamilyId family_from_name(std::string_view name) {
  const std::string key = normalized(name);
  for (const auto& row : kFamilyTable) {
    if (key == normalized(row.name)) return row.id;
  }
  throw std::invalid_argument("unknown family name: " + std::string(name));
}

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> families = {
      FamilyId::kK2Even,          FamilyId::kK2OddExponent,
      FamilyId::kP1Lambda0,       FamilyId::kP1LambdaMinus2a,
      FamilyId::kM1Lambda0,       FamilyId::kM1Lambda2Minus2a,
  };
  return families;
}

int ClosedFormFamily::offset() const {
  switch (id) {
    case FamilyId::kK2Even:
    case FamilyId::kK2OddExponent:
      return 0;
    case FamilyId::kP1Lambda0:
    case FamilyId::kP1LambdaMinus2a:
      return 1;
    case FamilyId::kM1Lambda0:
    case FamilyId::kM1Lambda2Minus2a:
      return -1;
  }
  throw std::invalid_argument("unknown family id");
}

Rational ClosedFormFamily::lambda() const {
  switch (id) {
    case FamilyId::kK2Even:
    case FamilyId::kP1Lambda0:
    case FamilyId::kM1Lambda0:
      return 0;
    case FamilyId::kK2OddExponent:
      return 1 - 2 * a;
    case FamilyId::kP1LambdaMinus2a:
      return -2 * a;
    case FamilyId::kM1Lambda2Minus2a:
      return 2 - 2 * a;
  }
  throw std::invalid_argument("unknown family id");
}

Rational ClosedFormFamily::even_base() const {
  switch (id) {
    case FamilyId::kK2Even:
    case FamilyId::kP1Lambda0:
      return a + Rational(1, 2);
    case FamilyId::kK2OddExponent:
    case FamilyId::kM1Lambda2Minus2a:
      return Rational(3, 2) - a;
    case FamilyId::kP1LambdaMinus2a:
      return Rational(1, 2) - a;
    case FamilyId::kM1Lambda0:
      return a - Rational(1, 2);
  }
  throw std::invalid_argument("unknown family id");
}

Rational ClosedFormFamily::odd_base() const {
  switch (id) {
    case FamilyId::kP1Lambda0:
      return a + Rational(3, 2);
    case FamilyId::kP1LambdaMinus2a:
      return Rational(3, 2) - a;
    case FamilyId::kM1Lambda0:
      return a + Rational(1, 2);
    case FamilyId::kM1Lambda2Minus2a:
      return Rational(5, 2) - a;
    default:
      throw std::invalid_argument("family has no odd-index chain");
  }
}

bool ClosedFormFamily::has_odd_terms() const {
  return id != FamilyId::kK2Even && id != FamilyId::kK2OddExponent;
}

Rational ClosedFormFamily::c1() const {
  switch (id) {
    case FamilyId::kK2Even:
    case FamilyId::kK2OddExponent:
      return 0;
    case FamilyId::kP1Lambda0:
      return -c0 / (2 * a + 1);
    case FamilyId::kP1LambdaMinus2a:
    case FamilyId::kM1Lambda0:
      return c0 / (2 * a - 1);
    case FamilyId::kM1Lambda2Minus2a:
      return c0 / (3 - 2 * a);
  }
  throw std::invalid_argument("unknown family id");
}

void ClosedFormFamily::validate() const {
  if (c0 == 0) throw std::invalid_argument("c0 must be nonzero");
  const Rational ta = 2 * a;
  const std::string at = " (a = " + to_fraction_string(a) + ")";
  switch (id) {
    case FamilyId::kK2Even:
      if (is_nonpositive_integer(ta))
        throw ExcludedParameterError("K2-even requires 2a != 0, -1, -2, ..." + at);
      return;
    case FamilyId::kK2OddExponent:
      if (is_odd_integer(ta))
        throw ExcludedParameterError("K2-odd-exponent requires 2a not an odd integer" + at);
      return;
    case FamilyId::kP1Lambda0:
      if (is_nonpositive_integer(ta + 1))
        throw ExcludedParameterError(
            "P1-λ0 requires 2a+1 neither zero nor a negative integer" + at);
      return;
    case FamilyId::kP1LambdaMinus2a:
      if (is_integer_at_least(ta, 1))
        throw ExcludedParameterError("P1-λ-2a requires 2a != 1, 2, ..." + at);
      return;
    case FamilyId::kM1Lambda0:
      if (is_nonpositive_integer(ta - 1))
        throw ExcludedParameterError(
            "M1-λ0 requires 2a-1 neither zero nor a negative integer" + at);
      return;
    case FamilyId::kM1Lambda2Minus2a:
      if (is_integer_at_least(ta, 2))
        throw ExcludedParameterError("M1-λ2-2a requires 2a != 2, 3, ..." + at);
      return;
  }
  throw std::invalid_argument("unknown family id");
}

Rational closed_coeff(const ClosedFormFamily& fam, int n) {
  if (n < 0) throw std::invalid_argument("coefficient index must be non-negative");
  fam.validate();
  const int m = n / 2;
  if (n % 2 == 1 && !fam.has_odd_terms()) return 0;
  const Rational numerator = n % 2 == 0 ? fam.c0 : fam.c1();
  const Rational base = n % 2 == 0 ? fam.even_base() : fam.odd_base();
  return numerator / (power_of_four(m) * factorial_q(m) * pochhammer(base, m));
}

CertificationResult certify_family(const ClosedFormFamily& fam, int order) {
  if (order < 2) throw std::invalid_argument("certification order must be at least 2");
  fam.validate();
  const OdeSpecQ ode = reduce_kummer(fam.a, fam.offset());
  const FrobeniusSolution<Rational> sol = solve_frobenius(ode, fam.lambda(), order, fam.c0);
  if (sol.log_case) {
    throw ResonantDenominatorError("recurrence resonates at a = " + to_fraction_string(fam.a) +
                                   " for " + family_name(fam.id) +
                                   ": closed form not comparable");
  }
  for (int n = 0; n <= order; ++n) {
    if (closed_coeff(fam, n) != sol.coeffs[static_cast<std::size_t>(n)]) {
      return {false, n, order};
    }
  }
  return {true, -1, order};
}

EvalResult AssembledSolution::evaluate(double z, double tol) const {
  EvalResult total = eval_spec(first, z, tol);
  if (has_second) {
    const EvalResult tail = eval_spec(second, z, tol);
    total.value += second_coeff * tail.value;
    total.terms_used += tail.terms_used;
    total.last_term_magnitude =
        std::max(total.last_term_magnitude,
                 std::abs(second_coeff) * tail.last_term_magnitude);
  }
  return total;
}

AssembledSolution assemble_y1(int offset, double a) {
  if (offset < -1 || offset > 1) throw std::invalid_argument("offset must be -1, 0, or +1");
  const double b = 2 * a + offset;
  if (near_nonpositive_integer(b)) {
    throw ExcludedParameterError("2a" + std::string(offset == 1 ? "+1" : offset == -1 ? "-1" : "") +
                                 " must be neither zero nor a negative integer (a = " +
                                 std::to_string(a) + ")");
  }
  AssembledSolution y;
  y.mu = 0.0;
  switch (offset) {
    case 0:
      y.first = zero_f_one(a + 0.5, 0.0);
      break;
    case 1:
      y.first = zero_f_one(a + 0.5, 0.0);
      y.second = zero_f_one(a + 1.5, 1.0);
      y.second_coeff = -1.0 / (2 * a + 1);
      y.has_second = true;
      break;
    case -1:
      y.first = zero_f_one(a - 0.5, 0.0);
      y.second = zero_f_one(a + 0.5, 1.0);
      y.second_coeff = 1.0 / (2 * a - 1);
      y.has_second = true;
      break;
  }
  return y;
}

AssembledSolution assemble_y2(int offset, double a) {
  if (offset < -1 || offset > 1) throw std::invalid_argument("offset must be -1, 0, or +1");
  const double ta = 2 * a;
  AssembledSolution y;
  switch (offset) {
    case 0:
      if (float_odd_integer(ta))
        throw ExcludedParameterError("second solution needs 2a not an odd integer (a = " +
                                     std::to_string(a) + ")");
      y.mu = 1 - ta;
      y.first = zero_f_one(1.5 - a, y.mu);
      break;
    case 1:
      if (float_integer_at_least(ta, 1.0))
        throw ExcludedParameterError("second solution needs 2a != 1, 2, ... (a = " +
                                     std::to_string(a) + ")");
      y.mu = -ta;
      y.first = zero_f_one(0.5 - a, y.mu);
      y.second = zero_f_one(1.5 - a, y.mu + 1);
      y.second_coeff = -1.0 / (1 - ta);
      y.has_second = true;
      break;
    case -1:
      if (float_integer_at_least(ta, 2.0))
        throw ExcludedParameterError("second solution needs 2a != 2, 3, ... (a = " +
                                     std::to_string(a) + ")");
      y.mu = 2 - ta;
      y.first = zero_f_one(1.5 - a, y.mu);
      y.second = zero_f_one(2.5 - a, y.mu + 1);
      y.second_coeff = 1.0 / (3 - ta);
      y.has_second = true;
      break;
  }
  return y;
}

}  // namespace kummerkit
