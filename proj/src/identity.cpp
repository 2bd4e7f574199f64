#include "kummerkit/identity.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "kummerkit/frobenius.hpp"

namespace kummerkit {
namespace {

struct IdentityRow {
  IdentityId id;
  const char* name;
  int offset;
};

constexpr IdentityRow kIdentityTable[] = {
    {IdentityId::kKummer2, "Kummer2", 0},
    {IdentityId::kContigPlus, "ContigPlus", 1},
    {IdentityId::kContigMinus, "ContigMinus", -1},
};

std::string lower_alnum(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  return out;
}

std::string hypothesis_text(int offset) {
  const char* b = offset == 0 ? "2a" : offset == 1 ? "2a+1" : "2a-1";
  return std::string(b) + " must be neither zero nor a negative integer";
}

void require_hypothesis_exact(IdentityId id, const Rational& a) {
  const Rational b = 2 * a + identity_offset(id);
  if (is_nonpositive_integer(b)) {
    throw ExcludedParameterError(hypothesis_text(identity_offset(id)) +
                                 " (a = " + to_fraction_string(a) + ")");
  }
}

}  // namespace

std::string identity_name(IdentityId id) {
  for (const auto& row : kIdentityTable) {
    if (row.id == id) return row.name;
  }
  throw std::invalid_argument("unknown identity id");
}

IdentityId identity_from_name(std::string_view name) {
  const std::string key = lower_alnum(name);
  for (const auto& row : kIdentityTable) {
    if (key == lower_alnum(row.name)) return row.id;
  }
  throw std::invalid_argument("unknown identity name: " + std::string(name));
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = {
      IdentityId::kKummer2, IdentityId::kContigPlus, IdentityId::kContigMinus};
  return ids;
}

int identity_offset(IdentityId id) {
  for (const auto& row : kIdentityTable) {
    if (row.id == id) return row.offset;
  }
  throw std::invalid_argument("unknown identity id");
}

HypergeometricSpec lhs_spec(IdentityId id, double a) {
  const int offset = identity_offset(id);
  const double b = 2 * a + offset;
  if (near_nonpositive_integer(b)) {
    throw ExcludedParameterError(hypothesis_text(offset) + " (a = " + std::to_string(a) + ")");
  }
  HypergeometricSpec spec;
  spec.upper = {a};
  spec.lower = {b};
  spec.argument_map = ArgumentMap::kScaleTwice;
  spec.prefactor = Prefactor::exp_neg();
  return spec;
}

AssembledSolution rhs_spec(IdentityId id, double a) {
  return assemble_y1(identity_offset(id), a);
}

IdentityReport verify_identity(IdentityId id, const std::vector<double>& a_grid,
                               const std::vector<double>& z_grid, double tol) {
  if (tol <= 0) throw std::invalid_argument("tol must be positive");
  if (a_grid.empty() || z_grid.empty()) throw std::invalid_argument("grids must be non-empty");
  for (double a : a_grid) lhs_spec(id, a);  // reject bad parameters up front

  IdentityReport report{id, tol, {}, true};
  report.points.reserve(a_grid.size() * z_grid.size());
  const double eval_tol = tol / 10;
  for (double a : a_grid) {
    const HypergeometricSpec lhs = lhs_spec(id, a);
    const AssembledSolution rhs = rhs_spec(id, a);
    for (double z : z_grid) {
      const EvalResult left = eval_spec(lhs, z, eval_tol);
      const EvalResult right = rhs.evaluate(z, eval_tol);
      PointCheck point;
      point.a = a;
      point.z = z;
      point.lhs = left.value;
      point.rhs = right.value;
      point.abs_residual = std::abs(left.value - right.value);
      point.rel_residual = point.rhs == 0 ? (point.abs_residual == 0 ? 0.0 : HUGE_VAL)
                                          : point.abs_residual / std::abs(point.rhs);
      point.terms_used = left.terms_used + right.terms_used;
      point.pass = std::abs(point.rhs) < 1 ? point.abs_residual <= tol
                                           : point.rel_residual <= tol;
      report.pass = report.pass && point.pass;
      report.points.push_back(point);
    }
  }
  return report;
}

std::vector<Rational> lhs_series_exact(IdentityId id, const Rational& a, int order) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  require_hypothesis_exact(id, a);
  const Rational b = 2 * a + identity_offset(id);

  // kummer[n] = (a)_n 2^n / ((b)_n n!), expo[k] = (-1)^k / k!
  std::vector<Rational> kummer(order + 1), expo(order + 1);
  kummer[0] = 1;
  expo[0] = 1;
  for (int n = 1; n <= order; ++n) {
    kummer[n] = kummer[n - 1] * 2 * (a + n - 1) / ((b + n - 1) * n);
    expo[n] = -expo[n - 1] / n;
  }
  std::vector<Rational> series(order + 1);
  for (int n = 0; n <= order; ++n) {
    Rational sum = 0;
    for (int k = 0; k <= n; ++k) sum += expo[k] * kummer[n - k];
    series[n] = sum;
  }
  return series;
}

ConnectionConstants connection_constants(IdentityId id, const Rational& a, int order) {
  if (order < 2) throw std::invalid_argument("order must be at least 2");
  require_hypothesis_exact(id, a);
  const int offset = identity_offset(id);
  const Rational b = 2 * a + offset;
  if (is_integer(b)) {
    throw ResonantParameterError(
        "indicial exponents differ by the integer " + to_fraction_string(1 - b) +
        "; the power-prefactored second solution is unavailable (a = " + to_fraction_string(a) +
        ")");
  }

  const std::vector<Rational> left = lhs_series_exact(id, a, order);
  const OdeSpecQ ode = reduce_kummer(a, offset);
  const FrobeniusSolution<Rational> y1 = solve_frobenius(ode, Rational(0), order);

  // The left side is a power series in integer powers of z only; y2 carries
  // the non-integer exponent 1-beta, so its coefficient is structurally zero.
  ConnectionConstants result{left[0] / y1.coeffs[0], 0, "series-matching"};
  for (int n = 0; n <= order; ++n) {
    if (left[static_cast<std::size_t>(n)] != result.A * y1.coeffs[static_cast<std::size_t>(n)]) {
      throw std::logic_error("left series deviates from A*y1 at n = " + std::to_string(n) +
                             " (a = " + to_fraction_string(a) + ")");
    }
  }
  return result;
}

}  // namespace kummerkit
