#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kummerkit/closed_forms.hpp"
#include "kummerkit/frobenius.hpp"
#include "kummerkit/identity.hpp"
#include "kummerkit/series.hpp"

namespace py = pybind11;
using namespace kummerkit;

namespace {

// Rationals cross the boundary as fraction strings ("p/q" or "p"); python
// callers can hand them to fractions.Fraction unchanged.
Rational parse(const std::string& text) { return rational_from_string(text); }

py::dict frobenius_exact(int offset, const std::string& a, const std::string& lambda, int order,
                         const std::string& c0) {
  const OdeSpecQ ode = reduce_kummer(parse(a), offset);
  const auto roots = indicial_roots(ode);
  const auto sol = solve_frobenius(ode, parse(lambda), order, parse(c0));
  const auto residuals = ode_residual(ode, sol);
  bool residual_zero = true;
  for (const auto& r : residuals) residual_zero = residual_zero && r == 0;

  py::list coeffs;
  for (const auto& c : sol.coeffs) coeffs.append(to_fraction_string(c));
  py::dict out;
  out["beta"] = to_fraction_string(ode.beta);
  out["gamma"] = to_fraction_string(ode.gamma);
  out["delta"] = to_fraction_string(ode.delta);
  out["root_zero"] = to_fraction_string(roots.root_zero);
  out["root_other"] = to_fraction_string(roots.root_other);
  out["integer_gap"] = roots.integer_gap ? py::cast(*roots.integer_gap) : py::none();
  out["lambda"] = to_fraction_string(sol.lambda);
  out["log_case"] = sol.log_case;
  out["coefficients"] = coeffs;
  out["residual_zero"] = residual_zero;
  return out;
}

py::dict verify_identity_py(const std::string& identity, const std::vector<double>& a_grid,
                            const std::vector<double>& z_grid, double tol) {
  const IdentityReport report = verify_identity(identity_from_name(identity), a_grid, z_grid, tol);
  py::list points;
  for (const PointCheck& p : report.points) {
    py::dict entry;
    entry["a"] = p.a;
    entry["z"] = p.z;
    entry["lhs"] = p.lhs;
    entry["rhs"] = p.rhs;
    entry["abs_residual"] = p.abs_residual;
    entry["rel_residual"] = p.rel_residual;
    entry["terms_used"] = p.terms_used;
    entry["pass"] = p.pass;
    points.append(entry);
  }
  py::dict out;
  out["identity"] = identity_name(report.identity);
  out["tol"] = report.tol;
  out["points"] = points;
  out["pass"] = report.pass;
  return out;
}

}  // namespace

PYBIND11_MODULE(_kummerkit, m) {
  m.doc() = "Series solutions and transformation identities for Kummer's equation";

  py::register_exception<ExcludedParameterError>(m, "ExcludedParameterError", PyExc_ValueError);
  py::register_exception<PoleParameterError>(m, "PoleParameterError", PyExc_ValueError);
  py::register_exception<ResonantParameterError>(m, "ResonantParameterError", PyExc_ValueError);
  py::register_exception<ResonantDenominatorError>(m, "ResonantDenominatorError", PyExc_ArithmeticError);
  py::register_exception<NoConvergenceError>(m, "NoConvergenceError", PyExc_ArithmeticError);

  m.def(
      "eval_0f1",
      [](double b, double x, double tol) {
        const EvalResult r = eval_0f1(b, x, tol);
        return py::make_tuple(r.value, r.terms_used);
      },
      py::arg("b"), py::arg("x"), py::arg("tol") = 1e-12,
      "0F1(-; b; x) by direct summation; returns (value, terms_used)");

  m.def(
      "eval_1f1",
      [](double a, double b, double x, double tol) {
        const EvalResult r = eval_1f1(a, b, x, tol);
        return py::make_tuple(r.value, r.terms_used);
      },
      py::arg("a"), py::arg("b"), py::arg("x"), py::arg("tol") = 1e-12,
      "1F1(a; b; x) by direct summation; returns (value, terms_used)");

  m.def(
      "eval_0f1_exact",
      [](const std::string& b, const std::string& x, double tol) {
        const ExactEvalResult r = eval_0f1_exact(parse(b), parse(x), tol);
        return py::make_tuple(to_fraction_string(r.value), r.terms_used);
      },
      py::arg("b"), py::arg("x"), py::arg("tol") = 1e-12,
      "Truncated 0F1 sum in exact rationals; returns (fraction string, terms_used)");

  m.def(
      "eval_1f1_exact",
      [](const std::string& a, const std::string& b, const std::string& x, double tol) {
        const ExactEvalResult r = eval_1f1_exact(parse(a), parse(b), parse(x), tol);
        return py::make_tuple(to_fraction_string(r.value), r.terms_used);
      },
      py::arg("a"), py::arg("b"), py::arg("x"), py::arg("tol") = 1e-12,
      "Truncated 1F1 sum in exact rationals; returns (fraction string, terms_used)");

  m.def("frobenius", &frobenius_exact, py::arg("offset"), py::arg("a"), py::arg("lam") = "0",
        py::arg("n") = 16, py::arg("c0") = "1",
        "Exact Frobenius solution of the reduced equation for b = 2a + offset");

  m.def(
      "certify_family",
      [](const std::string& family, const std::string& a, int order) {
        const ClosedFormFamily fam{family_from_name(family), parse(a), 1};
        const CertificationResult cert = certify_family(fam, order);
        return py::make_tuple(cert.certified, cert.first_mismatch);
      },
      py::arg("family"), py::arg("a"), py::arg("n") = 64,
      "Exact closed-form vs recurrence check; returns (certified, first_mismatch)");

  m.def(
      "closed_coeff",
      [](const std::string& family, const std::string& a, int n) {
        const ClosedFormFamily fam{family_from_name(family), parse(a), 1};
        return to_fraction_string(closed_coeff(fam, n));
      },
      py::arg("family"), py::arg("a"), py::arg("n"), "c_n of the family as a fraction string");

  m.def("verify_identity", &verify_identity_py, py::arg("identity"), py::arg("a_grid"),
        py::arg("z_grid"), py::arg("tol") = 1e-10,
        "Numeric residual check of the identity over a grid");

  m.def(
      "lhs_series_exact",
      [](const std::string& identity, const std::string& a, int order) {
        std::vector<std::string> out;
        for (const auto& c : lhs_series_exact(identity_from_name(identity), parse(a), order)) {
          out.push_back(to_fraction_string(c));
        }
        return out;
      },
      py::arg("identity"), py::arg("a"), py::arg("n") = 64,
      "Exact power-series coefficients of the identity's left side");

  m.def(
      "connection_constants",
      [](const std::string& identity, const std::string& a, int order) {
        const ConnectionConstants cc =
            connection_constants(identity_from_name(identity), parse(a), order);
        return py::make_tuple(to_fraction_string(cc.A), to_fraction_string(cc.B), cc.method);
      },
      py::arg("identity"), py::arg("a"), py::arg("n") = 16,
      "Connection constants (A, B) from exact series matching");

  m.def("families", [] {
    std::vector<std::string> names;
    for (FamilyId id : all_families()) names.push_back(family_name(id));
    return names;
  });

  m.def("identities", [] {
    std::vector<std::string> names;
    for (IdentityId id : all_identities()) names.push_back(identity_name(id));
    return names;
  });
}
