#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "apogen/family_spec.hpp"
#include "apogen/ratfun.hpp"
#include "apogen/report.hpp"
#include "apogen/suite.hpp"
#include "apogen/zsums.hpp"

namespace py = pybind11;
using namespace apogen;

namespace {

std::optional<Rational> parse_opt(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return Rational::parse(*s);
}

FamilySpec make_spec(const std::string& family, std::optional<long> order,
                     std::optional<std::string> lambda,
                     std::optional<std::string> la,
                     std::optional<std::string> lb,
                     std::optional<std::string> lc,
                     std::optional<std::string> a,
                     std::optional<std::string> b,
                     std::optional<std::string> y, int max_n) {
  FamilySpec spec;
  spec.family = family;
  spec.order = order;
  spec.lambda = std::move(lambda);
  spec.la = parse_opt(la);
  spec.lb = parse_opt(lb);
  spec.lc = parse_opt(lc);
  spec.a = parse_opt(a);
  spec.b = parse_opt(b);
  spec.y = parse_opt(y);
  spec.max_n = max_n;
  return spec;
}

// The z-sum entry points are field-generic; dispatch on the lambda literal.
template <class Fn>
std::string in_field(const std::string& lambda, Fn&& fn) {
  if (lambda == "symbolic") return fn(RatFun::symbol()).to_string();
  return fn(RatFun::from_rational(Rational::parse(lambda))).to_string();
}

}  // namespace

PYBIND11_MODULE(_apogen, m) {
  m.doc() =
      "Exact tables, evaluation, and identity verification for "
      "alternating-kernel (Genocchi-type) polynomial families.";

  // Singular parameters (e.g. lambda = -1) surface as ArithmeticError;
  // malformed requests fall through to the default ValueError translation.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ArithmeticError, e.what());
    }
  });

  m.def("family_names", [] { return family_names(); },
        "Names of the buildable polynomial families.");

  m.def("identity_catalog", [] { return identity_catalog(); },
        "Ids of the verifiable identities, in report order.");

  m.def(
      "default_expected_failures",
      [] {
        std::vector<std::pair<std::string, int>> out;
        for (const auto& e : default_expected_failures())
          out.emplace_back(e.id, e.min_order);
        return out;
      },
      "Built-in (id, min_order) pairs whose stated form has a nonzero "
      "residual from min_order upward.");

  m.def(
      "table_json",
      [](const std::string& family, std::optional<long> order,
         std::optional<std::string> lambda, std::optional<std::string> la,
         std::optional<std::string> lb, std::optional<std::string> lc,
         std::optional<std::string> a, std::optional<std::string> b,
         std::optional<std::string> y, int max_n) {
        FamilySpec spec = make_spec(family, order, std::move(lambda), la, lb,
                                    lc, a, b, y, max_n);
        return table_to_json(spec, build_family(spec)).dump(2);
      },
      py::arg("family"), py::arg("order") = std::nullopt,
      py::arg("lam") = std::nullopt, py::arg("la") = std::nullopt,
      py::arg("lb") = std::nullopt, py::arg("lc") = std::nullopt,
      py::arg("a") = std::nullopt, py::arg("b") = std::nullopt,
      py::arg("y") = std::nullopt, py::arg("max_n") = 8,
      "Family table rows 0..max_n as a JSON document string.");

  m.def(
      "table_csv",
      [](const std::string& family, std::optional<long> order,
         std::optional<std::string> lambda, std::optional<std::string> la,
         std::optional<std::string> lb, std::optional<std::string> lc,
         std::optional<std::string> a, std::optional<std::string> b,
         std::optional<std::string> y, int max_n) {
        FamilySpec spec = make_spec(family, order, std::move(lambda), la, lb,
                                    lc, a, b, y, max_n);
        return table_to_csv(build_family(spec));
      },
      py::arg("family"), py::arg("order") = std::nullopt,
      py::arg("lam") = std::nullopt, py::arg("la") = std::nullopt,
      py::arg("lb") = std::nullopt, py::arg("lc") = std::nullopt,
      py::arg("a") = std::nullopt, py::arg("b") = std::nullopt,
      py::arg("y") = std::nullopt, py::arg("max_n") = 8,
      "Family table rows 0..max_n as CSV text (exact rational cells).");

  m.def(
      "tables_equal",
      [](const std::string& doc_a, const std::string& doc_b) {
        return table_from_json(nlohmann::json::parse(doc_a)) ==
               table_from_json(nlohmann::json::parse(doc_b));
      },
      py::arg("doc_a"), py::arg("doc_b"),
      "Whether two JSON table documents deserialize to the same table.");

  m.def(
      "evaluate",
      [](const std::string& family, int n, std::optional<std::string> x,
         std::optional<long> order, std::optional<std::string> lambda,
         std::optional<std::string> la, std::optional<std::string> lb,
         std::optional<std::string> lc, std::optional<std::string> a,
         std::optional<std::string> b, std::optional<std::string> y) {
        FamilySpec spec = make_spec(family, order, std::move(lambda), la, lb,
                                    lc, a, b, y, n);
        return eval_family(spec, n, parse_opt(x)).to_string();
      },
      py::arg("family"), py::arg("n"), py::arg("x") = std::nullopt,
      py::arg("order") = std::nullopt, py::arg("lam") = std::nullopt,
      py::arg("la") = std::nullopt, py::arg("lb") = std::nullopt,
      py::arg("lc") = std::nullopt, py::arg("a") = std::nullopt,
      py::arg("b") = std::nullopt, py::arg("y") = std::nullopt,
      "Exact value of the n-th family member (at point x for polynomial "
      "families), as a rational string.");

  m.def(
      "verify",
      [](int max_n, const std::string& lambda, int precision,
         std::vector<std::string> only, std::vector<std::string> expect_pass,
         bool spot_checks) {
        SuiteConfig cfg;
        cfg.max_n = max_n;
        cfg.lambda = lambda;
        cfg.precision = precision;
        cfg.only = std::move(only);
        cfg.expect_pass = std::move(expect_pass);
        cfg.spot_checks = spot_checks;
        SuiteRun run = run_suite(cfg);
        py::dict out;
        out["ok"] = run.ok();
        out["pass"] = run.pass;
        out["fail"] = run.fail;
        out["documented_discrepancy"] = run.documented_discrepancy;
        out["unexpected_pass_ids"] = run.unexpected_pass_ids;
        out["report"] = suite_report_json(run).dump(2);
        return out;
      },
      py::arg("max_n") = 12, py::arg("lam") = "symbolic",
      py::arg("precision") = 0, py::arg("only") = std::vector<std::string>{},
      py::arg("expect_pass") = std::vector<std::string>{},
      py::arg("spot_checks") = true,
      "Run the identity verification grids; returns counters, the "
      "unexpected-pass list, and the full JSON report string.");

  m.def(
      "alternating_power_sum",
      [](int k, int m, const std::string& lambda) {
        return in_field(lambda,
                        [&](const RatFun& l) { return z_sum(k, m, l); });
      },
      py::arg("k"), py::arg("m"), py::arg("lam") = "1",
      "sum_{j=1}^{m} (-1)^{j+1} lambda^j j^k, printed exactly.");

  m.def(
      "multi_power_sum",
      [](int k, int l, int m, const std::string& lambda) {
        return in_field(
            lambda, [&](const RatFun& lam) { return z_sum_multi(k, l, m, lam); });
      },
      py::arg("k"), py::arg("l"), py::arg("m"), py::arg("lam") = "1",
      "Multiplicity-l alternating power sum by direct enumeration, printed "
      "exactly.");

  m.def(
      "multi_power_sum_gf",
      [](int k, int l, int m, const std::string& lambda) {
        return in_field(lambda, [&](const RatFun& lam) {
          return z_sum_multi_gf(k, l, m, lam);
        });
      },
      py::arg("k"), py::arg("l"), py::arg("m"), py::arg("lam") = "1",
      "The same multiplicity-l sum read off its generating function "
      "(independent construction, for cross-checking).");
}
