#include "apogen/family_spec.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace apogen {
namespace {

// Which parameters each family accepts (everything else is rejected).
struct FamilyShape {
  bool order = false;
  bool lambda = false;
  bool log_a = false, log_b = false, log_c = false;
  bool bases_ab = false;
  bool arg_y = false;
  bool sequence = false;  // scalar sequence instead of polynomial rows
};

FamilyShape shape_of(const std::string& family) {
  // genocchi admits the one-parameter deformation; its default lambda = 1
  // is the classical table.
  if (family == "genocchi") return {.lambda = true};
  if (family == "unsigned-genocchi") return {.sequence = true};
  if (family == "bernoulli") return {.order = true};
  if (family == "euler") return {.order = true};
  if (family == "apostol-genocchi") return {.order = true, .lambda = true};
  if (family == "apostol-bernoulli") return {.order = true, .lambda = true};
  if (family == "genocchi-abc")
    return {.order = true, .lambda = true, .log_a = true, .log_b = true,
            .log_c = true};
  if (family == "luo-bernoulli-abc")
    return {.log_a = true, .log_b = true, .log_c = true};
  if (family == "luo-euler-ab")
    return {.log_a = true, .log_b = true, .sequence = true};
  if (family == "hermite-genocchi") return {.lambda = true, .sequence = true};
  if (family == "hermite-genocchi-ab")
    return {.lambda = true, .bases_ab = true, .sequence = true};
  if (family == "two-var-genocchi") return {.lambda = true, .arg_y = true};
  throw std::invalid_argument("unknown family: " + family);
}

// Resolved parameters with per-family defaults applied:
// order 1; lambda "1"; logs (0, 1, 1) i.e. a = 1, b = c = e; bases (1, 1);
// y = 0.  Each default reduces the family to a smaller classical one.
struct Resolved {
  FamilyShape shape;
  long order = 1;
  bool symbolic = false;
  Rational lambda_value = Rational(1);
  std::string lambda_text = "1";
  Rational la = Rational(0), lb = Rational(1), lc = Rational(1);
  Rational a = Rational(1), b = Rational(1);
  Rational y = Rational(0);
};

Resolved resolve(const FamilySpec& spec) {
  Resolved r;
  r.shape = shape_of(spec.family);

  auto reject = [&](bool provided, bool accepted, const char* flag) {
    if (provided && !accepted)
      throw std::invalid_argument("family " + spec.family +
                                  " does not accept " + flag);
  };
  reject(spec.order.has_value(), r.shape.order, "--order");
  reject(spec.lambda.has_value(), r.shape.lambda, "--lambda");
  reject(spec.la.has_value(), r.shape.log_a, "--la");
  reject(spec.lb.has_value(), r.shape.log_b, "--lb");
  reject(spec.lc.has_value(), r.shape.log_c, "--lc");
  reject(spec.a.has_value(), r.shape.bases_ab, "--a");
  reject(spec.b.has_value(), r.shape.bases_ab, "--b");
  reject(spec.y.has_value(), r.shape.arg_y, "--y");
  if (spec.max_n < 0)
    throw std::invalid_argument("--max-n must be nonnegative");

  if (spec.order) {
    if (*spec.order < 0)
      throw std::invalid_argument("--order must be nonnegative");
    r.order = *spec.order;
  }
  if (spec.lambda) {
    r.lambda_text = *spec.lambda;
    if (r.lambda_text == "symbolic") {
      r.symbolic = true;
    } else {
      r.lambda_value = Rational::parse(r.lambda_text);
      r.lambda_text = r.lambda_value.to_string();
    }
  }
  if (spec.la) r.la = *spec.la;
  if (spec.lb) r.lb = *spec.lb;
  if (spec.lc) r.lc = *spec.lc;
  if (spec.a) r.a = *spec.a;
  if (spec.b) r.b = *spec.b;
  if (spec.y) r.y = *spec.y;

  if (spec.family == "luo-bernoulli-abc" && r.la == r.lb)
    throw std::domain_error(
        "luo-bernoulli-abc: coincident logarithms la = lb are singular");
  if (spec.family == "hermite-genocchi-ab" && (r.a.is_zero() || r.b.is_zero()))
    throw std::domain_error("hermite-genocchi-ab: bases must be nonzero");
  return r;
}

Rational frow(const Rational& q) { return q; }  // field lift, Q case
RatFun flift(const Rational& q) { return RatFun::from_rational(q); }

template <class F>
F field_lambda(const Resolved& r);
template <>
Rational field_lambda<Rational>(const Resolved& r) { return r.lambda_value; }
template <>
RatFun field_lambda<RatFun>(const Resolved&) { return RatFun::symbol(); }

template <class F>
F field_of(const Rational& q);
template <>
Rational field_of<Rational>(const Rational& q) { return frow(q); }
template <>
RatFun field_of<RatFun>(const Rational& q) { return flift(q); }

template <class F>
FamilyTable build_in_field(const FamilySpec& spec, const Resolved& r) {
  const F lam = field_lambda<F>(r);
  if (spec.family == "genocchi")
    return apostol_genocchi_table<F>(1, lam, spec.max_n);
  if (spec.family == "apostol-genocchi")
    return apostol_genocchi_table<F>(r.order, lam, spec.max_n);
  if (spec.family == "apostol-bernoulli")
    return apostol_bernoulli_table<F>(r.order, lam, spec.max_n);
  if (spec.family == "genocchi-abc")
    return genocchi_abc_table<F>(r.order, lam, field_of<F>(r.la),
                                 field_of<F>(r.lb), field_of<F>(r.lc),
                                 spec.max_n);
  if (spec.family == "hermite-genocchi")
    return hermite_genocchi_gf<F>(lam, spec.max_n);
  if (spec.family == "hermite-genocchi-ab")
    return hermite_genocchi_ab_gf<F>(field_of<F>(r.a), field_of<F>(r.b), lam,
                                     spec.max_n);
  if (spec.family == "two-var-genocchi")
    return two_var_genocchi_table<F>(lam, field_of<F>(r.y), spec.max_n);
  throw std::logic_error("build_in_field: unhandled family " + spec.family);
}

// --- serialization helpers ---

nlohmann::ordered_json cell_json(const Rational& q) { return q.to_string(); }

nlohmann::ordered_json cell_json(const RatFun& f) {
  auto list = [](const QPoly& p) {
    auto arr = nlohmann::ordered_json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).to_string());
    if (p.is_zero()) arr.push_back("0");
    return arr;
  };
  return nlohmann::ordered_json{{"num", list(f.num())}, {"den", list(f.den())}};
}

Rational cell_rational(const nlohmann::json& j) {
  return Rational::parse(j.get<std::string>());
}

RatFun cell_ratfun(const nlohmann::json& j) {
  auto poly = [](const nlohmann::json& arr) {
    std::vector<Rational> c;
    for (const auto& item : arr) c.push_back(Rational::parse(item.get<std::string>()));
    return QPoly(std::move(c));
  };
  return RatFun(poly(j.at("num")), poly(j.at("den")));
}

template <class K>
std::string csv_polynomial(const PolyTable<K>& t) {
  int max_deg = 0;
  for (const auto& row : t.rows) max_deg = std::max(max_deg, row.degree());
  std::string out = "n";
  for (int j = 0; j <= max_deg; ++j) out += ",c" + std::to_string(j);
  out += "\n";
  for (int n = 0; n <= t.max_n(); ++n) {
    out += std::to_string(n);
    for (int j = 0; j <= max_deg; ++j)
      out += "," + t.row(n).coeff(j).to_string();
    out += "\n";
  }
  return out;
}

template <class K>
std::string csv_sequence(const std::vector<K>& seq) {
  std::string out = "n,value\n";
  for (std::size_t n = 0; n < seq.size(); ++n)
    out += std::to_string(n) + "," + seq[n].to_string() + "\n";
  return out;
}

template <class K>
nlohmann::ordered_json rows_json(const PolyTable<K>& t) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    auto r = nlohmann::ordered_json::array();
    for (int j = 0; j <= row.degree(); ++j) r.push_back(cell_json(row.coeff(j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

template <class K>
nlohmann::ordered_json rows_json(const std::vector<K>& seq) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& v : seq) rows.push_back(cell_json(v));
  return rows;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "genocchi",          "unsigned-genocchi", "bernoulli",
      "euler",             "apostol-genocchi",  "apostol-bernoulli",
      "genocchi-abc",      "luo-bernoulli-abc", "luo-euler-ab",
      "hermite-genocchi",  "hermite-genocchi-ab", "two-var-genocchi"};
  return names;
}

FamilyTable build_family(const FamilySpec& spec) {
  const Resolved r = resolve(spec);

  // lambda-free families live over Q.
  if (spec.family == "unsigned-genocchi") return unsigned_genocchi(spec.max_n);
  if (spec.family == "bernoulli")
    return bernoulli_table<Rational>(r.order, spec.max_n);
  if (spec.family == "euler") return euler_table<Rational>(r.order, spec.max_n);
  if (spec.family == "luo-bernoulli-abc")
    return luo_bernoulli_abc_table<Rational>(r.la, r.lb, r.lc, spec.max_n);
  if (spec.family == "luo-euler-ab")
    return luo_euler_ab<Rational>(r.la, r.lb, spec.max_n);

  return r.symbolic ? build_in_field<RatFun>(spec, r)
                    : build_in_field<Rational>(spec, r);
}

Rational eval_family(const FamilySpec& spec, int n,
                     const std::optional<Rational>& x) {
  if (n < 0) throw std::invalid_argument("--n must be nonnegative");
  if (spec.lambda && *spec.lambda == "symbolic")
    throw std::invalid_argument(
        "eval requires a concrete rational lambda, not \"symbolic\"");
  FamilySpec sized = spec;
  sized.max_n = n;
  FamilyTable table = build_family(sized);
  if (auto* rows = std::get_if<PolyTable<Rational>>(&table)) {
    if (!x)
      throw std::invalid_argument("--x is required for polynomial families");
    return rows->row(n).eval(*x);
  }
  if (auto* seq = std::get_if<std::vector<Rational>>(&table)) {
    if (x)
      throw std::invalid_argument(
          "--x is not accepted by scalar-sequence families");
    return (*seq)[static_cast<std::size_t>(n)];
  }
  throw std::logic_error("eval_family: unexpected symbolic table");
}

std::string table_to_csv(const FamilyTable& table) {
  return std::visit(
      [](const auto& t) -> std::string {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, PolyTable<Rational>> ||
                      std::is_same_v<T, PolyTable<RatFun>>)
          return csv_polynomial(t);
        else
          return csv_sequence(t);
      },
      table);
}

nlohmann::ordered_json table_to_json(const FamilySpec& spec,
                                     const FamilyTable& table) {
  const Resolved r = resolve(spec);
  nlohmann::ordered_json doc;
  doc["family"] = spec.family;
  if (r.shape.order) doc["order"] = r.order;
  if (r.shape.lambda) doc["lambda"] = r.symbolic ? "symbolic" : r.lambda_text;
  if (r.shape.log_a || r.shape.log_b || r.shape.log_c) {
    nlohmann::ordered_json logs;
    if (r.shape.log_a) logs["la"] = r.la.to_string();
    if (r.shape.log_b) logs["lb"] = r.lb.to_string();
    if (r.shape.log_c) logs["lc"] = r.lc.to_string();
    doc["logs"] = std::move(logs);
  }
  if (r.shape.bases_ab) {
    doc["a"] = r.a.to_string();
    doc["b"] = r.b.to_string();
  }
  if (r.shape.arg_y) doc["y"] = r.y.to_string();
  doc["max_n"] = spec.max_n;
  doc["field"] = std::holds_alternative<PolyTable<RatFun>>(table) ||
                         std::holds_alternative<std::vector<RatFun>>(table)
                     ? "ratfun"
                     : "rational";
  doc["kind"] = std::holds_alternative<PolyTable<Rational>>(table) ||
                        std::holds_alternative<PolyTable<RatFun>>(table)
                    ? "polynomial"
                    : "sequence";
  std::visit([&](const auto& t) { doc["rows"] = rows_json(t); }, table);
  return doc;
}

FamilyTable table_from_json(const nlohmann::json& doc) {
  const std::string field = doc.at("field").get<std::string>();
  const std::string kind = doc.at("kind").get<std::string>();
  const auto& rows = doc.at("rows");
  if (field != "rational" && field != "ratfun")
    throw std::invalid_argument("table_from_json: unknown field " + field);

  if (kind == "polynomial") {
    if (field == "rational") {
      PolyTable<Rational> t;
      for (const auto& row : rows) {
        std::vector<Rational> c;
        for (const auto& cell : row) c.push_back(cell_rational(cell));
        t.rows.emplace_back(std::move(c));
      }
      return t;
    }
    PolyTable<RatFun> t;
    for (const auto& row : rows) {
      std::vector<RatFun> c;
      for (const auto& cell : row) c.push_back(cell_ratfun(cell));
      t.rows.emplace_back(std::move(c));
    }
    return t;
  }
  if (kind != "sequence")
    throw std::invalid_argument("table_from_json: unknown kind " + kind);
  if (field == "rational") {
    std::vector<Rational> seq;
    for (const auto& cell : rows) seq.push_back(cell_rational(cell));
    return seq;
  }
  std::vector<RatFun> seq;
  for (const auto& cell : rows) seq.push_back(cell_ratfun(cell));
  return seq;
}

}  // namespace apogen
