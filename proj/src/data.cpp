/*
 * JSON table loading, the formula term language evaluator, and the
 * structural-constant lookups backing the order and bound modules.
 */
#include "classline/data.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace classline {

namespace {

using nlohmann::json;

json load_json_file(const std::string& name) {
  const std::string path = data_dir() + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data file: " + path);
  json j;
  in >> j;
  return j;
}

Rat parse_rat(const json& v) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (v.is_string()) return parse_rational_string(v.get<std::string>());
  throw std::runtime_error("bad rational value in data: " + v.dump());
}

ExpExpr parse_exp(const json& v) {
  ExpExpr e;
  if (v.is_null()) return e;
  if (!v.is_object()) throw std::runtime_error("bad exponent object: " + v.dump());
  for (auto it = v.begin(); it != v.end(); ++it) {
    const Rat value = parse_rat(it.value());
    if (it.key() == "n2") e.n2 = value;
    else if (it.key() == "nm") e.nm = value;
    else if (it.key() == "m2") e.m2 = value;
    else if (it.key() == "n") e.n = value;
    else if (it.key() == "m") e.m = value;
    else if (it.key() == "c") e.c = value;
    else throw std::runtime_error("unknown exponent key: " + it.key());
  }
  return e;
}

FormulaTerm parse_term(const json& v) {
  FormulaTerm t;
  const std::string kind = v.at("t").get<std::string>();
  if (kind == "int") {
    t.kind = FormulaTerm::Kind::Int;
    t.int_value = Nat(v.at("v").get<long long>());
  } else if (kind == "qpow") {
    t.kind = FormulaTerm::Kind::QPow;
    t.exponent = parse_exp(v.at("e"));
  } else if (kind == "qpow_add") {
    t.kind = FormulaTerm::Kind::QPowAdd;
    t.exponent = parse_exp(v.at("e"));
    t.sign = sign_token_from_name(v.at("s").get<std::string>());
  } else {
    throw std::runtime_error("unknown formula term kind: " + kind);
  }
  return t;
}

Formula parse_formula(const json& v) {
  Formula f;
  for (const auto& t : v.at("num")) f.num.push_back(parse_term(t));
  if (v.contains("den"))
    for (const auto& t : v.at("den")) f.den.push_back(parse_term(t));
  return f;
}

long long exp_as_integer(const ExpExpr& e, long long n, long long m, const char* what) {
  const Rat value = e.eval(n, m);
  if (denominator(value) != 1)
    throw std::domain_error(std::string(what) + ": exponent is not integral at n=" +
                            std::to_string(n) + ", m=" + std::to_string(m));
  const Nat num = numerator(value);
  if (num < 0)
    throw std::domain_error(std::string(what) + ": negative exponent at n=" +
                            std::to_string(n));
  return static_cast<long long>(num);
}

BoundTables load_bound_tables() {
  BoundTables tables;
  const json j = load_json_file("bound_tables.json");
  for (const auto& row : j.at("rows")) {
    CaseRow r;
    r.id = row.at("id").get<std::string>();
    r.row_index = row.at("row_index").get<int>();
    r.family = row.at("family").get<std::string>();
    r.n_parity = parity_from_name(row.at("n_parity").get<std::string>());
    r.q_parity = parity_from_name(row.at("q_parity").get<std::string>());
    const auto& th = row.at("thresholds");
    r.n1 = th.at("n1").get<long long>();
    r.n2 = th.at("n2").get<long long>();
    r.n3 = th.at("n3").get<long long>();
    r.n1_source = th.at("n1_source").get<std::string>();
    r.element_g = row.at("element_g").get<std::string>();
    r.element_h = row.at("element_h").get<std::string>();
    r.h_is_involution = row.at("h_is_involution").get<bool>();
    const auto& signs = row.at("signs");
    if (signs.contains("free") && !signs.at("free").is_null())
      for (const auto& s : signs.at("free")) r.free_signs.push_back(s.get<std::string>());
    if (signs.contains("socle") && !signs.at("socle").is_null())
      for (const auto& s : signs.at("socle")) r.socle_signs.push_back(s.get<std::string>());
    if (signs.contains("constraint") && !signs.at("constraint").is_null())
      r.sign_constraint = signs.at("constraint").get<std::string>();
    r.w = parse_formula(row.at("w"));
    if (row.at("c").is_string()) {
      if (row.at("c").get<std::string>() != "w")
        throw std::runtime_error("row " + r.id + ": c must be a formula or \"w\"");
    } else {
      r.c = parse_formula(row.at("c"));
    }
    r.vas_exp = parse_exp(row.at("vas_exp"));
    r.vs_exp = parse_exp(row.at("vs_exp"));
    if (row.contains("vs_exp_printed")) r.vs_exp_printed = parse_exp(row.at("vs_exp_printed"));
    r.irr_exp = parse_exp(row.at("irr_exp"));
    r.red_exp = parse_exp(row.at("red_exp"));
    r.index_degree = row.at("index_degree").get<std::string>();
    r.m_parity = parity_from_name(row.at("m_parity").get<std::string>());
    const auto& md = row.at("mdagger");
    r.mdagger.basis = md.at("basis").get<std::string>();
    r.mdagger.n_floor = md.at("n_floor").get<long long>();
    if (!md.at("value").is_null()) r.mdagger.value = md.at("value").get<int>();
    if (row.contains("a_bounds"))
      for (const auto& ab : row.at("a_bounds"))
        r.a_bounds.push_back({ab.at("tag").get<std::string>(), parse_formula(ab.at("formula"))});
    tables.rows.push_back(std::move(r));
  }
  if (tables.rows.size() != 11)
    throw std::runtime_error("bound tables: expected 11 case rows");
  return tables;
}

CheckCatalog load_check_catalog() {
  CheckCatalog catalog;
  const json j = load_json_file("check_catalog.json");
  const auto& scan = j.at("scan");
  catalog.scan.horizon = scan.at("horizon").get<long long>();
  for (const auto& q : scan.at("q_grid_odd")) catalog.scan.q_grid_odd.push_back(q.get<long long>());
  for (const auto& q : scan.at("q_grid_even")) catalog.scan.q_grid_even.push_back(q.get<long long>());
  for (const auto& q : scan.at("special_grid")) catalog.scan.special_grid.push_back(q.get<long long>());
  for (const auto& e : j.at("entries")) {
    CheckEntry entry;
    entry.id = e.at("id").get<std::string>();
    for (const auto& r : e.at("rows")) entry.rows.push_back(r.get<std::string>());
    entry.stage = e.at("stage").get<int>();
    entry.branch = e.at("branch").get<std::string>();
    entry.kind = e.at("kind").get<std::string>();
    if (e.contains("rel")) entry.rel = e.at("rel").get<std::string>();
    if (e.contains("m")) entry.m = e.at("m").get<long long>();
    if (e.contains("n_parity")) entry.n_parity = parity_from_name(e.at("n_parity").get<std::string>());
    if (e.contains("lhs")) entry.lhs = parse_exp(e.at("lhs"));
    if (e.contains("rhs")) entry.rhs = parse_exp(e.at("rhs"));
    if (e.contains("interval")) {
      const auto& iv = e.at("interval");
      long long hi = iv.at(1).is_null() ? -1 : iv.at(1).get<long long>();
      entry.interval = std::make_pair(iv.at(0).get<long long>(), hi);
    }
    if (e.contains("q")) entry.q_restrict = e.at("q").get<long long>();
    entry.conclusion = e.at("conclusion").get<std::string>();
    if (e.contains("m_cap")) entry.m_cap = e.at("m_cap").get<int>();
    entry.coverage = e.at("coverage").get<bool>();
    if (!e.at("n_min").is_null()) entry.n_min = e.at("n_min").get<long long>();
    entry.cite = e.at("cite").get<std::string>();
    catalog.entries.push_back(std::move(entry));
  }
  return catalog;
}

GroupData load_group_data() {
  GroupData data;
  const json j = load_json_file("group_data.json");
  for (const auto& row : j.at("even_orthogonal_projective_divisor").at("rows")) {
    GroupData::DivisorRow d;
    const auto& qm = row.at("q_mod_4");
    d.q_mod_4 = qm.is_string() ? 0 : qm.get<int>();
    d.m_parity = parity_from_name(row.at("m_parity").get<std::string>());
    d.sign = row.at("sign").get<std::string>() == "+" ? 1 : -1;
    d.d = row.at("d").get<int>();
    data.divisor_rows.push_back(d);
  }
  for (auto it = j.at("covering_constant").begin(); it != j.at("covering_constant").end(); ++it) {
    if (it.key() == "comment") continue;
    data.covering_constant_raw[it.key()] =
        it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
  }
  for (const auto& e : j.at("min_degree_exceptions")) {
    GroupData::MinDegException ex;
    ex.family = e.at("family").get<std::string>();
    ex.n = e.at("n").get<long long>();
    ex.q = e.at("q").get<long long>();
    ex.value = Nat(e.at("value").get<long long>());
    data.min_degree_exceptions.push_back(ex);
  }
  return data;
}

std::vector<SmallField> load_small_fields() {
  std::vector<SmallField> fields;
  const json j = load_json_file("field_tables.json");
  for (const auto& f : j.at("fields")) {
    SmallField sf;
    sf.q = f.at("q").get<long long>();
    sf.polynomial = f.at("polynomial").get<std::string>();
    for (const auto& x : f.at("log")) sf.log_table.push_back(x.is_null() ? -1 : x.get<int>());
    for (const auto& x : f.at("antilog")) sf.antilog_table.push_back(x.get<int>());
    fields.push_back(std::move(sf));
  }
  return fields;
}

}  // namespace

Rat parse_rational_string(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(Nat(text));
  return Rat(Nat(text.substr(0, slash)), Nat(text.substr(slash + 1)));
}

SignToken sign_token_from_name(const std::string& name) {
  if (name == "+1") return SignToken::Plus;
  if (name == "-1") return SignToken::Minus;
  if (name == "eps") return SignToken::Eps;
  if (name == "-eps") return SignToken::MinusEps;
  if (name == "zeta") return SignToken::Zeta;
  if (name == "-zeta") return SignToken::MinusZeta;
  if (name == "eta") return SignToken::Eta;
  if (name == "-eta") return SignToken::MinusEta;
  if (name == "alt_n") return SignToken::AltN;
  if (name == "-alt_n") return SignToken::MinusAltN;
  if (name == "alt_n1") return SignToken::AltN1;
  if (name == "-alt_n1") return SignToken::MinusAltN1;
  throw std::runtime_error("unknown sign token: " + name);
}

std::string sign_token_name(SignToken token) {
  switch (token) {
    case SignToken::Plus: return "+1";
    case SignToken::Minus: return "-1";
    case SignToken::Eps: return "eps";
    case SignToken::MinusEps: return "-eps";
    case SignToken::Zeta: return "zeta";
    case SignToken::MinusZeta: return "-zeta";
    case SignToken::Eta: return "eta";
    case SignToken::MinusEta: return "-eta";
    case SignToken::AltN: return "alt_n";
    case SignToken::MinusAltN: return "-alt_n";
    case SignToken::AltN1: return "alt_n1";
    case SignToken::MinusAltN1: return "-alt_n1";
  }
  throw std::logic_error("unreachable sign token");
}

int resolve_sign(SignToken token, const SignContext& ctx) {
  const auto require = [](int value, const char* name) {
    if (value != 1 && value != -1)
      throw std::logic_error(std::string("sign context missing value for ") + name);
    return value;
  };
  switch (token) {
    case SignToken::Plus: return 1;
    case SignToken::Minus: return -1;
    case SignToken::Eps: return require(ctx.eps, "eps");
    case SignToken::MinusEps: return -require(ctx.eps, "eps");
    case SignToken::Zeta: return require(ctx.zeta, "zeta");
    case SignToken::MinusZeta: return -require(ctx.zeta, "zeta");
    case SignToken::Eta: return require(ctx.eta, "eta");
    case SignToken::MinusEta: return -require(ctx.eta, "eta");
    case SignToken::AltN: return ctx.n % 2 == 0 ? 1 : -1;
    case SignToken::MinusAltN: return ctx.n % 2 == 0 ? -1 : 1;
    case SignToken::AltN1: return ctx.n % 2 == 0 ? -1 : 1;
    case SignToken::MinusAltN1: return ctx.n % 2 == 0 ? 1 : -1;
  }
  throw std::logic_error("unreachable sign token");
}

Nat Formula::eval(const Nat& q, long long n, long long m, const SignContext& ctx) const {
  SignContext local = ctx;
  local.n = n;
  const auto eval_product = [&](const std::vector<FormulaTerm>& terms) {
    Nat product = 1;
    for (const auto& t : terms) {
      switch (t.kind) {
        case FormulaTerm::Kind::Int:
          product *= t.int_value;
          break;
        case FormulaTerm::Kind::QPow:
          product *= ipow(q, exp_as_integer(t.exponent, n, m, "formula"));
          break;
        case FormulaTerm::Kind::QPowAdd: {
          Nat factor = ipow(q, exp_as_integer(t.exponent, n, m, "formula"));
          factor += resolve_sign(t.sign, local);
          if (factor <= 0) throw std::domain_error("formula factor is not positive");
          product *= factor;
          break;
        }
      }
    }
    return product;
  };
  const Nat num = eval_product(this->num);
  if (den.empty()) return num;
  const Nat divisor = eval_product(den);
  if (divisor == 0 || num % divisor != 0)
    throw std::domain_error("formula quotient is not an exact integer");
  return num / divisor;
}

std::string Formula::to_string() const {
  const auto term_str = [](const FormulaTerm& t) -> std::string {
    switch (t.kind) {
      case FormulaTerm::Kind::Int: return t.int_value.str();
      case FormulaTerm::Kind::QPow: return "q^(" + t.exponent.to_string() + ")";
      case FormulaTerm::Kind::QPowAdd:
        return "(q^(" + t.exponent.to_string() + ") " +
               (sign_token_name(t.sign)[0] == '-' ? "- " + sign_token_name(t.sign).substr(1)
                                                  : "+ " + sign_token_name(t.sign)) +
               ")";
    }
    return "?";
  };
  std::string out;
  for (const auto& t : num) {
    if (!out.empty()) out += " * ";
    out += term_str(t);
  }
  if (!den.empty()) {
    out += " / (";
    bool first = true;
    for (const auto& t : den) {
      if (!first) out += " * ";
      out += term_str(t);
      first = false;
    }
    out += ")";
  }
  return out;
}

Parity parity_from_name(const std::string& name) {
  if (name == "odd") return Parity::Odd;
  if (name == "even") return Parity::Even;
  if (name == "any") return Parity::Any;
  throw std::runtime_error("unknown parity: " + name);
}

std::string parity_name(Parity p) {
  switch (p) {
    case Parity::Odd: return "odd";
    case Parity::Even: return "even";
    case Parity::Any: return "any";
  }
  throw std::logic_error("unreachable parity");
}

bool parity_admits(Parity p, long long value) {
  switch (p) {
    case Parity::Odd: return value % 2 != 0;
    case Parity::Even: return value % 2 == 0;
    case Parity::Any: return true;
  }
  return false;
}

const CaseRow& BoundTables::by_id(const std::string& id) const {
  for (const auto& row : rows)
    if (row.id == id) return row;
  throw std::domain_error("unknown case id: " + id);
}

const CaseRow& BoundTables::by_index(int index) const {
  for (const auto& row : rows)
    if (row.row_index == index) return row;
  throw std::domain_error("unknown case index: " + std::to_string(index));
}

bool CheckEntry::applies_to_row(const std::string& row_id) const {
  for (const auto& r : rows)
    if (r == row_id) return true;
  return false;
}

std::vector<const CheckEntry*> CheckCatalog::for_row(const std::string& row_id) const {
  std::vector<const CheckEntry*> out;
  for (const auto& e : entries)
    if (e.applies_to_row(row_id)) out.push_back(&e);
  return out;
}

const CheckEntry& CheckCatalog::by_id(const std::string& id) const {
  for (const auto& e : entries)
    if (e.id == id) return e;
  throw std::domain_error("unknown check entry: " + id);
}

int GroupData::even_orth_divisor(const Nat& q, long long m, int sign) const {
  const int q_mod_4 = (q % 2 == 0) ? 0 : static_cast<int>(q % 4);
  for (const auto& row : divisor_rows) {
    if (row.q_mod_4 != q_mod_4) continue;
    if (!parity_admits(row.m_parity, m)) continue;
    if (row.sign != sign) continue;
    return row.d;
  }
  throw std::domain_error("no projective divisor row for the given parameters");
}

Nat GroupData::covering_constant(const std::string& family, const Nat& q) const {
  const auto it = covering_constant_raw.find(family);
  if (it == covering_constant_raw.end())
    throw std::domain_error("no covering constant for family: " + family);
  if (it->second == "q-1") return q - 1;
  if (it->second == "q+1") return q + 1;
  return Nat(it->second);
}

std::string data_dir() {
  static const std::string dir = [] {
    if (const char* env = std::getenv("CLASSLINE_DATA_DIR"); env && *env)
      return std::string(env);
#ifdef CLASSLINE_DEFAULT_DATA_DIR
    return std::string(CLASSLINE_DEFAULT_DATA_DIR);
#else
    return std::string("data");
#endif
  }();
  return dir;
}

const GroupData& group_data() {
  static const GroupData data = load_group_data();
  return data;
}

const BoundTables& bound_tables() {
  static const BoundTables tables = load_bound_tables();
  return tables;
}

const CheckCatalog& check_catalog() {
  static const CheckCatalog catalog = load_check_catalog();
  return catalog;
}

const SmallField* small_field(long long q) {
  static const std::vector<SmallField> fields = load_small_fields();
  for (const auto& f : fields)
    if (f.q == q) return &f;
  return nullptr;
}

}  // namespace classline
