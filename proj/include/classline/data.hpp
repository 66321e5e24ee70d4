/*
 * Loading and validation of the bundled JSON tables: structural group
 * constants, the per-case bound tables (class-size formulas and exponent
 * columns), and the elimination-check catalog. Tables are parsed once into
 * typed structs and exposed as singletons. The CLASSLINE_DATA_DIR
 * environment variable overrides the compiled-in data directory.
 */
#pragma once

#include "classline/arith.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace classline {

// Sign tokens appearing in the class-size formulas. eps is the type of the
// ambient quadratic form, zeta/eta the types of the two halves of an
// involution split (constrained by zeta * eta = eps), alt_n = (-1)^n.
enum class SignToken {
  Plus,
  Minus,
  Eps,
  MinusEps,
  Zeta,
  MinusZeta,
  Eta,
  MinusEta,
  AltN,
  MinusAltN,
  AltN1,
  MinusAltN1,
};

SignToken sign_token_from_name(const std::string& name);
std::string sign_token_name(SignToken token);

struct SignContext {
  int eps = 0;
  int zeta = 0;
  int eta = 0;
  long long n = 0;
};

// Resolves a token to +1/-1; throws std::logic_error if the needed sign is
// unset in the context.
int resolve_sign(SignToken token, const SignContext& ctx);

struct FormulaTerm {
  enum class Kind { Int, QPow, QPowAdd };
  Kind kind = Kind::Int;
  Nat int_value = 0;  // Kind::Int
  ExpExpr exponent;   // QPow / QPowAdd
  SignToken sign = SignToken::Plus;  // QPowAdd
};

// A product/quotient of terms; evaluation is exact and throws
// std::domain_error if the quotient is not an integer or a factor is not
// positive.
struct Formula {
  std::vector<FormulaTerm> num;
  std::vector<FormulaTerm> den;
  Nat eval(const Nat& q, long long n, long long m, const SignContext& ctx) const;
  std::string to_string() const;
};

enum class Parity { Odd, Even, Any };
Parity parity_from_name(const std::string& name);
std::string parity_name(Parity p);
bool parity_admits(Parity p, long long value);

struct MDaggerConfig {
  std::string basis;  // "exact", "column", or "none"
  long long n_floor = 0;
  std::optional<int> value;  // the tabulated cap; nullopt when not tabulated
};

struct ABound {
  std::string tag;
  Formula formula;
};

struct CaseRow {
  std::string id;
  int row_index = 0;
  std::string family;  // linear / unitary / symplectic / orthogonal-odd / orthogonal-even
  Parity n_parity = Parity::Any;
  Parity q_parity = Parity::Any;
  long long n1 = 0, n2 = 0, n3 = 0;
  std::string n1_source;
  std::string element_g, element_h;
  bool h_is_involution = false;
  std::vector<std::string> free_signs;
  std::vector<std::string> socle_signs;
  std::string sign_constraint;  // "" or "eta=eps*zeta"
  Formula w;
  std::optional<Formula> c;  // nullopt: c coincides with w
  ExpExpr vas_exp, vs_exp, irr_exp, red_exp;
  std::optional<ExpExpr> vs_exp_printed;
  std::string index_degree;  // "m(n-m)" or "2m(n-m)"
  Parity m_parity = Parity::Any;
  MDaggerConfig mdagger;
  std::vector<ABound> a_bounds;
};

struct BoundTables {
  std::vector<CaseRow> rows;
  const CaseRow& by_id(const std::string& id) const;
  const CaseRow& by_index(int index) const;
};

struct CheckEntry {
  std::string id;
  std::vector<std::string> rows;
  int stage = 0;  // 3, 5, or 6
  std::string branch;
  std::string kind;  // "exp", "citation", "special_window", "rule"
  std::string rel;   // ">", ">=", "<" (exp only)
  std::optional<long long> m;
  Parity n_parity = Parity::Any;
  ExpExpr lhs, rhs;
  // citation interval [lo, hi]; hi < 0 means unbounded above
  std::optional<std::pair<long long, long long>> interval;
  std::optional<long long> q_restrict;
  std::string conclusion;  // "contradiction", "survives", "gate"
  std::optional<int> m_cap;
  bool coverage = true;
  std::optional<long long> n_min;  // nullopt: the case threshold applies
  std::string cite;

  bool applies_to_row(const std::string& row_id) const;
};

struct ScanConfig {
  long long horizon = 60;
  std::vector<long long> q_grid_odd, q_grid_even, special_grid;
};

struct CheckCatalog {
  ScanConfig scan;
  std::vector<CheckEntry> entries;
  std::vector<const CheckEntry*> for_row(const std::string& row_id) const;
  const CheckEntry& by_id(const std::string& id) const;
};

struct GroupData {
  struct DivisorRow {
    int q_mod_4 = 0;  // 0 encodes even q
    Parity m_parity = Parity::Any;
    int sign = 0;
    int d = 1;
  };
  std::vector<DivisorRow> divisor_rows;
  std::map<std::string, std::string> covering_constant_raw;

  struct MinDegException {
    std::string family;
    long long n = 0;
    long long q = 0;
    Nat value;
  };
  std::vector<MinDegException> min_degree_exceptions;

  int even_orth_divisor(const Nat& q, long long m, int sign) const;
  Nat covering_constant(const std::string& family, const Nat& q) const;
};

struct SmallField {
  long long q = 0;
  std::string polynomial;
  std::vector<int> log_table;      // indexed by element, element 0 unused
  std::vector<int> antilog_table;  // indexed by exponent
};

// Singletons; loading happens on first use and validation errors surface as
// std::runtime_error.
const GroupData& group_data();
const BoundTables& bound_tables();
const CheckCatalog& check_catalog();
const SmallField* small_field(long long q);  // nullptr when q is prime
std::string data_dir();

// Helpers shared with tests: parse "p/q" or integer JSON values.
Rat parse_rational_string(const std::string& text);

}  // namespace classline
