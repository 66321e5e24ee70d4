/*
 * Case classification and the exact class-size/centralizer-index engine.
 * Free signs in a class-size formula are resolved by maximizing w, so the
 * envelope 2*w^2*c is monotone in every choice left open by the tables.
 */
#include "classline/conjugacy.hpp"

#include <algorithm>
#include <stdexcept>

namespace classline {

namespace {

SignContext base_context(const Socle& s, const CaseRow& row) {
  SignContext ctx;
  ctx.n = s.n;
  for (const auto& token : row.socle_signs)
    if (token == "eps") ctx.eps = s.sign();
  return ctx;
}

void apply_constraint(const CaseRow& row, SignContext& ctx) {
  if (row.sign_constraint.empty()) return;
  if (row.sign_constraint == "eta=eps*zeta") {
    ctx.eta = ctx.eps * ctx.zeta;
    return;
  }
  throw std::logic_error("unknown sign constraint: " + row.sign_constraint);
}

void set_free_sign(SignContext& ctx, const std::string& token, int value) {
  if (token == "eps") ctx.eps = value;
  else if (token == "zeta") ctx.zeta = value;
  else if (token == "eta") ctx.eta = value;
  else throw std::logic_error("unknown free sign token: " + token);
}

long long exponent_as_integer(const Rat& e, const char* what) {
  if (denominator(e) != 1 || numerator(e) < 0)
    throw std::domain_error(std::string(what) + ": exponent column is not a "
                            "nonnegative integer at this dimension");
  return static_cast<long long>(numerator(e));
}

}  // namespace

const CaseRow& classify_case(const Socle& s) {
  s.validate();
  const std::string family = s.family_str();
  for (const auto& row : bound_tables().rows) {
    if (row.family != family) continue;
    if (!parity_admits(row.n_parity, s.n)) continue;
    if (!parity_admits(row.q_parity, s.q_even() ? 2 : 3)) continue;
    return row;
  }
  throw std::domain_error("no case row covers this socle: " + family +
                          " n=" + std::to_string(s.n));
}

ElementChoice choose_elements(const Socle& s) {
  return choose_elements(s, {});
}

ElementChoice choose_elements(const Socle& s, const std::map<std::string, int>& pinned) {
  const CaseRow& row = classify_case(s);
  for (const auto& [token, value] : pinned) {
    if (std::find(row.free_signs.begin(), row.free_signs.end(), token) ==
        row.free_signs.end())
      throw std::domain_error("sign " + token + " is not free in case " + row.id);
    if (value != 1 && value != -1)
      throw std::domain_error("sign " + token + " must be +1 or -1");
  }

  const Nat q = s.q();
  const size_t k = row.free_signs.size();
  ElementChoice best;
  best.g_kind = row.element_g;
  best.h_kind = row.element_h;
  best.h_is_involution = row.h_is_involution;
  Nat best_w = -1;
  std::string last_error;
  for (size_t bits = 0; bits < (size_t{1} << k); ++bits) {
    SignContext ctx = base_context(s, row);
    bool admissible = true;
    for (size_t i = 0; i < k; ++i) {
      const int value = (bits >> i) & 1 ? 1 : -1;
      if (auto it = pinned.find(row.free_signs[i]); it != pinned.end() && it->second != value) {
        admissible = false;
        break;
      }
      set_free_sign(ctx, row.free_signs[i], value);
    }
    if (!admissible) continue;
    apply_constraint(row, ctx);
    try {
      const Nat w = row.w.eval(q, s.n, 0, ctx);
      if (w > best_w) {
        best_w = w;
        best.signs = ctx;
      }
    } catch (const std::domain_error& e) {
      last_error = e.what();
    }
  }
  if (best_w < 0)
    throw std::domain_error("no admissible sign assignment for case " + row.id +
                            (last_error.empty() ? "" : ": " + last_error));
  return best;
}

Nat class_size_w(const Socle& s, const ElementChoice& choice) {
  const CaseRow& row = classify_case(s);
  return row.w.eval(s.q(), s.n, 0, choice.signs);
}

Nat centralizer_index_c(const Socle& s, const ElementChoice& choice) {
  const CaseRow& row = classify_case(s);
  if (!row.c) return class_size_w(s, choice);
  return row.c->eval(s.q(), s.n, 0, choice.signs);
}

VUpper v_upper(const Socle& s, BoundMode mode) {
  const CaseRow& row = classify_case(s);
  const ElementChoice choice = choose_elements(s);
  VUpper out;
  out.w = class_size_w(s, choice);
  out.c = centralizer_index_c(s, choice);
  if (mode == BoundMode::Simple) {
    out.value = 2 * out.w * out.w * out.c;
    out.exponent = row.vs_exp.eval(s.n);
  } else {
    out.exponent = row.vas_exp.eval(s.n);
    out.value = ipow(s.q(), exponent_as_integer(out.exponent, "almost-simple envelope"));
  }
  return out;
}

Nat a_lower(const Socle& s, const std::string& tag, long long m) {
  const CaseRow& row = classify_case(s);
  const ElementChoice choice = choose_elements(s);
  if (tag == "whole") return class_size_w(s, choice);
  for (const auto& bound : row.a_bounds)
    if (bound.tag == tag) return bound.formula.eval(s.q(), s.n, m, choice.signs);
  throw std::domain_error("case " + row.id + " has no class bound tagged " + tag);
}

}  // namespace classline
