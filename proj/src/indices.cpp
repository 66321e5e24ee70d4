/*
 * Exact subgroup indices and the part-dimension cap scan. Parabolic indices
 * come from counting flags of singular vectors, nondegenerate-stabilizer
 * indices from isometry-order ratios minimized over subspace types, and the
 * cap scan compares the index of an m-part stabilizer (symbolically or
 * exactly over the small-field grid) against the point-count envelope.
 */
#include "classline/indices.hpp"

#include <algorithm>
#include <stdexcept>

namespace classline {

namespace {

Nat exact_div(const Nat& a, const Nat& b) {
  if (b == 0 || a % b != 0)
    throw std::logic_error("inexact index division: " + a.str() + " / " + b.str());
  return a / b;
}

long long witt_index(const Socle& s) {
  switch (s.family) {
    case Family::Linear: return s.n;  // no form: every subspace qualifies
    case Family::Unitary: return s.n / 2;
    case Family::Symplectic: return s.n / 2;
    case Family::OrthogonalOdd: return (s.n - 1) / 2;
    case Family::OrthogonalEvenPlus: return s.n / 2;
    case Family::OrthogonalEvenMinus: return s.n / 2 - 1;
  }
  throw std::logic_error("unreachable family");
}

// Number of singular vectors, zero included, in a d-dimensional form of the
// same type as the socle's.
Nat singular_vector_count(const Socle& s, long long d, const Nat& q) {
  switch (s.family) {
    case Family::Symplectic:
      return ipow(q, d);
    case Family::Unitary: {
      const int sd = d % 2 == 0 ? 1 : -1;
      return (ipow(q, d) - sd) * (ipow(q, d - 1) + sd) + 1;
    }
    case Family::OrthogonalOdd:
      return ipow(q, d - 1);
    case Family::OrthogonalEvenPlus:
    case Family::OrthogonalEvenMinus: {
      const int sign = s.sign();
      return (ipow(q, d / 2) - sign) * (ipow(q, d / 2 - 1) + sign) + 1;
    }
    case Family::Linear:
      throw std::logic_error("linear family has no singular vectors");
  }
  throw std::logic_error("unreachable family");
}

// The isometry order of the given family over q, taking the subspace sign
// for the even orthogonal factors.
Nat family_order(Family f, long long n, const Nat& q, int sign = 0) {
  switch (f) {
    case Family::Linear: return order_gl(n, q);
    case Family::Unitary: return order_gu(n, q);
    case Family::Symplectic: return order_sp(n, q);
    case Family::OrthogonalOdd: return order_go_odd(n, q);
    case Family::OrthogonalEvenPlus:
    case Family::OrthogonalEvenMinus: return order_go_even(n, q, sign);
  }
  throw std::logic_error("unreachable family");
}

// Socle grid point for the exact cap basis: the single small field of the
// row's characteristic parity.
long long exact_basis_q(const CaseRow& row) {
  return row.q_parity == Parity::Even ? 2 : 3;
}

// Exact nondegenerate-stabilizer index at row level: orthogonal-even rows
// minimize over the ambient sign as well.
Nat row_exact_index(const CaseRow& row, long long n, long long m, long long q) {
  if (row.family == "orthogonal-even") {
    const Nat plus = nondegenerate_index(make_socle(Family::OrthogonalEvenPlus, n, q), m);
    const Nat minus = nondegenerate_index(make_socle(Family::OrthogonalEvenMinus, n, q), m);
    return std::min(plus, minus);
  }
  Family f;
  if (row.family == "unitary") f = Family::Unitary;
  else if (row.family == "symplectic") f = Family::Symplectic;
  else if (row.family == "orthogonal-odd") f = Family::OrthogonalOdd;
  else throw std::domain_error("case " + row.id + " has no nondegenerate-part cap");
  return nondegenerate_index(make_socle(f, n, q), m);
}

// Exact point-count envelope 2*w^2*c at row level, maximized over the
// ambient sign for orthogonal-even rows.
Nat row_envelope(const CaseRow& row, long long n, long long q) {
  if (row.family == "orthogonal-even") {
    const Nat plus = v_upper(make_socle(Family::OrthogonalEvenPlus, n, q), BoundMode::Simple).value;
    const Nat minus = v_upper(make_socle(Family::OrthogonalEvenMinus, n, q), BoundMode::Simple).value;
    return std::max(plus, minus);
  }
  Family f;
  if (row.family == "unitary") f = Family::Unitary;
  else if (row.family == "symplectic") f = Family::Symplectic;
  else if (row.family == "orthogonal-odd") f = Family::OrthogonalOdd;
  else throw std::domain_error("case " + row.id + " has no nondegenerate-part cap");
  return v_upper(make_socle(f, n, q), BoundMode::Simple).value;
}

}  // namespace

Nat parabolic_index(const Socle& s, long long m) {
  s.validate();
  const Nat q = s.q();
  if (m < 0) throw std::domain_error("subspace dimension must be nonnegative");
  if (s.family == Family::Linear) {
    if (m > s.n) throw std::domain_error("subspace dimension exceeds the space");
    return gaussian_binomial(s.n, m, q);
  }
  if (m > witt_index(s))
    throw std::domain_error("no totally singular subspace of dimension " +
                            std::to_string(m) + " (Witt index " +
                            std::to_string(witt_index(s)) + ")");
  // Count flags v_1 < ... < v_m of singular vectors with each v_j outside the
  // span of its predecessors and perpendicular to them, then divide by the
  // number of ordered bases of an m-space. The radical step contributes
  // b^j * (Z(n - 2j) - 1) where b is the base-field size of the matrix ring.
  const Nat b = s.family == Family::Unitary ? q * q : q;
  Nat numerator = 1;
  for (long long j = 0; j < m; ++j)
    numerator *= ipow(b, j) * (singular_vector_count(s, s.n - 2 * j, q) - 1);
  Nat denominator = 1;
  for (long long i = 0; i < m; ++i) denominator *= ipow(b, m) - ipow(b, i);
  return exact_div(numerator, denominator);
}

Nat nondegenerate_index(const Socle& s, long long m) {
  s.validate();
  const Nat q = s.q();
  const long long n = s.n;
  if (m < 1 || m > n - 1)
    throw std::domain_error("part dimension must lie strictly between 0 and n");
  switch (s.family) {
    case Family::Linear:
      throw std::domain_error("linear family carries no form; use parabolic_index");
    case Family::Unitary:
      return exact_div(order_gu(n, q), order_gu(m, q) * order_gu(n - m, q));
    case Family::Symplectic:
      if (m % 2 != 0)
        throw std::domain_error("nondegenerate symplectic subspaces have even dimension");
      return exact_div(order_sp(n, q), order_sp(m, q) * order_sp(n - m, q));
    case Family::OrthogonalOdd: {
      const Nat whole = order_go_odd(n, q);
      if (m % 2 == 0) {
        Nat best = 0;
        for (int zeta : {1, -1}) {
          const Nat value =
              exact_div(whole, order_go_even(m, q, zeta) * order_go_odd(n - m, q));
          if (best == 0 || value < best) best = value;
        }
        return best;
      }
      Nat best = 0;
      for (int eps : {1, -1}) {
        const Nat value =
            exact_div(whole, order_go_odd(m, q) * order_go_even(n - m, q, eps));
        if (best == 0 || value < best) best = value;
      }
      return best;
    }
    case Family::OrthogonalEvenPlus:
    case Family::OrthogonalEvenMinus: {
      const int eps = s.sign();
      const Nat whole = order_go_even(n, q, eps);
      if (m % 2 == 0) {
        Nat best = 0;
        for (int zeta : {1, -1}) {
          const Nat value = exact_div(
              whole, order_go_even(m, q, zeta) * order_go_even(n - m, q, eps * zeta));
          if (best == 0 || value < best) best = value;
        }
        return best;
      }
      if (s.q_even())
        throw std::domain_error("odd-dimensional orthogonal parts need odd q");
      return exact_div(whole, order_go_odd(m, q) * order_go_odd(n - m, q));
    }
  }
  throw std::logic_error("unreachable family");
}

Nat orth_in_symp_index(long long n, const Nat& q, int sign) {
  if (q % 2 != 0) throw std::domain_error("the symplectic/orthogonal inclusion needs even q");
  if (n < 2 || n % 2 != 0) throw std::domain_error("dimension must be even and >= 2");
  if (sign != 1 && sign != -1) throw std::domain_error("sign must be +1 or -1");
  return exact_div(order_sp(n, q), order_go_even(n, q, sign));
}

int mdagger_at(const CaseRow& row, long long n, const std::string& basis) {
  if (!parity_admits(row.n_parity, n))
    throw std::domain_error("dimension parity does not match case " + row.id);
  int best = 0;
  if (basis == "column") {
    const Rat envelope = row.vs_exp.eval(n);
    for (long long m = 1; m <= n / 2; ++m) {
      if (!parity_admits(row.m_parity, m)) continue;
      if (row.red_exp.eval(n, m) <= envelope) best = std::max(best, static_cast<int>(m));
    }
    return best;
  }
  if (basis == "exact") {
    const long long q = exact_basis_q(row);
    const Nat envelope = row_envelope(row, n, q);
    for (long long m = 1; m <= n / 2; ++m) {
      if (!parity_admits(row.m_parity, m)) continue;
      if (row_exact_index(row, n, m, q) <= envelope) best = std::max(best, static_cast<int>(m));
    }
    return best;
  }
  throw std::domain_error("unknown cap basis: " + basis);
}

MDaggerResult mdagger_for_case(const CaseRow& row, long long n_lo, long long n_hi) {
  MDaggerResult out;
  out.basis = row.mdagger.basis;
  out.n_lo = n_lo;
  out.n_hi = n_hi;
  if (row.mdagger.basis == "none") return out;
  int best = 0;
  for (long long n = n_lo; n <= n_hi; ++n) {
    if (!parity_admits(row.n_parity, n)) continue;
    const int column = mdagger_at(row, n, "column");
    const int exact = mdagger_at(row, n, "exact");
    best = std::max(best, row.mdagger.basis == "exact" ? exact : column);
    if (column != exact) out.flags.push_back({n, column, exact});
  }
  out.value = best;
  return out;
}

MDaggerResult mdagger(const Socle& s, long long n_lo, long long n_hi) {
  return mdagger_for_case(classify_case(s), n_lo, n_hi);
}

}  // namespace classline
