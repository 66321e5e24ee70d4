/*
 * Exact orders of the finite classical groups at every standard level
 * (isometry, special, derived subgroup, projective simple, similarity),
 * minimal faithful permutation degrees with the small-case exception table,
 * and similarity orders over proper subfields with the covering constant
 * applied. All arithmetic is exact.
 */
#pragma once

#include "classline/arith.hpp"

#include <string>

namespace classline {

enum class Family {
  Linear,
  Unitary,
  Symplectic,
  OrthogonalOdd,
  OrthogonalEvenPlus,
  OrthogonalEvenMinus,
};

enum class GroupLevel { Isometry, Special, Omega, ProjectiveSimple, Similarity };

std::string family_name(Family f);
Family family_from_name(const std::string& name);
std::string level_name(GroupLevel level);
GroupLevel level_from_name(const std::string& name);

// A socle descriptor: the natural-module dimension n and the field order
// q = p^a. For even-dimensional orthogonal families the sign is part of the
// family tag.
struct Socle {
  Family family = Family::Linear;
  long long n = 0;
  long long p = 0;
  long long a = 1;

  Nat q() const;
  bool q_even() const;
  int sign() const;  // +1 / -1 for the even orthogonal families, else 0
  // Base family string used by the data tables ("orthogonal-even" for both
  // signs, "orthogonal" for covering constants).
  std::string family_str() const;
  // Throws std::domain_error on malformed descriptors (dimension/parity/
  // characteristic constraints).
  void validate() const;
};

Socle make_socle(Family family, long long n, long long q_value);

Nat group_order(const Socle& s, GroupLevel level);

// Raw isometry-group orders as polynomials in q, total in n >= 0 (the empty
// product gives the trivial group); shared with the subgroup-index module
// where the factors run below the dimension floor of a valid socle.
Nat order_gl(long long n, const Nat& q);
Nat order_gu(long long n, const Nat& q);
Nat order_sp(long long n, const Nat& q);
Nat order_go_odd(long long n, const Nat& q);
Nat order_go_even(long long n, const Nat& q, int sign);

struct MinDegree {
  Nat value;
  bool generic;  // false when the exception table supplied the value
};
MinDegree min_degree(const Socle& s);

// Order of the similarity group of the same kind over GF(p^{a/r}), times the
// covering constant of the family evaluated at the large field. r must
// divide a (r = 1 gives the degenerate same-field value).
Nat subfield_similarity_order(const Socle& s, long long r);

// q-polynomial degrees used by the formal subfield comparison.
long long simple_degree(const Socle& s);      // degree of |L|
long long similarity_degree(const Socle& s);  // degree of the similarity order

}  // namespace classline
