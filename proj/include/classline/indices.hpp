/*
 * Exact subgroup indices in the classical groups: stabilizers of totally
 * singular subspaces (parabolic), stabilizers of nondegenerate subspaces
 * (minimized over subspace types), orthogonal subgroups inside
 * even-characteristic symplectic groups, and the part-dimension cap scan
 * that compares exact index growth against the tabulated envelope columns.
 */
#pragma once

#include "classline/conjugacy.hpp"

#include <optional>
#include <vector>

namespace classline {

// Index of the stabilizer of a totally singular m-subspace (any m-subspace
// for the linear family, where it equals the Gaussian binomial).
Nat parabolic_index(const Socle& s, long long m);

// Index of the stabilizer of a nondegenerate m-subspace, minimized over the
// admissible types of the subspace and its perpendicular complement.
Nat nondegenerate_index(const Socle& s, long long m);

// |Sp_n(q) : O^sign_n(q)| for even q: the number of quadratic forms of the
// given type polarizing to the standard alternating form.
Nat orth_in_symp_index(long long n, const Nat& q, int sign);

struct MDaggerResult {
  std::optional<int> value;  // nullopt: not tabulated for this case
  std::string basis;         // "exact", "column", or "none"
  long long n_lo = 0, n_hi = 0;
  struct Flag {
    long long n;
    int column_value;
    int exact_value;
  };
  std::vector<Flag> flags;  // dimensions where the two bases disagree
};

// Largest part dimension m whose nondegenerate stabilizer index still fits
// under the envelope, maximized over the dimension range (case parity).
MDaggerResult mdagger_for_case(const CaseRow& row, long long n_lo, long long n_hi);
MDaggerResult mdagger(const Socle& s, long long n_lo, long long n_hi);

// Per-dimension value under a specific basis ("column" compares exponent
// polynomials; "exact" compares exact indices over the small-q grid).
int mdagger_at(const CaseRow& row, long long n, const std::string& basis);

}  // namespace classline
