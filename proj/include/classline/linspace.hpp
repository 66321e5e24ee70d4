/*
 * Regular linear space parameter arithmetic: derivation of (b, r) from
 * (v, k) with divisibility and Fisher feasibility tests, the projective
 * plane boundary, significant prime extraction with contradiction
 * certificates, and the fixed-point / line-size / point-count caps used by
 * the elimination pipeline.
 */
#pragma once

#include "classline/arith.hpp"

#include <set>
#include <string>

namespace classline {

struct LinSpaceParams {
  Nat v, b, r, k;
};

struct Feasibility {
  bool feasible = false;
  std::string reason;     // populated when infeasible
  LinSpaceParams params;  // valid when feasible
};

// Parameters of a regular linear space on v points with constant line size
// k: r = (v-1)/(k-1), b = v*r/k. Preconditions: 3 <= k < v.
Feasibility derive_params(const Nat& v, const Nat& k);

bool is_projective_plane(const LinSpaceParams& p);
std::string classify(const LinSpaceParams& p);  // "projective-plane" or "regular"

struct SignificantPrimes {
  std::set<Nat> primes;     // prime divisors of gcd(v-1, b) away from the characteristic
  bool contradiction;       // empty set: no admissible prime remains
  bool certified;           // all factorizations used certified primality
};
SignificantPrimes significant_primes(const LinSpaceParams& p, const Nat& characteristic);

// Cap r + k - 3 on the number of fixed points of a nontrivial automorphism.
Nat fixed_point_cap(const LinSpaceParams& p);

// Largest k with k < 2v/f (zero when none).
Nat k_cap_from_fixed(const Nat& v, const Nat& f);
// Largest k with k < 2w/a (zero when none).
Nat k_cap_from_class(const Nat& w, const Nat& a);

struct VCap {
  Nat cap;           // floor(4*w^2*c / a^2), halved when h is an involution
  Nat intermediate;  // c*k*(k-1) + 1 at the class-derived k cap
  Nat k_cap;
};
VCap v_cap_main(const Nat& w, const Nat& a, const Nat& c, bool h_is_involution);

// Pair count k(k-1)/2 of a single line, the double-counting cap used when a
// stabilizer must fix a line pointwise-pair structure.
Nat dd_cap(const Nat& k);

struct PGParams {
  Nat v, b, r, k;
};
// Points, lines, lines per point, points per line of the projective space
// PG(n-1, q).
PGParams pg_params(long long n, const Nat& q);

}  // namespace classline
