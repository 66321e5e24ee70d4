/*
 * Brute-force ground truth on small structures: exhaustive isomorph-
 * classified enumeration of regular linear spaces with fixed line size,
 * explicit projective geometries built from vector arithmetic, verification
 * that a points-and-lines object is a regular linear space, canonical forms
 * with automorphism group orders, and matrix-group orders over tiny fields.
 */
#pragma once

#include "classline/linspace.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace classline {

struct IncidenceStructure {
  int v = 0;
  std::vector<std::vector<int>> lines;  // each line sorted; lines sorted
  void normalize();
  bool operator==(const IncidenceStructure& other) const;
};

// Plain text incidence format: header "v <n>" and "lines <b>", then one line
// of the structure per text line as space-separated point indices.
std::string to_text(const IncidenceStructure& s);
IncidenceStructure from_text(const std::string& text);

struct VerifyResult {
  bool ok = false;
  std::string reason;  // populated on failure
  LinSpaceParams params;
};
// Checks that the object is a nontrivial regular linear space: every point
// pair on exactly one line, constant line size 3 <= k < v, constant point
// degree, at least two lines.
VerifyResult verify_regular(const IncidenceStructure& s);

struct CanonicalResult {
  IncidenceStructure form;
  Nat aut_order;
};
// Canonical labeling by branch-and-bound over point relabelings (v <= 15).
CanonicalResult canonical_form(const IncidenceStructure& s);

struct EnumClass {
  IncidenceStructure rep;  // canonical representative
  Nat aut_order;
  Nat labeled;  // v! / |Aut|
};

struct EnumResult {
  long long v = 0, k = 0;
  Nat labeled_total;  // sum of labeled counts over classes
  Nat completions;    // completions of the fixed first-point pencil
  Nat pencils;        // labeled pencils through the first point
  std::vector<EnumClass> classes;
};
// Exhaustive enumeration of regular linear spaces on v points with line size
// k, up to isomorphism. Preconditions: 3 <= k < v <= 15. Infeasible (v, k)
// yields zero classes.
EnumResult enumerate_regular(long long v, long long k, int threads = 0);

// The projective space PG(n-1, q) as an incidence structure; q in {2,3,4,5}.
IncidenceStructure build_pg(long long n, long long q);

Nat factorial(long long n);

// Matrix brute force over small fields (guarded to tiny sizes).
Nat brute_gl_order(int n, long long q);
Nat brute_sp_order(int n, long long q);
long long brute_nondeg_count_sp(int n, int m, long long q);
long long brute_nonisotropic_points_gu(int n, long long q);
long long brute_orth_in_symp_count(int n, long long q, int sign);

}  // namespace classline
