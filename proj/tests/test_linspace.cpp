/*
 * Regular linear space parameter arithmetic: derivation, feasibility,
 * significant primes, and the cap formulas.
 */
#include "classline/linspace.hpp"

#include <doctest.h>

using namespace classline;

TEST_SUITE("linspace") {

TEST_CASE("parameter derivation") {
  const Feasibility fano = derive_params(Nat(7), Nat(3));
  REQUIRE(fano.feasible);
  CHECK(fano.params.b == 7);
  CHECK(fano.params.r == 3);
  CHECK(is_projective_plane(fano.params));
  CHECK(classify(fano.params) == "projective-plane");

  const Feasibility pg32 = derive_params(Nat(15), Nat(3));
  REQUIRE(pg32.feasible);
  CHECK(pg32.params.b == 35);
  CHECK(pg32.params.r == 7);
  CHECK_FALSE(is_projective_plane(pg32.params));
  CHECK(classify(pg32.params) == "regular");

  const Feasibility nine = derive_params(Nat(9), Nat(3));
  REQUIRE(nine.feasible);
  CHECK(nine.params.b == 12);
  CHECK(nine.params.r == 4);
}

TEST_CASE("infeasibility reasons") {
  const Feasibility r_frac = derive_params(Nat(8), Nat(3));
  CHECK_FALSE(r_frac.feasible);
  CHECK(r_frac.reason == "line degree (v-1)/(k-1) is not an integer");

  const Feasibility b_frac = derive_params(Nat(13), Nat(3));
  REQUIRE(b_frac.feasible);  // 13 points is fine for triples

  const Feasibility b_bad = derive_params(Nat(10), Nat(4));
  CHECK_FALSE(b_bad.feasible);
  CHECK(b_bad.reason == "line count v*r/k is not an integer");

  const Feasibility fisher = derive_params(Nat(16), Nat(6));
  CHECK_FALSE(fisher.feasible);
  CHECK(fisher.reason == "Fisher violation: fewer lines than points (r < k)");

  CHECK_THROWS_AS(derive_params(Nat(7), Nat(2)), std::domain_error);  // k < 3
  CHECK_THROWS_AS(derive_params(Nat(3), Nat(3)), std::domain_error);  // v <= k
}

TEST_CASE("significant primes") {
  const LinSpaceParams pg32 = derive_params(Nat(15), Nat(3)).params;
  const SignificantPrimes sig = significant_primes(pg32, Nat(2));
  CHECK(sig.primes == std::set<Nat>{Nat(7)});
  CHECK_FALSE(sig.contradiction);
  CHECK(sig.certified);

  // Fano over characteristic 2: gcd(v-1, b) = gcd(6, 7) = 1, nothing remains.
  const LinSpaceParams fano = derive_params(Nat(7), Nat(3)).params;
  const SignificantPrimes none = significant_primes(fano, Nat(2));
  CHECK(none.primes.empty());
  CHECK(none.contradiction);

  // Characteristic itself is excluded: gcd(12, 13) = 1 for AG(2,3)-shaped
  // parameters, so use (v, b) = (13, 13): gcd(12, 13) = 1 as well; instead
  // take PG(2,4): v = b = 21, gcd(20, 21) = 1. A case with content:
  // v = 91, k = 6 gives b = 273 = 3 * 7 * 13, gcd(90, 273) = 3.
  const Feasibility f91 = derive_params(Nat(91), Nat(6));
  REQUIRE(f91.feasible);
  const SignificantPrimes away3 = significant_primes(f91.params, Nat(3));
  CHECK(away3.primes.empty());  // only 3 divides the gcd, and 3 is the characteristic
  CHECK(away3.contradiction);
  const SignificantPrimes away2 = significant_primes(f91.params, Nat(2));
  CHECK(away2.primes == std::set<Nat>{Nat(3)});
}

TEST_CASE("fixed point cap") {
  CHECK(fixed_point_cap(derive_params(Nat(15), Nat(3)).params) == 7);   // r + k - 3
  CHECK(fixed_point_cap(derive_params(Nat(7), Nat(3)).params) == 3);
}

TEST_CASE("line size caps") {
  CHECK(k_cap_from_fixed(Nat(720), Nat(72)) == 19);   // largest k < 1440/72 = 20
  CHECK(k_cap_from_fixed(Nat(720), Nat(144)) == 9);   // largest k < 10
  CHECK(k_cap_from_class(Nat(255), Nat(255)) == 1);   // largest k < 2
  CHECK(k_cap_from_class(Nat(720), Nat(72)) == 19);
}

TEST_CASE("point count caps") {
  const VCap open = v_cap_main(Nat(720), Nat(72), Nat(720), false);
  CHECK(open.cap == 288000);         // 4 w^2 c / a^2
  CHECK(open.k_cap == 19);
  CHECK(open.intermediate == Nat(246241));  // c k (k-1) + 1 at k = 19
  const VCap involution = v_cap_main(Nat(720), Nat(72), Nat(720), true);
  CHECK(involution.cap == 144000);   // halved for involutions
}

TEST_CASE("pair count cap") {
  CHECK(dd_cap(Nat(3)) == 3);
  CHECK(dd_cap(Nat(7)) == 21);
}

TEST_CASE("projective space parameters") {
  const PGParams pg32 = pg_params(4, Nat(2));
  CHECK(pg32.v == 15);
  CHECK(pg32.b == 35);
  CHECK(pg32.r == 7);
  CHECK(pg32.k == 3);

  const PGParams fano = pg_params(3, Nat(2));
  CHECK(fano.v == 7);
  CHECK(fano.b == 7);

  const PGParams pg23 = pg_params(3, Nat(3));
  CHECK(pg23.v == 13);
  CHECK(pg23.b == 13);
  CHECK(pg23.k == 4);

  const PGParams pg24 = pg_params(3, Nat(4));
  CHECK(pg24.v == 21);
  CHECK(pg24.r == 5);

  CHECK_THROWS_AS(pg_params(2, Nat(2)), std::domain_error);
}

TEST_CASE("derived parameters satisfy the incidence identities") {
  for (long long v = 4; v <= 100; ++v)
    for (long long k = 3; k < v; ++k) {
      const Feasibility f = derive_params(Nat(v), Nat(k));
      if (!f.feasible) continue;
      CHECK(f.params.r * (f.params.k - 1) == f.params.v - 1);
      CHECK(f.params.b * f.params.k == f.params.v * f.params.r);
      CHECK(f.params.b >= f.params.v);  // Fisher
    }
}

}  // TEST_SUITE
