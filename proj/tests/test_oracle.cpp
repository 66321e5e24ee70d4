/*
 * Ground-truth brute force: enumeration of small regular linear spaces with
 * canonical forms and automorphism counts, explicit projective geometries,
 * and tiny matrix-group counts cross-checked against the formula modules.
 */
#include "classline/indices.hpp"
#include "classline/oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace classline;

TEST_SUITE("oracle") {

TEST_CASE("projective geometries verify as regular linear spaces") {
  const IncidenceStructure fano = build_pg(3, 2);
  const VerifyResult vf = verify_regular(fano);
  REQUIRE(vf.ok);
  CHECK(vf.params.v == 7);
  CHECK(vf.params.b == 7);
  CHECK(vf.params.r == 3);
  CHECK(vf.params.k == 3);

  const VerifyResult v42 = verify_regular(build_pg(4, 2));
  REQUIRE(v42.ok);
  CHECK(v42.params.v == 15);
  CHECK(v42.params.b == 35);

  const VerifyResult v33 = verify_regular(build_pg(3, 3));
  REQUIRE(v33.ok);
  CHECK(v33.params.v == 13);
  CHECK(v33.params.k == 4);
}

TEST_CASE("verification rejects broken structures") {
  IncidenceStructure fano = build_pg(3, 2);
  fano.lines.pop_back();  // uncovered pairs remain
  CHECK_FALSE(verify_regular(fano).ok);

  IncidenceStructure trivial;
  trivial.v = 3;
  trivial.lines = {{0, 1, 2}};
  const VerifyResult vr = verify_regular(trivial);
  CHECK_FALSE(vr.ok);  // fewer than two lines

  IncidenceStructure doubled = build_pg(3, 2);
  doubled.lines.push_back(doubled.lines.front());
  CHECK_FALSE(verify_regular(doubled).ok);  // pair covered twice
}

TEST_CASE("canonical form is relabeling invariant") {
  const IncidenceStructure fano = build_pg(3, 2);
  const CanonicalResult base = canonical_form(fano);
  CHECK(base.aut_order == 168);

  // Apply a nontrivial relabeling and recanonicalize.
  const std::vector<int> perm = {3, 0, 6, 2, 5, 1, 4};
  IncidenceStructure shuffled;
  shuffled.v = fano.v;
  for (const auto& line : fano.lines) {
    std::vector<int> image;
    for (int x : line) image.push_back(perm[x]);
    shuffled.lines.push_back(image);
  }
  shuffled.normalize();
  const CanonicalResult again = canonical_form(shuffled);
  CHECK(again.form == base.form);
  CHECK(again.aut_order == 168);
}

TEST_CASE("text round trip") {
  const IncidenceStructure fano = build_pg(3, 2);
  const IncidenceStructure back = from_text(to_text(fano));
  CHECK(back == fano);
  CHECK_THROWS_AS(from_text("v 3\nlines 1\n0 1 9\n"), std::runtime_error);
}

TEST_CASE("triple systems on 7 and 9 points") {
  const EnumResult seven = enumerate_regular(7, 3);
  REQUIRE(seven.classes.size() == 1);
  CHECK(seven.classes[0].aut_order == 168);
  CHECK(seven.classes[0].labeled == 30);
  CHECK(seven.labeled_total == 30);
  CHECK(seven.completions * seven.pencils == factorial(7) / 168);
  CHECK(canonical_form(build_pg(3, 2)).form == seven.classes[0].rep);

  const EnumResult nine = enumerate_regular(9, 3);
  REQUIRE(nine.classes.size() == 1);  // AG(2,3) is the unique S(2,3,9)
  CHECK(nine.classes[0].aut_order == 432);
  CHECK(nine.labeled_total == 840);
  // A different v gives a different canonical form.
  CHECK_FALSE(nine.classes[0].rep == seven.classes[0].rep);
}

TEST_CASE("infeasible parameter sets enumerate to nothing") {
  CHECK(enumerate_regular(8, 3).classes.empty());
  CHECK(enumerate_regular(10, 3).classes.empty());
}

TEST_CASE("enumerated structures verify with derived parameters") {
  for (const auto& cls : enumerate_regular(9, 3).classes) {
    const VerifyResult vr = verify_regular(cls.rep);
    REQUIRE(vr.ok);
    const Feasibility f = derive_params(Nat(9), Nat(3));
    CHECK(vr.params.b == f.params.b);
    CHECK(vr.params.r == f.params.r);
  }
}

TEST_CASE("brute matrix group orders match the formulas") {
  CHECK(brute_gl_order(3, 2) == 168);
  CHECK(brute_gl_order(3, 2) ==
        group_order(make_socle(Family::Linear, 3, 2), GroupLevel::Isometry));
  CHECK(brute_gl_order(2, 3) == 48);
  CHECK(brute_sp_order(4, 2) == 720);
  CHECK(brute_sp_order(4, 2) ==
        group_order(make_socle(Family::Symplectic, 4, 2), GroupLevel::Isometry));
  CHECK(brute_sp_order(2, 3) == 24);  // Sp2(3) = SL2(3)
}

TEST_CASE("brute subspace counts match the index formulas") {
  CHECK(brute_nondeg_count_sp(4, 2, 2) == 20);
  CHECK(brute_nondeg_count_sp(6, 2, 2) == 336);
  CHECK(Nat(brute_nondeg_count_sp(4, 2, 2)) ==
        nondegenerate_index(make_socle(Family::Symplectic, 4, 2), 2));
  CHECK(Nat(brute_nondeg_count_sp(6, 2, 2)) ==
        nondegenerate_index(make_socle(Family::Symplectic, 6, 2), 2));
  CHECK(brute_nonisotropic_points_gu(3, 2) == 12);
  CHECK(Nat(brute_nonisotropic_points_gu(3, 2)) ==
        nondegenerate_index(make_socle(Family::Unitary, 3, 2), 1));
}

TEST_CASE("brute quadratic form counts match the orthogonal index") {
  CHECK(brute_orth_in_symp_count(4, 2, 1) == 10);
  CHECK(brute_orth_in_symp_count(4, 2, -1) == 6);
  CHECK(brute_orth_in_symp_count(2, 2, 1) == 3);
  CHECK(Nat(brute_orth_in_symp_count(4, 2, 1)) == orth_in_symp_index(4, Nat(2), 1));
  CHECK(Nat(brute_orth_in_symp_count(4, 2, -1)) == orth_in_symp_index(4, Nat(2), -1));
}

TEST_CASE("projective parameters agree with the arithmetic module") {
  for (const auto& [n, q] : std::vector<std::pair<long long, long long>>{
           {3, 2}, {4, 2}, {3, 3}, {3, 4}}) {
    const VerifyResult vr = verify_regular(build_pg(n, q));
    REQUIRE(vr.ok);
    const PGParams pg = pg_params(n, Nat(q));
    CHECK(vr.params.v == pg.v);
    CHECK(vr.params.b == pg.b);
    CHECK(vr.params.r == pg.r);
    CHECK(vr.params.k == pg.k);
  }
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(7) == 5040);
  CHECK(factorial(13) == Nat("6227020800"));
}

}  // TEST_SUITE
