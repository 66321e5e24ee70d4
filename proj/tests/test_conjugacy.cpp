/*
 * Case classification, distinguished-class sizes w, centralizer indices c,
 * and the 2*w^2*c point-count envelope columns.
 */
#include "classline/conjugacy.hpp"

#include <doctest.h>

using namespace classline;

TEST_SUITE("conjugacy") {

TEST_CASE("case classification") {
  CHECK(classify_case(make_socle(Family::Symplectic, 8, 2)).id == "symp-qeven");
  CHECK(classify_case(make_socle(Family::Symplectic, 8, 3)).id == "symp-qodd");
  CHECK(classify_case(make_socle(Family::Linear, 3, 2)).id == "linear-qeven");
  CHECK(classify_case(make_socle(Family::Linear, 3, 3)).id == "linear-nqodd");
  CHECK(classify_case(make_socle(Family::Linear, 4, 3)).id == "linear-even-qodd");
  CHECK(classify_case(make_socle(Family::OrthogonalOdd, 7, 3)).id == "orth-odd");
  CHECK(classify_case(make_socle(Family::OrthogonalEvenPlus, 8, 2)).id == "orth-even-qeven");
  CHECK(classify_case(make_socle(Family::OrthogonalEvenMinus, 8, 3)).id == "orth-even-qodd");
  CHECK(classify_case(make_socle(Family::Unitary, 3, 3)).id == "unitary-nqodd");
  CHECK(classify_case(make_socle(Family::Unitary, 4, 3)).id == "unitary-even-qodd");
  CHECK(classify_case(make_socle(Family::Unitary, 4, 4)).id == "unitary-qeven");
  CHECK(classify_case(make_socle(Family::Unitary, 5, 4)).id == "unitary-qeven");
}

TEST_CASE("pinned class sizes w") {
  const Socle sp = make_socle(Family::Symplectic, 8, 2);
  CHECK(class_size_w(sp, choose_elements(sp)) == 255);
  const Socle gl = make_socle(Family::Linear, 8, 2);
  CHECK(class_size_w(gl, choose_elements(gl)) == 32385);
  const Socle orth = make_socle(Family::OrthogonalOdd, 7, 3);
  CHECK(class_size_w(orth, choose_elements(orth)) == 378);
}

TEST_CASE("pinned centralizer indices c") {
  const Socle gl = make_socle(Family::Linear, 4, 3);
  CHECK(centralizer_index_c(gl, choose_elements(gl)) == 1040);
  const Socle sp = make_socle(Family::Symplectic, 8, 2);
  CHECK(centralizer_index_c(sp, choose_elements(sp)) == 255);
}

TEST_CASE("envelope column at Sp8(2)") {
  const Socle s = make_socle(Family::Symplectic, 8, 2);
  const VUpper simple = v_upper(s, BoundMode::Simple);
  CHECK(simple.w == 255);
  CHECK(simple.c == 255);
  CHECK(simple.value == Nat("33162750"));  // 2 * 255^2 * 255
  CHECK(simple.exponent == Rat(25));       // vs column 3n + 1 at n = 8
  CHECK(q_log_floor(simple.value, Nat(2)) == 24);
  // soundness shape: q^(E-4) < 2w^2c < q^E
  CHECK(cmp_pow(simple.value, Nat(2), Rat(21)) > 0);
  CHECK(cmp_pow(simple.value, Nat(2), Rat(25)) < 0);

  const VUpper almost = v_upper(s, BoundMode::AlmostSimple);
  CHECK(almost.exponent == Rat(25));  // vas column 3n + 1 at n = 8
  CHECK(almost.value == ipow(Nat(2), 25));
}

TEST_CASE("free sign resolution maximizes the class size") {
  // orth-even-qodd has one free sign (zeta); the default choice must beat
  // or match both pinned assignments.
  const Socle s = make_socle(Family::OrthogonalEvenPlus, 10, 3);
  const Nat best = class_size_w(s, choose_elements(s));
  for (int value : {1, -1}) {
    const Nat pinned = class_size_w(s, choose_elements(s, {{"zeta", value}}));
    CHECK(pinned <= best);
  }
  CHECK_THROWS_AS(choose_elements(s, {{"eps", 1}}), std::domain_error);   // socle sign, not free
  CHECK_THROWS_AS(choose_elements(s, {{"bogus", 1}}), std::domain_error);
}

TEST_CASE("free sign resolution on the odd orthogonal case") {
  const Socle s = make_socle(Family::OrthogonalOdd, 9, 3);
  const Nat best = class_size_w(s, choose_elements(s));
  const Nat plus = class_size_w(s, choose_elements(s, {{"eps", 1}}));
  const Nat minus = class_size_w(s, choose_elements(s, {{"eps", -1}}));
  CHECK(best == (plus > minus ? plus : minus));
}

TEST_CASE("element choice metadata") {
  const CaseRow& row = classify_case(make_socle(Family::OrthogonalOdd, 7, 3));
  CHECK(row.h_is_involution);
  CHECK(row.element_g == "reflection");
  const ElementChoice choice = choose_elements(make_socle(Family::OrthogonalOdd, 7, 3));
  CHECK(choice.h_is_involution);
}

TEST_CASE("quoted class-size lower bounds") {
  const Socle s = make_socle(Family::Symplectic, 8, 2);
  const Nat w = class_size_w(s, choose_elements(s));
  CHECK(a_lower(s, "whole") == w);
  CHECK_THROWS_AS(a_lower(s, "no-such-tag"), std::domain_error);
  const Nat staged = a_lower(s, "symplectic-factor-complement", 2);
  CHECK(staged > 0);
  CHECK(staged <= w);
}

TEST_CASE("classification rejects uncovered shapes") {
  Socle s;
  s.family = Family::Linear;
  s.n = 1;
  s.p = 2;
  s.a = 1;
  CHECK_THROWS_AS(classify_case(s), std::domain_error);
}

}  // TEST_SUITE
