/*
 * Acceptance gate: one pass/fail line per shipped criterion, evaluated
 * against the real engine with exact arithmetic. Always compiled with
 * checks on; exits nonzero if any criterion fails.
 */
#include "classline/indices.hpp"
#include "classline/oracle.hpp"
#include "classline/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace {

using namespace classline;

int g_failed_criteria = 0;
int g_checks_failed = 0;

// Always-on check: never compiled out in Release.
#define EXPECT(cond, msg)                                                       \
  do {                                                                          \
    if (!(cond)) {                                                              \
      std::cerr << "  [check] " << __FILE__ << ":" << __LINE__ << " " << msg    \
                << "\n";                                                        \
      ++g_checks_failed;                                                        \
    }                                                                           \
  } while (0)

void run_criterion(int id, const std::string& title, const std::function<void()>& body) {
  g_checks_failed = 0;
  const auto start = std::chrono::steady_clock::now();
  body();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = g_checks_failed == 0;
  if (!pass) ++g_failed_criteria;
  std::printf("[%s] criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", id,
              title.c_str(), seconds);
  std::fflush(stdout);
}

long long first_admissible(const CaseRow& row, const std::function<bool(long long)>& pred) {
  for (long long n = 4; n <= 80; ++n) {
    if (!parity_admits(row.n_parity, n)) continue;
    if (pred(n)) return n;
  }
  return -1;
}

Family socle_family(const CaseRow& row, int sign) {
  if (row.family == "linear") return Family::Linear;
  if (row.family == "unitary") return Family::Unitary;
  if (row.family == "symplectic") return Family::Symplectic;
  if (row.family == "orthogonal-odd") return Family::OrthogonalOdd;
  return sign > 0 ? Family::OrthogonalEvenPlus : Family::OrthogonalEvenMinus;
}

void criterion_thresholds() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<ThresholdResult> all = scan_all_thresholds();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT(all.size() == 11, "expected 11 cases");
  for (const auto& t : all) {
    EXPECT(t.agree, t.case_id + ": recomputed (" + std::to_string(t.n1) + "," +
                        std::to_string(t.n2) + "," + std::to_string(t.n3) +
                        ") != published");
  }
  EXPECT(seconds < 120.0, "threshold scan exceeded two minutes");
}

void criterion_roots() {
  // Irreducible-overgroup column overtakes the envelope column at 13 for the
  // odd orthogonal case and at 22 for the odd-characteristic symplectic case.
  const CaseRow& orth = bound_tables().by_id("orth-odd");
  const long long root_odd = first_admissible(
      orth, [&](long long n) { return orth.irr_exp.eval(n) > orth.vs_exp.eval(n); });
  EXPECT(root_odd == 13, "odd orthogonal root is " + std::to_string(root_odd));

  const CaseRow& symp = bound_tables().by_id("symp-qodd");
  const long long root_even = first_admissible(
      symp, [&](long long n) { return symp.irr_exp.eval(n) > symp.vs_exp.eval(n); });
  EXPECT(root_even == 22, "symplectic root is " + std::to_string(root_even));
}

void criterion_mdagger() {
  const std::map<std::string, int> expected = {
      {"orth-odd", 3},          {"orth-even-qodd", 14}, {"orth-even-qeven", 14},
      {"unitary-nqodd", 4},     {"unitary-even-qodd", 7}, {"unitary-qeven", 5},
      {"symp-qodd", 6},         {"symp-qeven", 6},
  };
  for (const auto& [id, want] : expected) {
    const CaseRow& row = bound_tables().by_id(id);
    const MDaggerResult res = mdagger_for_case(row, row.mdagger.n_floor, 40);
    EXPECT(res.value && *res.value == want,
           id + ": cap over [floor,40] is not " + std::to_string(want));
  }
  // The flagged disagreement cell: odd-dimensional unitary groups at n = 13.
  const CaseRow& psu = bound_tables().by_id("unitary-nqodd");
  EXPECT(mdagger_at(psu, 13, "column") == 5, "column basis at n=13 is not 5");
  EXPECT(mdagger_at(psu, 13, "exact") == 4, "exact basis at n=13 is not 4");
  const MDaggerResult wide = mdagger_for_case(psu, 13, 40);
  bool flagged = false;
  for (const auto& flag : wide.flags)
    if (flag.n == 13 && flag.column_value == 5 && flag.exact_value == 4) flagged = true;
  EXPECT(flagged, "n=13 disagreement missing from the scan report");
}

void criterion_envelope_soundness() {
  const std::vector<long long> grid = {2, 3, 4, 5, 7, 8, 9, 16, 25, 27};
  // The corrected even-dimensional unitary envelope column; the printed one
  // is retained in the tables as a documented discrepancy.
  const CaseRow& row5 = bound_tables().by_id("unitary-even-qodd");
  EXPECT(row5.vs_exp.eval(10) == 86, "corrected column is 10n - 14");
  EXPECT(row5.vs_exp_printed && row5.vs_exp_printed->eval(10) == 94,
         "printed column 10n - 6 should be retained for reference");

  for (const auto& row : bound_tables().rows) {
    const std::vector<int> signs =
        row.family == "orthogonal-even" ? std::vector<int>{1, -1} : std::vector<int>{1};
    for (int sign : signs)
      for (long long q : grid) {
        if (!parity_admits(row.q_parity, q % 2 == 0 ? 2 : 3)) continue;
        for (long long n = row.n1; n <= row.n1 + 12; ++n) {
          if (!parity_admits(row.n_parity, n)) continue;
          Socle s;
          try {
            s = make_socle(socle_family(row, sign), n, q);
          } catch (const std::domain_error&) {
            continue;
          }
          if (classify_case(s).id != row.id) continue;
          const VUpper bound = v_upper(s, BoundMode::Simple);
          const Rat e = bound.exponent;
          const std::string at = row.id + " n=" + std::to_string(n) + " q=" +
                                 std::to_string(q) + (sign > 0 ? " +" : " -");
          EXPECT(cmp_pow(bound.value, Nat(q), e) < 0, at + ": 2w^2c >= q^E");
          EXPECT(cmp_pow(bound.value, Nat(q), e - 4) > 0, at + ": 2w^2c <= q^(E-4)");
        }
      }
  }
}

void criterion_special_window() {
  const auto first_flip = [](long long q) {
    for (long long n = 6; n <= 40; n += 2)
      if (special_sp_orth_check(n, Nat(q), 1).verdict == Verdict::Excluded) return n;
    return -1LL;
  };
  EXPECT(first_flip(4) == 14, "window at q=4 should open at n=14");
  EXPECT(first_flip(8) == 12, "window at q=8 should open at n=12");
  const PipelineResult run = run_pipeline(make_socle(Family::Symplectic, 14, 4));
  EXPECT(run.overall == Verdict::Excluded, "Sp14(4) run should exclude outright");
  for (const auto& step : run.steps)
    EXPECT(step.verdict == Verdict::Excluded,
           "Sp14(4) step " + std::to_string(step.step) + " is not a plain exclusion");
}

void criterion_enumeration() {
  const auto start = std::chrono::steady_clock::now();
  const EnumResult seven = enumerate_regular(7, 3);
  EXPECT(seven.classes.size() == 1, "S(2,3,7) should have one class");
  EXPECT(seven.labeled_total == 30, "30 labeled Fano planes");
  const EnumResult nine = enumerate_regular(9, 3);
  EXPECT(nine.classes.size() == 1, "S(2,3,9) should have one class");
  EXPECT(nine.labeled_total == 840, "840 labeled affine planes of order 3");
  EXPECT(enumerate_regular(8, 3).classes.empty(), "(8,3) is infeasible");
  EXPECT(enumerate_regular(10, 3).classes.empty(), "(10,3) is infeasible");
  const EnumResult thirteen = enumerate_regular(13, 3);
  EXPECT(thirteen.classes.size() == 2, "S(2,3,13) should have two classes");
  std::multiset<Nat> auts;
  for (const auto& cls : thirteen.classes) auts.insert(cls.aut_order);
  EXPECT(auts == std::multiset<Nat>({Nat(6), Nat(39)}),
         "S(2,3,13) automorphism orders should be {6, 39}");
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT(seconds < 600.0, "triple-system enumeration exceeded ten minutes");
}

void criterion_cross_module() {
  for (const auto& [n, q] : std::vector<std::pair<long long, long long>>{
           {3, 2}, {4, 2}, {3, 3}, {3, 4}}) {
    const VerifyResult vr = verify_regular(build_pg(n, q));
    EXPECT(vr.ok, "projective structure failed verification");
    const PGParams pg = pg_params(n, Nat(q));
    EXPECT(vr.params.v == pg.v && vr.params.b == pg.b && vr.params.r == pg.r &&
               vr.params.k == pg.k,
           "projective parameters disagree at n=" + std::to_string(n) +
               " q=" + std::to_string(q));
  }
  const SignificantPrimes sig =
      significant_primes(derive_params(Nat(15), Nat(3)).params, Nat(2));
  EXPECT(sig.primes == std::set<Nat>{Nat(7)}, "significant primes of (15,35,7,3) over 2");

  EXPECT(Nat(brute_nondeg_count_sp(4, 2, 2)) ==
             nondegenerate_index(make_socle(Family::Symplectic, 4, 2), 2),
         "count 20 disagrees");
  EXPECT(Nat(brute_nonisotropic_points_gu(3, 2)) ==
             nondegenerate_index(make_socle(Family::Unitary, 3, 2), 1),
         "count 12 disagrees");
  EXPECT(Nat(brute_nondeg_count_sp(6, 2, 2)) ==
             nondegenerate_index(make_socle(Family::Symplectic, 6, 2), 2),
         "count 336 disagrees");
  EXPECT(brute_nondeg_count_sp(4, 2, 2) == 20, "brute count is not 20");
  EXPECT(brute_nonisotropic_points_gu(3, 2) == 12, "brute count is not 12");
  EXPECT(brute_nondeg_count_sp(6, 2, 2) == 336, "brute count is not 336");
  EXPECT(brute_gl_order(3, 2) == 168 &&
             group_order(make_socle(Family::Linear, 3, 2), GroupLevel::Isometry) == 168,
         "order 168 disagrees");
  EXPECT(brute_sp_order(4, 2) == 720 &&
             group_order(make_socle(Family::Symplectic, 4, 2), GroupLevel::Isometry) == 720,
         "order 720 disagrees");
}

void criterion_properties() {
  // Level-tower divisibility on 1000 random socles.
  std::mt19937_64 rng(0xacce57);
  const std::vector<Family> families = {
      Family::Linear,        Family::Unitary,            Family::Symplectic,
      Family::OrthogonalOdd, Family::OrthogonalEvenPlus, Family::OrthogonalEvenMinus};
  const std::vector<long long> qs = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};
  int done = 0;
  while (done < 1000) {
    Socle s;
    try {
      s = make_socle(families[rng() % families.size()], 2 + (long long)(rng() % 17),
                     qs[rng() % qs.size()]);
    } catch (const std::domain_error&) {
      continue;
    }
    const Nat simple = group_order(s, GroupLevel::ProjectiveSimple);
    const Nat omega = group_order(s, GroupLevel::Omega);
    const Nat special = group_order(s, GroupLevel::Special);
    const Nat isometry = group_order(s, GroupLevel::Isometry);
    const Nat similarity = group_order(s, GroupLevel::Similarity);
    EXPECT(simple > 0 && omega % simple == 0 && special % omega == 0 &&
               isometry % special == 0 && similarity % isometry == 0,
           "level tower divisibility failed");
    ++done;
  }

  // Reducible-stabilizer exponent columns are sound lower bounds on the
  // exact indices for q in {2, 3} around the final floors.
  for (const auto& row : bound_tables().rows) {
    const long long n3 = row.n3;
    for (long long q : {2LL, 3LL}) {
      if (!parity_admits(row.q_parity, q)) continue;
      for (long long n = (n3 + 1) / 2; n <= n3 + 6; ++n) {
        if (!parity_admits(row.n_parity, n)) continue;
        for (long long m = 1; m <= n / 2; ++m) {
          if (row.family == "linear") {
            const Nat index = gaussian_binomial(n, m, Nat(q));
            EXPECT(cmp_pow(index, Nat(q), Rat(m * (n - m))) >= 0,
                   "linear index bound fails at n=" + std::to_string(n));
            continue;
          }
          if (!parity_admits(row.m_parity, m)) continue;
          const Rat red = row.red_exp.eval(n, m);
          if (red < 0) continue;
          Nat index = 0;
          bool have = false;
          for (int sign : row.family == "orthogonal-even" ? std::vector<int>{1, -1}
                                                          : std::vector<int>{1}) {
            try {
              const Socle s = make_socle(socle_family(row, sign), n, q);
              if (classify_case(s).id != row.id) continue;
              const Nat idx = nondegenerate_index(s, m);
              index = have ? (idx < index ? idx : index) : idx;
              have = true;
            } catch (const std::domain_error&) {
            }
          }
          if (!have) continue;
          EXPECT(cmp_pow(index, Nat(q), red) >= 0,
                 row.id + ": index bound fails at n=" + std::to_string(n) +
                     " m=" + std::to_string(m) + " q=" + std::to_string(q));
        }
      }
    }
  }

  // Gaussian binomial symmetry.
  for (long long n = 1; n <= 10; ++n)
    for (long long m = 0; m <= n; ++m)
      for (long long q : {2, 3, 4, 5})
        EXPECT(gaussian_binomial(n, m, Nat(q)) == gaussian_binomial(n, n - m, Nat(q)),
               "gaussian symmetry fails");

  // Factorization round trip.
  std::mt19937_64 frng(0xfac7);
  for (int trial = 0; trial < 300; ++trial) {
    const Nat x = Nat(frng() % 100000000ULL + 1);
    Nat back = 1;
    for (const auto& factor : prime_factorize(x)) back *= ipow(factor.prime, factor.exponent);
    EXPECT(back == x, "factorization does not multiply back");
  }
}

}  // namespace

int main() {
  run_criterion(1, "all eleven case thresholds recompute exactly", criterion_thresholds);
  run_criterion(2, "irreducible-overgroup roots land at 13 and 22", criterion_roots);
  run_criterion(3, "part-dimension caps match the tabulated scan", criterion_mdagger);
  run_criterion(4, "point-count envelope stays within its exponent window",
                criterion_envelope_soundness);
  run_criterion(5, "even-characteristic window flips at (14, q=4) and (12, q=8)",
                criterion_special_window);
  run_criterion(6, "triple systems on up to 13 points enumerate exactly",
                criterion_enumeration);
  run_criterion(7, "formula modules agree with brute-force ground truth",
                criterion_cross_module);
  run_criterion(8, "algebraic property suites hold", criterion_properties);
  if (g_failed_criteria != 0) {
    std::printf("%d criterion(s) failed\n", g_failed_criteria);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
