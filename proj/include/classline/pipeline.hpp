/*
 * The staged elimination pipeline: evaluation of catalog checks at concrete
 * parameters, the threshold scanner that reproduces the per-case stage
 * floors from the check catalog, the even-characteristic symplectic/
 * orthogonal window routine, and the full per-(case, n, q) run assembling
 * step verdicts into an overall verdict.
 */
#pragma once

#include "classline/indices.hpp"
#include "classline/linspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace classline {

enum class Verdict { Excluded, ExcludedByCitation, SurvivesAsExample, Inconclusive };
std::string verdict_name(Verdict v);
bool verdict_concludes(Verdict v);  // everything but Inconclusive

struct Certificate {
  std::string claim;
  std::string lhs, rhs;   // exact decimals or exponent rationals; empty for citations
  std::string relation;   // ">=", ">", "<", "citation", "rule"
  bool holds = false;
};

struct CheckOutcome {
  std::string entry_id;
  bool satisfied = false;
  Rat lhs_exp, rhs_exp;  // exponent values at (n, m) for exp entries
  std::optional<Nat> lhs_value, rhs_value;  // exact q-powers when integral
  std::string rel;
};
// Evaluates one catalog entry at concrete parameters. Throws
// std::domain_error when the entry does not apply (below its claim floor,
// wrong parity, wrong part dimension, or wrong field restriction).
CheckOutcome eval_check(const CheckEntry& entry, const CaseRow& row, long long n,
                        const Nat& q, std::optional<long long> m = std::nullopt);

struct ThresholdResult {
  std::string case_id;
  long long n1 = 0, n2 = 0, n3 = 0;  // computed (n1 is the published floor)
  long long n1_published = 0, n2_published = 0, n3_published = 0;
  bool agree = false;
  long long subfield_formal_root = 0;  // diagnostic: first dimension where the
                                       // formal subfield comparison holds onward
  bool subfield_flag = false;          // formal root exceeds the published floor
  std::vector<std::string> binding;    // entry ids whose roots equal n2 or n3
};
ThresholdResult scan_thresholds(const CaseRow& row);
std::vector<ThresholdResult> scan_all_thresholds();

struct SpecialWindowResult {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<Certificate> certificates;
};
// Even-characteristic window for an orthogonal subgroup of the given type
// inside the symplectic group: concludes when q^(n/2-5) >= 8; the q = 2
// boundary is settled by citation.
SpecialWindowResult special_sp_orth_check(long long n, const Nat& q, int sign);

struct StepReport {
  int step = 0;  // 1..6
  Verdict verdict = Verdict::Inconclusive;
  std::string summary;
  std::vector<Certificate> certificates;
};

struct PipelineResult {
  Verdict overall = Verdict::Inconclusive;
  std::string case_id;
  std::vector<StepReport> steps;
};
PipelineResult run_pipeline(const Socle& s);

}  // namespace classline
