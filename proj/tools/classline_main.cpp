/*
 * Command-line front end. Ten verbs dispatch to the engine modules and emit
 * one deterministic record each: JSON lines by default, an aligned table
 * with --format table. Exit codes: 0 concluded/feasible/success, 1
 * inconclusive/infeasible/internal error, 2 usage error.
 */
#include "classline/indices.hpp"
#include "classline/oracle.hpp"
#include "classline/report.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace classline;

struct Options {
  std::string format = "json";
  std::string family, level = "projective-simple", mode, sign = "plus";
  std::string q_parity, n_parity, case_id;
  std::string reps_out;
  long long n = 0, q = 0, m = 0, v = 0, k = 0, characteristic = 0;
  long long lo = 0, hi = 0;
  int threads = 0;
};

int emit(const Options& opt, const Json& record) {
  if (opt.format == "table")
    std::cout << to_table(record);
  else
    std::cout << to_json_line(record);
  return 0;
}

Json socle_inputs(const Socle& s) {
  Json inputs;
  inputs["family"] = family_name(s.family);
  inputs["n"] = s.n;
  inputs["q"] = nat_str(s.q());
  return inputs;
}

// Resolve a bound-table case from explicit id or family plus parity hints.
const CaseRow& resolve_case(const Options& opt) {
  if (!opt.case_id.empty()) return bound_tables().by_id(opt.case_id);
  std::vector<const CaseRow*> hits;
  for (const auto& row : bound_tables().rows) {
    if (!opt.family.empty() && row.family != opt.family) continue;
    if (!opt.q_parity.empty() && row.q_parity != parity_from_name(opt.q_parity)) continue;
    if (!opt.n_parity.empty() && row.n_parity != parity_from_name(opt.n_parity)) continue;
    hits.push_back(&row);
  }
  if (hits.size() == 1) return *hits.front();
  std::string msg = hits.empty() ? "no case matches the given selectors"
                                 : "selectors are ambiguous between:";
  for (const CaseRow* row : hits) msg += " " + row->id;
  throw std::domain_error(msg);
}

Json threshold_json(const ThresholdResult& t) {
  Json result;
  result["case"] = t.case_id;
  result["n1"] = t.n1;
  result["n2"] = t.n2;
  result["n3"] = t.n3;
  result["published"] = Json::array({t.n1_published, t.n2_published, t.n3_published});
  result["agree"] = t.agree;
  return result;
}

Json threshold_diagnostics(const ThresholdResult& t) {
  Json diag = Json::array();
  Json sub;
  sub["kind"] = "subfield-formal-root";
  sub["root"] = t.subfield_formal_root;
  sub["flag"] = t.subfield_flag;
  diag.push_back(sub);
  Json binding;
  binding["kind"] = "binding-entries";
  binding["entries"] = t.binding;
  diag.push_back(binding);
  return diag;
}

int cmd_order(const Options& opt) {
  const Socle s = make_socle(family_from_name(opt.family), opt.n, opt.q);
  const GroupLevel level = level_from_name(opt.level);
  Json inputs = socle_inputs(s);
  inputs["level"] = level_name(level);
  Json result;
  result["order"] = nat_str(group_order(s, level));
  result["level"] = level_name(level);
  result["family"] = family_name(s.family);
  result["n"] = s.n;
  result["q"] = nat_str(s.q());
  return emit(opt, make_record("order", inputs, result));
}

int cmd_index(const Options& opt) {
  Json inputs, result;
  inputs["mode"] = opt.mode;
  inputs["n"] = opt.n;
  inputs["q"] = std::to_string(opt.q);
  if (opt.mode == "orth-symp") {
    const int sign = opt.sign == "minus" ? -1 : 1;
    inputs["sign"] = opt.sign;
    result["index"] = nat_str(orth_in_symp_index(opt.n, Nat(opt.q), sign));
  } else {
    const Socle s = make_socle(family_from_name(opt.family), opt.n, opt.q);
    inputs["family"] = family_name(s.family);
    inputs["m"] = opt.m;
    result["index"] = nat_str(opt.mode == "parabolic" ? parabolic_index(s, opt.m)
                                                      : nondegenerate_index(s, opt.m));
  }
  return emit(opt, make_record("index", inputs, result));
}

int cmd_bounds(const Options& opt) {
  const Socle s = make_socle(family_from_name(opt.family), opt.n, opt.q);
  const BoundMode mode =
      opt.mode == "almost-simple" ? BoundMode::AlmostSimple : BoundMode::Simple;
  const VUpper bound = v_upper(s, mode);
  Json inputs = socle_inputs(s);
  inputs["case"] = classify_case(s).id;
  inputs["mode"] = opt.mode.empty() ? "simple" : opt.mode;
  Json result;
  result["w"] = nat_str(bound.w);
  result["c"] = nat_str(bound.c);
  result["v_upper"] = nat_str(bound.value);
  result["exponent_column"] = rat_str(bound.exponent);
  result["mode"] = inputs["mode"];
  return emit(opt, make_record("bounds", inputs, result));
}

int cmd_mdagger(const Options& opt) {
  const CaseRow& row = resolve_case(opt);
  const long long lo = opt.lo > 0 ? opt.lo : row.mdagger.n_floor;
  const long long hi = opt.hi > 0 ? opt.hi : 40;
  const MDaggerResult res = mdagger_for_case(row, lo, hi);
  Json inputs;
  inputs["case"] = row.id;
  inputs["range"] = Json::array({lo, hi});
  Json result;
  if (res.value)
    result["value"] = *res.value;
  else
    result["value"] = nullptr;
  result["basis"] = res.basis;
  result["range"] = Json::array({res.n_lo, res.n_hi});
  Json record = make_record("mdagger", inputs, result);
  Json diag = Json::array();
  for (const auto& flag : res.flags) {
    Json f;
    f["kind"] = "basis-disagreement";
    f["n"] = flag.n;
    f["column"] = flag.column_value;
    f["exact"] = flag.exact_value;
    diag.push_back(f);
  }
  record["diagnostics"] = std::move(diag);
  return emit(opt, record);
}

int cmd_thresholds(const Options& opt) {
  const bool select = !opt.case_id.empty() || !opt.family.empty() ||
                      !opt.q_parity.empty() || !opt.n_parity.empty();
  std::vector<ThresholdResult> results;
  if (select)
    results.push_back(scan_thresholds(resolve_case(opt)));
  else
    results = scan_all_thresholds();
  for (const auto& t : results) {
    Json inputs;
    inputs["case"] = t.case_id;
    Json record = make_record("thresholds", inputs, threshold_json(t));
    record["diagnostics"] = threshold_diagnostics(t);
    emit(opt, record);
  }
  return 0;
}

int cmd_pipeline(const Options& opt) {
  const Socle s = make_socle(family_from_name(opt.family), opt.n, opt.q);
  const PipelineResult res = run_pipeline(s);
  Json inputs = socle_inputs(s);
  inputs["case"] = res.case_id;
  Json steps = Json::array();
  Json certificates = Json::array();
  for (const auto& step : res.steps) {
    steps.push_back(step_json(step));
    for (const auto& cert : step.certificates)
      certificates.push_back(certificate_json(cert));
  }
  Json result;
  result["verdict"] = verdict_name(res.overall);
  result["steps"] = std::move(steps);
  Json record = make_record("pipeline", inputs, result);
  record["certificates"] = std::move(certificates);
  emit(opt, record);
  return verdict_concludes(res.overall) ? 0 : 1;
}

int cmd_feasible(const Options& opt) {
  const Feasibility f = derive_params(Nat(opt.v), Nat(opt.k));
  Json inputs;
  inputs["v"] = opt.v;
  inputs["k"] = opt.k;
  Json result;
  result["feasible"] = f.feasible;
  if (f.feasible) {
    Json params;
    params["v"] = nat_str(f.params.v);
    params["b"] = nat_str(f.params.b);
    params["r"] = nat_str(f.params.r);
    params["k"] = nat_str(f.params.k);
    params["class"] = classify(f.params);
    result["params"] = params;
  } else {
    result["reason"] = f.reason;
  }
  emit(opt, make_record("feasible", inputs, result));
  return f.feasible ? 0 : 1;
}

int cmd_sigprimes(const Options& opt) {
  const Feasibility f = derive_params(Nat(opt.v), Nat(opt.k));
  if (!f.feasible) throw std::domain_error("infeasible (v, k): " + f.reason);
  const SignificantPrimes sig = significant_primes(f.params, Nat(opt.characteristic));
  Json inputs;
  inputs["v"] = opt.v;
  inputs["k"] = opt.k;
  inputs["characteristic"] = opt.characteristic;
  Json primes = Json::array();
  for (const auto& p : sig.primes) primes.push_back(nat_str(p));
  Json result;
  result["primes"] = std::move(primes);
  result["contradiction"] = sig.contradiction;
  result["certified"] = sig.certified;
  return emit(opt, make_record("sigprimes", inputs, result));
}

int cmd_pg(const Options& opt) {
  const PGParams pg = pg_params(opt.n, Nat(opt.q));
  Json inputs;
  inputs["n"] = opt.n;
  inputs["q"] = std::to_string(opt.q);
  Json result;
  result["v"] = nat_str(pg.v);
  result["b"] = nat_str(pg.b);
  result["r"] = nat_str(pg.r);
  result["k"] = nat_str(pg.k);
  return emit(opt, make_record("pg", inputs, result));
}

int cmd_enumerate(const Options& opt) {
  const Feasibility f = derive_params(Nat(opt.v), Nat(opt.k));
  const EnumResult res = enumerate_regular(opt.v, opt.k, opt.threads);
  Json inputs;
  inputs["v"] = opt.v;
  inputs["k"] = opt.k;
  Json result;
  result["classes"] = static_cast<long long>(res.classes.size());
  result["labeled"] = nat_str(res.labeled_total);
  Json auts = Json::array();
  Json reps = Json::array();
  for (const auto& cls : res.classes) {
    auts.push_back(nat_str(cls.aut_order));
    Json lines = Json::array();
    for (const auto& line : cls.rep.lines) lines.push_back(line);
    reps.push_back(lines);
  }
  result["aut_orders"] = std::move(auts);
  result["reps"] = std::move(reps);
  if (!f.feasible) result["reason"] = f.reason;
  if (!opt.reps_out.empty()) {
    std::ofstream out(opt.reps_out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + opt.reps_out);
    for (const auto& cls : res.classes) out << to_text(cls.rep);
  }
  emit(opt, make_record("enumerate", inputs, result));
  return f.feasible ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact case-elimination engine for line-transitive actions"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  const auto add_family = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--family", opt.family,
                              "group family (linear, unitary, symplectic, "
                              "orthogonal-odd, orthogonal-even-plus, "
                              "orthogonal-even-minus)");
    if (required) o->required();
  };
  const auto add_nq = [&](CLI::App* sub) {
    sub->add_option("--n", opt.n, "module dimension")->required();
    sub->add_option("--q", opt.q, "field order")->required();
  };
  const auto add_case_selectors = [&](CLI::App* sub) {
    sub->add_option("--case", opt.case_id, "case id from the bound tables");
    sub->add_option("--family", opt.family,
                    "base family (orthogonal-even covers both signs)");
    sub->add_option("--q-parity", opt.q_parity, "odd, even, or any")
        ->check(CLI::IsMember({"odd", "even", "any"}));
    sub->add_option("--n-parity", opt.n_parity, "odd, even, or any")
        ->check(CLI::IsMember({"odd", "even", "any"}));
  };

  auto* order = app.add_subcommand("order", "exact classical group order");
  add_family(order, true);
  add_nq(order);
  order->add_option("--level", opt.level,
                    "isometry, special, omega, projective-simple, similarity")
      ->capture_default_str();

  auto* index = app.add_subcommand("index", "exact subgroup index");
  index->add_option("--mode", opt.mode, "parabolic, nondegenerate, orth-symp")
      ->check(CLI::IsMember({"parabolic", "nondegenerate", "orth-symp"}))
      ->required();
  add_family(index, false);
  add_nq(index);
  index->add_option("--m", opt.m, "subspace dimension");
  index->add_option("--sign", opt.sign, "plus or minus (orth-symp)")
      ->check(CLI::IsMember({"plus", "minus"}));

  auto* bounds = app.add_subcommand("bounds", "class-size point-count envelope");
  add_family(bounds, true);
  add_nq(bounds);
  bounds->add_option("--mode", opt.mode, "simple or almost-simple")
      ->check(CLI::IsMember({"simple", "almost-simple"}));

  auto* mdagger = app.add_subcommand("mdagger", "part-dimension cap scan");
  add_case_selectors(mdagger);
  mdagger->add_option("--lo", opt.lo, "scan range start");
  mdagger->add_option("--hi", opt.hi, "scan range end");

  auto* thresholds =
      app.add_subcommand("thresholds", "recompute case dimension floors");
  add_case_selectors(thresholds);

  auto* pipeline = app.add_subcommand("pipeline", "run the staged elimination");
  add_family(pipeline, true);
  add_nq(pipeline);

  auto* feasible = app.add_subcommand("feasible", "regular linear space parameters");
  feasible->add_option("--v", opt.v, "point count")->required();
  feasible->add_option("--k", opt.k, "line size")->required();

  auto* sigprimes =
      app.add_subcommand("sigprimes", "significant primes away from the characteristic");
  sigprimes->add_option("--v", opt.v, "point count")->required();
  sigprimes->add_option("--k", opt.k, "line size")->required();
  sigprimes->add_option("--char", opt.characteristic, "field characteristic")->required();

  auto* pg = app.add_subcommand("pg", "projective space parameters");
  pg->add_option("--n", opt.n, "vector space dimension")->required();
  pg->add_option("--q", opt.q, "field order")->required();

  auto* enumerate =
      app.add_subcommand("enumerate", "exhaustive isomorph-free enumeration");
  enumerate->add_option("--v", opt.v, "point count")->required();
  enumerate->add_option("--k", opt.k, "line size")->required();
  enumerate->add_option("--threads", opt.threads, "worker count (0 = auto)");
  enumerate->add_option("--reps-out", opt.reps_out,
                        "write class representatives to this file in the text "
                        "incidence format");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (order->parsed()) return cmd_order(opt);
    if (index->parsed()) return cmd_index(opt);
    if (bounds->parsed()) return cmd_bounds(opt);
    if (mdagger->parsed()) return cmd_mdagger(opt);
    if (thresholds->parsed()) return cmd_thresholds(opt);
    if (pipeline->parsed()) return cmd_pipeline(opt);
    if (feasible->parsed()) return cmd_feasible(opt);
    if (sigprimes->parsed()) return cmd_sigprimes(opt);
    if (pg->parsed()) return cmd_pg(opt);
    if (enumerate->parsed()) return cmd_enumerate(opt);
    return 2;
  } catch (const std::exception& e) {
    Json error;
    error["error"] = e.what();
    std::cerr << to_json_line(make_record("error", Json::object(), error));
    return 1;
  }
}
