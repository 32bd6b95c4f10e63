// mrgrc: bounds, graphs, simulation and verification for clustered storage
// codes that repair t nodes per batch. See README.md for usage.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mrgrc/bounds.hpp"
#include "mrgrc/combin.hpp"
#include "mrgrc/converse.hpp"
#include "mrgrc/errors.hpp"
#include "mrgrc/exactrep.hpp"
#include "mrgrc/flowgraph.hpp"
#include "mrgrc/rlnc.hpp"
#include "mrgrc/serde.hpp"

using nlohmann::json;
using namespace mrgrc;

namespace {

struct ParamArgs {
  int n = -1, k = -1, d = -1, m = -1, ell = -1, t = -1;
  std::string alpha, beta;  // rational strings, empty = unset
  std::string config;       // optional JSON file with the same field names
};

void add_param_flags(CLI::App* cmd, ParamArgs& a, bool with_ell = true,
                     bool with_profile = true) {
  cmd->add_option("--n", a.n, "number of clusters");
  cmd->add_option("--k", a.k, "clusters needed for data collection");
  cmd->add_option("--d", a.d, "helper clusters per repair");
  cmd->add_option("--m", a.m, "nodes per cluster");
  if (with_ell) cmd->add_option("--ell", a.ell, "local helper nodes (default 0)");
  cmd->add_option("--t", a.t, "failed nodes per batch");
  if (with_profile) {
    cmd->add_option("--alpha", a.alpha, "per-node storage (integer or p/q)");
    cmd->add_option("--beta", a.beta, "per-helper-cluster bandwidth (integer or p/q)");
  }
  cmd->add_option("--config", a.config, "JSON object with n,k,d,m,ell,t,alpha,beta defaults");
}

// Flags win over config values; config fills whatever is still unset.
void merge_config(ParamArgs& a) {
  if (a.config.empty()) return;
  json j;
  try {
    j = json::parse(read_file(a.config));
  } catch (const json::exception& e) {
    throw Error(Errc::BadInput, "--config " + a.config + ": " + e.what());
  }
  if (!j.is_object()) throw Error(Errc::BadInput, "--config must hold a JSON object");
  auto fill_int = [&j](int& slot, const char* key) {
    if (slot == -1 && j.contains(key)) {
      if (!j[key].is_number_integer())
        throw Error(Errc::BadInput, std::string("config field '") + key + "' must be an integer");
      slot = j[key].get<int>();
    }
  };
  fill_int(a.n, "n");
  fill_int(a.k, "k");
  fill_int(a.d, "d");
  fill_int(a.m, "m");
  fill_int(a.ell, "ell");
  fill_int(a.t, "t");
  auto fill_rat = [&j](std::string& slot, const char* key) {
    if (!slot.empty() || !j.contains(key)) return;
    if (j[key].is_number_integer())
      slot = std::to_string(j[key].get<long long>());
    else if (j[key].is_string())
      slot = j[key].get<std::string>();
    else
      throw Error(Errc::BadInput,
                  std::string("config field '") + key + "' must be an integer or \"p/q\" string");
  };
  fill_rat(a.alpha, "alpha");
  fill_rat(a.beta, "beta");
}

SystemParams make_params(ParamArgs& a) {
  merge_config(a);
  auto need = [](int v, const char* flag) {
    if (v == -1) throw Error(Errc::BadInput, std::string("missing required flag ") + flag);
    return v;
  };
  int ell = a.ell == -1 ? 0 : a.ell;
  return validate(need(a.n, "--n"), need(a.k, "--k"), need(a.d, "--d"), need(a.m, "--m"), ell,
                  need(a.t, "--t"));
}

Rat parse_rat_flag(const std::string& s, const char* flag) {
  if (s.empty()) throw Error(Errc::BadInput, std::string("missing required flag ") + flag);
  try {
    return Rat::parse(s);
  } catch (const std::exception& e) {
    throw Error(Errc::BadInput, std::string(flag) + ": " + e.what());
  }
}

ResourceProfile make_profile(const ParamArgs& a) {
  return validate_profile(parse_rat_flag(a.alpha, "--alpha"), parse_rat_flag(a.beta, "--beta"));
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    atomic_write(out_path, content);
}

uint64_t default_seed() {
  const char* env = std::getenv("MRGRC_SEED");
  if (!env || !*env) return 0;
  try {
    size_t used = 0;
    unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::BadInput, "MRGRC_SEED must be an unsigned integer");
  }
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

json rat_json(const Rat& r) {
  if (r.is_integer()) return json(r.num());
  return json(r.str());
}

// ---- subcommand payloads ------------------------------------------------------

std::string bounds_csv(const SystemParams& p, const ResourceProfile& r) {
  ClassifyReport rep = classify(p, r);
  return csv({"alpha", "beta", "B_functional", "B_exact", "divisible", "at_mbr", "bounds_equal"},
             {{r.alpha.str(), r.beta.str(), rep.b_functional.str(), rep.b_exact.str(),
               bool_str(rep.divisible), bool_str(rep.at_mbr), bool_str(rep.bounds_equal)}});
}

json bounds_json(const SystemParams& p, const ResourceProfile& r) {
  ClassifyReport rep = classify(p, r);
  return json{{"alpha", rat_json(r.alpha)},
              {"beta", rat_json(r.beta)},
              {"B_functional", rat_json(rep.b_functional)},
              {"B_exact", rat_json(rep.b_exact)},
              {"divisible", rep.divisible},
              {"at_mbr", rep.at_mbr},
              {"bounds_equal", rep.bounds_equal},
              {"strict_gap", rep.strict_gap}};
}

std::vector<std::pair<std::string, TradeoffPoint>> tradeoff_points(
    const SystemParams& p, const Rat& B, const std::string& mode, int grid,
    std::optional<Rat> alpha_max) {
  std::vector<std::pair<std::string, TradeoffPoint>> rows;
  auto add = [&](RepairMode rm, const char* name) {
    for (const auto& pt : tradeoff_curve(p, B, rm, grid, alpha_max)) rows.emplace_back(name, pt);
  };
  if (mode == "functional" || mode == "both") add(RepairMode::Functional, "functional");
  if (mode == "exact" || mode == "both") add(RepairMode::Exact, "exact");
  return rows;
}

std::string tradeoff_csv(const std::vector<std::pair<std::string, TradeoffPoint>>& rows) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& [mode, pt] : rows)
    cells.push_back({mode, pt.alpha.str(), pt.beta.str(), pt.storage_overhead.str(),
                     pt.ic_bandwidth_overhead.str()});
  return csv({"mode", "alpha", "beta", "storage_overhead", "ic_bandwidth_overhead"}, cells);
}

json tradeoff_json(const std::vector<std::pair<std::string, TradeoffPoint>>& rows) {
  json arr = json::array();
  for (const auto& [mode, pt] : rows)
    arr.push_back(json{{"mode", mode},
                       {"alpha", rat_json(pt.alpha)},
                       {"beta", rat_json(pt.beta)},
                       {"storage_overhead", rat_json(pt.storage_overhead)},
                       {"ic_bandwidth_overhead", rat_json(pt.ic_bandwidth_overhead)}});
  return arr;
}

std::string ell_profile_csv(const EllProfile& prof) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& e : prof.entries)
    cells.push_back({std::to_string(e.ell), e.b_functional.str()});
  return csv({"ell", "B_functional"}, cells);
}

json ell_profile_json(const EllProfile& prof) {
  json entries = json::array();
  for (const auto& e : prof.entries)
    entries.push_back(json{{"ell", e.ell}, {"B_functional", rat_json(e.b_functional)}});
  return json{{"entries", entries},
              {"plateau_predicate", prof.plateau_predicate},
              {"predicted_plateau_max_ell", prof.predicted_plateau_max_ell},
              {"evaluated_plateau_max_ell", prof.evaluated_plateau_max_ell}};
}

json chain_to_json(const ChainReport& rep) {
  json steps = json::array();
  for (const auto& s : rep.steps)
    steps.push_back(json{
        {"label", s.label}, {"lhs", rat_json(s.lhs)}, {"rhs", rat_json(s.rhs)}, {"ok", s.ok}});
  return json{{"B", rep.B},
              {"B_exact_bound", rat_json(rep.b_exact)},
              {"tight", rep.tight},
              {"steps", steps}};
}

json verification_to_json(const VerificationReport& rep) {
  json issues = json::array();
  for (const auto& i : rep.issues) issues.push_back(json{{"kind", i.kind}, {"detail", i.detail}});
  return json{{"collection_checks", rep.collection_checks},
              {"repair_checks", rep.repair_checks},
              {"ok", rep.ok()},
              {"issues", issues}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"storage/bandwidth trade-off calculator for clustered codes with batch repair"};
  app.require_subcommand(1);

  int exit_code = 0;
  std::string out_path;
  std::string format = "csv";

  // ---- bounds ----
  auto* cmd_bounds = app.add_subcommand("bounds", "evaluate both file-size bounds at one point");
  ParamArgs ba;
  add_param_flags(cmd_bounds, ba);
  cmd_bounds->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_bounds->add_option("--out", out_path, "write atomically to this file instead of stdout");
  cmd_bounds->callback([&] {
    SystemParams p = make_params(ba);
    ResourceProfile r = make_profile(ba);
    emit(format == "json" ? bounds_json(p, r).dump(2) + "\n" : bounds_csv(p, r), out_path);
  });

  // ---- tradeoff ----
  auto* cmd_tr = app.add_subcommand("tradeoff", "alpha/beta curve attaining a file size B");
  ParamArgs ta;
  std::string tr_B, tr_mode = "both", tr_alpha_max;
  int tr_grid = 33;
  add_param_flags(cmd_tr, ta, true, false);
  cmd_tr->add_option("--B", tr_B, "file size (integer or p/q)")->required();
  cmd_tr->add_option("--mode", tr_mode, "functional, exact or both")
      ->check(CLI::IsMember({"functional", "exact", "both"}));
  cmd_tr->add_option("--grid", tr_grid, "number of alpha samples (default 33)");
  cmd_tr->add_option("--alpha-max", tr_alpha_max, "override the right end of the alpha range");
  cmd_tr->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd_tr->add_option("--out", out_path, "output file");
  cmd_tr->callback([&] {
    SystemParams p = make_params(ta);
    Rat B = parse_rat_flag(tr_B, "--B");
    std::optional<Rat> amax;
    if (!tr_alpha_max.empty()) amax = parse_rat_flag(tr_alpha_max, "--alpha-max");
    auto rows = tradeoff_points(p, B, tr_mode, tr_grid, amax);
    emit(format == "json" ? tradeoff_json(rows).dump(2) + "\n" : tradeoff_csv(rows), out_path);
  });

  // ---- ell-profile ----
  auto* cmd_ell = app.add_subcommand("ell-profile",
                                     "functional bound as a function of the local helper count");
  ParamArgs ea;
  add_param_flags(cmd_ell, ea, false);
  cmd_ell->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd_ell->add_option("--out", out_path, "output file");
  cmd_ell->callback([&] {
    merge_config(ea);
    auto need = [](int v, const char* flag) {
      if (v == -1) throw Error(Errc::BadInput, std::string("missing required flag ") + flag);
      return v;
    };
    ResourceProfile r = make_profile(ea);
    EllProfile prof = local_help_profile(need(ea.n, "--n"), need(ea.k, "--k"), need(ea.d, "--d"),
                                         need(ea.m, "--m"), need(ea.t, "--t"), r);
    emit(format == "json" ? ell_profile_json(prof).dump(2) + "\n" : ell_profile_csv(prof),
         out_path);
  });

  // ---- ifg-mincut ----
  auto* cmd_ifg = app.add_subcommand("ifg-mincut",
                                     "max-flow of the information flow graph of a trace");
  ParamArgs ga;
  std::string ifg_trace, ifg_dot;
  std::vector<int> ifg_collectors;
  add_param_flags(cmd_ifg, ga);
  cmd_ifg->add_option("--trace", ifg_trace, "JSON failure trace")->required();
  cmd_ifg->add_option("--collectors", ifg_collectors,
                      "k collector clusters (default: from the trace file)")
      ->delimiter(',');
  cmd_ifg->add_option("--dot", ifg_dot, "also write the graph in DOT format to this file");
  cmd_ifg->add_option("--out", out_path, "output file");
  cmd_ifg->callback([&] {
    SystemParams p = make_params(ga);
    ResourceProfile r = make_profile(ga);
    TraceFile tf = load_trace_file(ifg_trace);
    std::vector<int> collectors = ifg_collectors.empty() ? tf.collectors : ifg_collectors;
    if (collectors.empty())
      throw Error(Errc::BadInput,
                  "no collectors: pass --collectors or add \"collectors\" to the trace file");
    FlowGraph g = build_ifg(p, r, tf.trace, collectors);
    Rat flow = max_flow(g);
    Rat bf = functional_bound(p, r);
    if (!ifg_dot.empty()) atomic_write(ifg_dot, g.dot());
    json j{{"mincut", rat_json(flow)},
           {"functional_bound", rat_json(bf)},
           {"meets_bound", flow == bf},
           {"vertices", g.vertices.size()},
           {"edges", g.edges.size()},
           {"trace", trace_to_json(tf.trace, collectors)}};
    emit(j.dump(2) + "\n", out_path);
  });

  // ---- converse-search ----
  auto* cmd_conv = app.add_subcommand(
      "converse-search", "minimum min-cut over every bounded trace and collector choice");
  ParamArgs ca;
  int conv_batches = 0;
  long long conv_budget = 1'000'000;
  bool conv_no_sym = false;
  add_param_flags(cmd_conv, ca);
  cmd_conv->add_option("--max-batches", conv_batches, "max repair events per trace")->required();
  cmd_conv->add_option("--budget", conv_budget, "cap on max-flow evaluations (default 1e6)");
  cmd_conv->add_flag("--no-symmetry", conv_no_sym,
                     "disable relabeling dedup (validation of the reduction)");
  cmd_conv->add_option("--out", out_path, "output file");
  cmd_conv->callback([&] {
    SystemParams p = make_params(ca);
    ResourceProfile r = make_profile(ca);
    SearchPolicy pol;
    pol.symmetry_reduce = !conv_no_sym;
    pol.budget = conv_budget;
    SearchReport rep = converse_search(p, r, conv_batches, pol);
    json j{{"minimum", rat_json(rep.minimum)},
           {"functional_bound", rat_json(rep.functional_bound_value)},
           {"matches_bound", rep.matches_bound},
           {"instances_enumerated", rep.instances_enumerated},
           {"graphs_evaluated", rep.graphs_evaluated},
           {"budget_exceeded", rep.budget_exceeded},
           {"argmin", trace_to_json(rep.argmin_trace, rep.argmin_collectors)}};
    emit(j.dump(2) + "\n", out_path);
    if (rep.budget_exceeded) {
      std::cerr << "BudgetExceeded: minimum is a partial result over " << rep.graphs_evaluated
                << " graphs\n";
      exit_code = 1;
    }
  });

  // ---- simulate ----
  auto* cmd_sim = app.add_subcommand("simulate",
                                     "random-linear-coding success rates over a file-size sweep");
  ParamArgs sa;
  std::string sim_trace, sim_field = "gf65536";
  long long sim_bmin = -1, sim_bmax = -1;
  int sim_trials = 200;
  uint64_t sim_seed = 0;
  bool sim_seed_set = false;
  add_param_flags(cmd_sim, sa);
  cmd_sim->add_option("--trace", sim_trace, "JSON failure trace")->required();
  cmd_sim->add_option("--B-min", sim_bmin, "smallest file size")->required();
  cmd_sim->add_option("--B-max", sim_bmax, "largest file size")->required();
  cmd_sim->add_option("--trials", sim_trials, "trials per file size (default 200)");
  cmd_sim->add_option("--field", sim_field, "gf256 or gf65536")
      ->check(CLI::IsMember({"gf256", "gf65536"}));
  cmd_sim->add_option("--seed", sim_seed, "RNG seed (default MRGRC_SEED, else 0)");
  cmd_sim->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd_sim->add_option("--out", out_path, "output file");
  cmd_sim->callback([&] {
    SystemParams p = make_params(sa);
    ResourceProfile r = make_profile(sa);
    if (sim_bmin < 1 || sim_bmax < sim_bmin)
      throw Error(Errc::BadInput, "--B-min/--B-max must satisfy 1 <= B-min <= B-max");
    sim_seed_set = cmd_sim->count("--seed") > 0;
    uint64_t seed = sim_seed_set ? sim_seed : default_seed();
    const Field& f = Field::by_name(sim_field);
    TraceFile tf = load_trace_file(sim_trace);
    std::vector<std::vector<std::string>> cells;
    json arr = json::array();
    char buf[32];
    for (long long B = sim_bmin; B <= sim_bmax; ++B) {
      TrialReport rep = monte_carlo(p, r, B, tf.trace, sim_trials, f, seed);
      std::snprintf(buf, sizeof buf, "%.6f", rep.success_rate());
      cells.push_back({std::to_string(B), buf, std::to_string(rep.trials),
                       std::to_string(rep.seed)});
      arr.push_back(json{{"B", B},
                         {"success_rate", rep.success_rate()},
                         {"successes", rep.successes},
                         {"trials", rep.trials},
                         {"seed", rep.seed},
                         {"field", rep.field}});
    }
    emit(format == "json" ? arr.dump(2) + "\n"
                          : csv({"B", "success_rate", "trials", "seed"}, cells),
         out_path);
  });

  // ---- verify-exact ----
  auto* cmd_ver = app.add_subcommand("verify-exact",
                                     "check a linear code against the exact-repair conditions");
  std::string ver_code;
  bool ver_exhaustive = false;
  cmd_ver->add_option("--code", ver_code, "code JSON file")->required();
  cmd_ver->add_flag("--exhaustive", ver_exhaustive, "sweep all helper and local sets");
  cmd_ver->add_option("--out", out_path, "output file");
  cmd_ver->callback([&] {
    LinearMrgrc code = load_code_file(ver_code);
    VerificationReport rep = verify_code(code, QueryPolicy{ver_exhaustive});
    json j = verification_to_json(rep);
    bool ok = rep.ok();
    try {
      ChainReport chain = verify_exact_bound(code);
      j["chain"] = chain_to_json(chain);
    } catch (const Error& e) {
      if (e.code() != Errc::ChainViolated && e.code() != Errc::LemmaViolated) throw;
      j["chain_error"] = e.what();
      ok = false;
    }
    j["ok"] = ok;
    emit(j.dump(2) + "\n", out_path);
    if (!ok) exit_code = 1;
  });

  // ---- lift-demo ----
  auto* cmd_lift = app.add_subcommand(
      "lift-demo", "build the stacked classical base code and lift it to batch repair");
  int lift_t = 2, lift_n = 5, lift_k = 3, lift_d = 4, lift_m = 3;
  std::string lift_field = "gf256", lift_code_out;
  bool lift_exhaustive = false;
  cmd_lift->add_option("--t", lift_t, "target batch size (default 2)");
  cmd_lift->add_option("--n", lift_n, "clusters (default 5)");
  cmd_lift->add_option("--k", lift_k, "collection threshold (default 3)");
  cmd_lift->add_option("--d", lift_d, "helper clusters (default 4)");
  cmd_lift->add_option("--m", lift_m, "nodes per cluster (default 3)");
  cmd_lift->add_option("--field", lift_field, "gf256 or gf65536")
      ->check(CLI::IsMember({"gf256", "gf65536"}));
  cmd_lift->add_flag("--exhaustive", lift_exhaustive, "verify over all helper/local sets");
  cmd_lift->add_option("--save-code", lift_code_out, "write the lifted code JSON here");
  cmd_lift->add_option("--out", out_path, "output file for the summary");
  cmd_lift->callback([&] {
    const Field& f = Field::by_name(lift_field);
    LinearMrgrc base = stacked_mbr_base(lift_n, lift_k, lift_d, lift_m, f);
    LinearMrgrc code = lift(base, lift_t);
    VerificationReport rep = verify_code(code, QueryPolicy{lift_exhaustive});
    Rat be = exact_bound(code.params, code.profile());
    Rat bf = functional_bound(code.params, code.profile());
    json j{{"params",
            {{"n", code.params.n},
             {"k", code.params.k},
             {"d", code.params.d},
             {"m", code.params.m},
             {"ell", code.params.ell},
             {"t", code.params.t}}},
           {"field", f.name()},
           {"alpha", code.alpha},
           {"beta", code.beta},
           {"beta_prime", code.desc.beta_prime},
           {"B", code.B},
           {"exact_bound", rat_json(be)},
           {"functional_bound", rat_json(bf)},
           {"meets_exact_bound", Rat(code.B) == be},
           {"verification", verification_to_json(rep)}};
    if (!lift_code_out.empty()) save_code_file(lift_code_out, code);
    emit(j.dump(2) + "\n", out_path);
    if (!rep.ok()) exit_code = 1;
  });

  // ---- figure ----
  auto* cmd_fig = app.add_subcommand("figure", "emit the dataset behind one of the figures");
  std::string fig_which, fig_dir = ".";
  int fig_trials = 200, fig_grid = 33;
  uint64_t fig_seed = 0;
  bool fig_seed_set = false;
  cmd_fig->add_option("which", fig_which, "2a, 2b or 2c")
      ->required()
      ->check(CLI::IsMember({"2a", "2b", "2c"}));
  cmd_fig->add_option("--out-dir", fig_dir, "directory for the CSV + sidecar JSON (default .)");
  cmd_fig->add_option("--trials", fig_trials, "2b only: trials per file size (default 200)");
  cmd_fig->add_option("--grid", fig_grid, "2a only: alpha samples per curve (default 33)");
  cmd_fig->add_option("--seed", fig_seed, "2b only: RNG seed (default MRGRC_SEED, else 0)");
  cmd_fig->callback([&] {
    fig_seed_set = cmd_fig->count("--seed") > 0;
    std::string csv_path = fig_dir + "/fig" + fig_which + ".csv";
    std::string json_path = fig_dir + "/fig" + fig_which + ".json";
    json sidecar{{"figure", fig_which}};
    std::string data;
    if (fig_which == "2a") {
      // Both trade-off curves for (5,4,4)(3,0,2). The bounds are homogeneous
      // in (alpha, beta), so the overhead-vs-overhead curve is independent of
      // B; B = 60 keeps the sampled alphas at small rationals.
      SystemParams p = validate(5, 4, 4, 3, 0, 2);
      Rat B(60);
      auto rows = tradeoff_points(p, B, "both", fig_grid, std::nullopt);
      data = tradeoff_csv(rows);
      sidecar["params"] = {{"n", 5}, {"k", 4}, {"d", 4}, {"m", 3}, {"ell", 0}, {"t", 2}};
      sidecar["B"] = 60;
      sidecar["grid"] = fig_grid;
      sidecar["command"] = "tradeoff --n 5 --k 4 --d 4 --m 3 --ell 0 --t 2 --B 60 --grid " +
                           std::to_string(fig_grid);
    } else if (fig_which == "2b") {
      // Success probability of random linear coding around the functional
      // bound B = 10 on (3,2,2)(2,2)(3,0,2) under the worst-case trace.
      SystemParams p = validate(3, 2, 2, 3, 0, 2);
      ResourceProfile r = validate_profile(Rat(2), Rat(2));
      uint64_t seed = fig_seed_set ? fig_seed : default_seed();
      FailureTrace trace = adversarial_trace(p);
      const Field& f = Field::gf65536();
      std::vector<std::vector<std::string>> cells;
      char buf[32];
      for (long long B = 8; B <= 12; ++B) {
        TrialReport rep = monte_carlo(p, r, B, trace, fig_trials, f, seed);
        std::snprintf(buf, sizeof buf, "%.6f", rep.success_rate());
        cells.push_back({std::to_string(B), buf, std::to_string(rep.trials),
                         std::to_string(rep.seed)});
      }
      data = csv({"B", "success_rate", "trials", "seed"}, cells);
      sidecar["params"] = {{"n", 3}, {"k", 2}, {"d", 2}, {"m", 3}, {"ell", 0}, {"t", 2}};
      sidecar["profile"] = {{"alpha", 2}, {"beta", 2}};
      sidecar["field"] = "gf65536";
      sidecar["trials"] = fig_trials;
      sidecar["seed"] = seed;
      sidecar["B_range"] = {8, 12};
      sidecar["trace"] = trace_to_json(trace, adversarial_collectors(p));
    } else {
      // Local-helper profile for (7,4,5) m=17 t=5 at alpha = beta = 1.
      ResourceProfile r = validate_profile(Rat(1), Rat(1));
      EllProfile prof = local_help_profile(7, 4, 5, 17, 5, r);
      data = ell_profile_csv(prof);
      sidecar["params"] = {{"n", 7}, {"k", 4}, {"d", 5}, {"m", 17}, {"t", 5}};
      sidecar["profile"] = {{"alpha", 1}, {"beta", 1}};
      sidecar["plateau_predicate"] = prof.plateau_predicate;
      sidecar["predicted_plateau_max_ell"] = prof.predicted_plateau_max_ell;
      sidecar["evaluated_plateau_max_ell"] = prof.evaluated_plateau_max_ell;
      sidecar["command"] = "ell-profile --n 7 --k 4 --d 5 --m 17 --t 5 --alpha 1 --beta 1";
    }
    atomic_write(csv_path, data);
    atomic_write(json_path, sidecar.dump(2) + "\n");
    std::cout << csv_path << "\n" << json_path << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // --help exits 0; real usage errors exit 2
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::BadInput:
      case Errc::NonPositive:
      case Errc::DOutOfRange:
      case Errc::EllTooLarge:
      case Errc::InvalidTrace:
      case Errc::InvalidEvent:
        return 2;  // malformed flags or input files
      default:
        return 1;  // verification / computation failure
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
