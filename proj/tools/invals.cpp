// Command-line front end: instance generation, solving, plan checking,
// ablation comparison, submodularity audit and oracle benchmarking.
//
// Exit codes: 0 success, 1 validation error or infeasible instance,
// 2 approximate oracle failed to converge, 3 search budget exhausted.

#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "invals/gen.hpp"
#include "invals/global.hpp"
#include "invals/io.hpp"
#include "invals/planner.hpp"

namespace {

using namespace invals;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitNoConverge = 2;
constexpr int kExitBudget = 3;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

GenConfig gen_config_from_json(const Json& doc) {
  GenConfig c;
  auto geti = [&](const char* k, auto& field) {
    if (doc.contains(k)) field = doc[k].template get<std::decay_t<decltype(field)>>();
  };
  geti("num_items", c.num_items);
  geti("num_stores", c.num_stores);
  geti("num_categories", c.num_categories);
  geti("horizon_min", c.horizon_min);
  geti("horizon_max", c.horizon_max);
  geti("demand_rate", c.demand_rate);
  geti("demand_cap", c.demand_cap);
  geti("inventory_slack", c.inventory_slack);
  geti("labour_tightness", c.labour_tightness);
  geti("trailer_max", c.trailer_max);
  geti("trailer_min", c.trailer_min);
  geti("max_trailers", c.max_trailers);
  geti("shelf_slack", c.shelf_slack);
  geti("priority_levels", c.priority_levels);
  geti("alpha_num", c.alpha_num);
  geti("alpha_den", c.alpha_den);
  geti("pf_enabled", c.pf_enabled);
  geti("seed", c.seed);
  if (doc.contains("beta")) c.beta = parse_rational(doc["beta"].get<std::string>());
  if (doc.contains("gamma"))
    c.gamma = parse_rational(doc["gamma"].get<std::string>());
  if (doc.contains("q_mode"))
    c.q_mode = doc["q_mode"] == "constant" ? QMode::constant
                                           : QMode::proportional;
  return c;
}

Instance load_instance_checked(const std::string& path) {
  Instance inst = instance_from_json(load_json(path));
  ValidationReport rep = validate_instance(inst);
  for (const std::string& w : rep.warnings)
    std::cerr << "warning: " << w << '\n';
  if (!rep.ok()) {
    for (const std::string& e : rep.errors) std::cerr << "error: " << e << '\n';
    throw std::invalid_argument("instance failed validation");
  }
  return inst;
}

// Ablation rewrites: A disables pull-forward, A/B/C force q constant, A/B
// zero the breach price. The D row uses the instance as given.
Instance rewrite_for_config(const Instance& base, const std::string& cfg) {
  Instance inst = base;
  if (cfg == "A") {
    for (int c = 0; c < base.num_items() * base.num_stores(); ++c) {
      inst.horizon[c] = 0;
      inst.demand[c].resize(1);
      inst.item_store_priority[c].resize(1);
    }
  }
  for (auto& qs : inst.item_store_priority)
    for (Rat& q : qs) q = 1;
  if (cfg == "A" || cfg == "B") inst.gamma = 0;
  return inst;
}

struct RunRow {
  std::string config, solver;
  PlanMetrics metrics;
  Rat objective;
  double wall = 0;
  long long oracle_calls = 0;
};

RunRow run_config(const Instance& base, const std::string& cfg,
                  std::uint64_t seed, double rho, double mu) {
  RunRow row;
  row.config = cfg;
  auto t0 = std::chrono::steady_clock::now();
  if (cfg == "Da") {
    row.solver = "bnb";
    GlobalResult g = solve_global(base);
    row.metrics = compute_metrics(base, g.x, g.plan);
    row.objective = g.objective;
  } else {
    Instance inst = (cfg == "Db" || cfg == "Dc" || cfg == "Dd")
                        ? base
                        : rewrite_for_config(base, cfg);
    PlannerConfig pc;
    pc.rho = rho;
    pc.seed = seed;
    pc.drm.mu = mu;
    if (cfg == "Dc") pc.variant = CotVariant::probe;
    if (cfg == "Dd") {
      pc.oracle = OracleKind::drm;
      pc.variant = CotVariant::probe;
    }
    row.solver = cfg == "Dd" ? "greedy-drm" : "greedy-exact";
    FullSolveResult res = full_solve(inst, pc);
    row.metrics = res.metrics;
    row.objective = res.plan.objective;
    row.oracle_calls = res.oracle_calls;
  }
  row.wall = seconds_since(t0);
  return row;
}

int cmd_gen(const std::string& preset_name, const std::string& config_path,
            std::uint64_t seed, const std::string& out) {
  GenConfig cfg = config_path.empty() ? preset(preset_name)
                                      : gen_config_from_json(load_json(config_path));
  cfg.seed = seed;
  Instance inst = generate(cfg);
  ValidationReport rep = validate_instance(inst);
  if (!rep.ok()) {
    for (const std::string& e : rep.errors) std::cerr << "error: " << e << '\n';
    return kExitInvalid;
  }
  save_json(instance_to_json(inst), out);
  std::cout << "wrote " << out << " digest " << instance_digest(inst) << '\n';
  return kExitOk;
}

int cmd_solve(const std::string& path, const std::string& solver, double rho,
              double mu, std::uint64_t seed, bool lazy, bool parallel,
              const std::string& variant, const std::string& out,
              const std::string& dump_cot) {
  Instance inst = load_instance_checked(path);
  TrailerAssignment x;
  AllocationPlan plan;
  long long oracle_calls = 0;
  bool converged = true;
  bool optimal = true;
  if (solver == "bnb") {
    GlobalResult g = solve_global(inst);
    x = g.x;
    plan = g.plan;
    optimal = g.optimal;
    oracle_calls = g.nodes;
  } else {
    PlannerConfig pc;
    pc.rho = rho;
    pc.seed = seed;
    pc.lazy = lazy;
    pc.parallel_candidates = parallel;
    pc.drm.mu = mu;
    pc.oracle = solver == "greedy-drm" ? OracleKind::drm : OracleKind::exact;
    if (variant == "probe" || pc.oracle == OracleKind::drm)
      pc.variant = CotVariant::probe;
    FullSolveResult res = full_solve(inst, pc);
    x = res.x;
    plan = res.plan;
    oracle_calls = res.oracle_calls;
    converged = res.drm_all_converged;
  }
  // Self-check gate: never write a plan that fails its own feasibility audit.
  std::vector<std::string> violations = check_feasibility(inst, x, plan);
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << "error: " << v << '\n';
    std::cerr << "error: solver produced an infeasible plan; nothing written\n";
    return kExitInvalid;
  }
  save_json(plan_to_json(inst, x, plan), out);
  if (!dump_cot.empty() && !x.all_zero()) {
    Instance trimmed = trim_shelf_capacity(inst);
    save_json(cot_to_json(build_cot(trimmed, x, CotVariant::final_)), dump_cot);
  }
  std::cout << "objective " << format_rational(plan.objective) << " trailers "
            << x.total() << " oracle_calls " << oracle_calls << '\n';
  if (!converged) return kExitNoConverge;
  if (!optimal) return kExitBudget;
  return kExitOk;
}

int cmd_check(const std::string& inst_path, const std::string& plan_path) {
  Instance inst = load_instance_checked(inst_path);
  auto [x, plan] = plan_from_json(inst, load_json(plan_path));
  std::vector<std::string> violations = check_feasibility(inst, x, plan);
  for (const std::string& v : violations) std::cout << v << '\n';
  Rat obj = evaluate_objective(inst, x, plan);
  std::cout << "objective " << format_rational(obj);
  if (plan.objective != obj)
    std::cout << " (file says " << format_rational(plan.objective) << ")";
  std::cout << '\n';
  return violations.empty() ? kExitOk : kExitInvalid;
}

int cmd_compare(const std::string& path, const std::string& configs,
                std::uint64_t seed, double rho, double mu) {
  Instance base = load_instance_checked(path);
  std::string digest = instance_digest(base);
  std::vector<std::string> names;
  for (std::size_t p = 0; p < configs.size();) {
    std::size_t q = configs.find(',', p);
    if (q == std::string::npos) q = configs.size();
    names.push_back(configs.substr(p, q - p));
    p = q + 1;
  }
  std::vector<RunRow> rows;
  for (const std::string& name : names) {
    if (name != "A" && name != "B" && name != "C" && name != "Da" &&
        name != "Db" && name != "Dc" && name != "Dd") {
      std::cerr << "error: unknown config " << name << '\n';
      return kExitInvalid;
    }
    rows.push_back(run_config(base, name, seed, rho, mu));
  }
  // Normalize allocation / trailer counts against the exact baseline.
  long long base_alloc = 0, base_trailers = 0;
  for (const char* pick : {"Da", "Db"}) {
    if (base_alloc) break;
    for (const RunRow& r : rows)
      if (r.config == pick) {
        base_alloc = r.metrics.total_allocation;
        base_trailers = r.metrics.trailer_count;
      }
  }
  std::cout << "config,solver,seed,digest,labour_util,trailer_util,"
               "alloc_norm,trailers_norm,mean_pf_dos,breach_total,objective,"
               "wall_s,oracle_calls\n";
  for (const RunRow& r : rows) {
    double lu = 0;
    for (double v : r.metrics.labour_utilization) lu = std::max(lu, v);
    std::cout << r.config << ',' << r.solver << ',' << seed << ',' << digest
              << ',' << lu << ',' << r.metrics.trailer_utilization << ',';
    if (base_alloc)
      std::cout << static_cast<double>(r.metrics.total_allocation) / base_alloc;
    std::cout << ',';
    if (base_trailers)
      std::cout << static_cast<double>(r.metrics.trailer_count) / base_trailers;
    std::cout << ',';
    if (r.metrics.mean_pf_dos) std::cout << *r.metrics.mean_pf_dos;
    std::cout << ',' << r.metrics.breach_total << ','
              << format_rational(r.objective) << ',' << r.wall << ','
              << r.oracle_calls << '\n';
  }
  return kExitOk;
}

int cmd_audit(const std::string& path, int triplets, std::uint64_t seed) {
  Instance inst = load_instance_checked(path);
  SubmodularityAudit audit = audit_submodularity(inst, triplets, seed);
  std::cout << "triplets " << audit.differences.size() << " min_difference "
            << format_rational(audit.min_difference) << '\n';
  return audit.min_difference >= 0 ? kExitOk : kExitInvalid;
}

int cmd_bench(const std::string& sizes, std::uint64_t seed, double mu,
              int calls) {
  std::cout << "items,stores,calls,exact_ms,drm_ms,ratio\n";
  for (std::size_t p = 0; p < sizes.size();) {
    std::size_t q = sizes.find(',', p);
    if (q == std::string::npos) q = sizes.size();
    std::string tok = sizes.substr(p, q - p);
    p = q + 1;
    std::size_t xpos = tok.find('x');
    if (xpos == std::string::npos) {
      std::cerr << "error: size must look like 100x20, got " << tok << '\n';
      return kExitInvalid;
    }
    GenConfig cfg = preset("expD");
    cfg.num_items = std::stoi(tok.substr(0, xpos));
    cfg.num_stores = std::stoi(tok.substr(xpos + 1));
    cfg.trailer_max = std::max<long long>(4, 6LL * cfg.num_items / 10);
    cfg.trailer_min = cfg.trailer_max * 3 / 5;
    cfg.seed = seed;
    Instance inst = trim_shelf_capacity(generate(cfg));
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    double exact_ms = 0, drm_ms = 0;
    DrmParams dp;
    dp.mu = mu;
    for (int c = 0; c < calls; ++c) {
      TrailerAssignment x;
      x.x.resize(inst.num_stores());
      do {
        for (int j = 0; j < inst.num_stores(); ++j)
          x.x[j] = static_cast<long long>(rng() % (inst.max_trailers[j] + 1));
      } while (x.all_zero());
      auto t0 = std::chrono::steady_clock::now();
      value_oracle_exact(inst, x, CotVariant::probe);
      exact_ms += 1000 * seconds_since(t0);
      t0 = std::chrono::steady_clock::now();
      value_oracle_drm(inst, x, CotVariant::probe, dp);
      drm_ms += 1000 * seconds_since(t0);
    }
    std::cout << cfg.num_items << ',' << cfg.num_stores << ',' << calls << ','
              << exact_ms / calls << ',' << drm_ms / calls << ','
              << (exact_ms > 0 ? drm_ms / exact_ms : 0.0) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inventory allocation solver"};
  app.require_subcommand(1);

  std::string preset_name = "small-corpus", config_path, out = "instance.json";
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic instance");
  gen->add_option("--preset", preset_name, "expA|expB|expC|expD|small-corpus|medium-bench");
  gen->add_option("--config", config_path, "generator config JSON (overrides preset)");
  gen->add_option("--seed", seed);
  gen->add_option("-o,--out", out, "output instance file");

  std::string inst_path, solver = "greedy-exact", variant = "final",
              plan_out = "plan.json", dump_cot;
  double rho = 1.0, mu = 1.0;
  bool lazy = false, parallel = false;
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("instance", inst_path)->required();
  solve->add_option("--solver", solver)
      ->check(CLI::IsMember({"greedy-exact", "greedy-drm", "bnb"}));
  solve->add_option("--rho", rho, "store sampling probability");
  solve->add_option("--mu", mu, "entropic regularization weight");
  solve->add_option("--seed", seed);
  solve->add_flag("--lazy", lazy, "lazy (stale-gain) candidate evaluation");
  solve->add_flag("--parallel", parallel, "evaluate candidates in parallel");
  solve->add_option("--variant", variant)->check(CLI::IsMember({"probe", "final"}));
  solve->add_option("-o,--out", plan_out, "output plan file");
  solve->add_option("--dump-cot", dump_cot, "dump the final transport instance");

  std::string plan_path;
  auto* check = app.add_subcommand("check", "Check a plan against an instance");
  check->add_option("instance", inst_path)->required();
  check->add_option("plan", plan_path)->required();

  std::string configs = "Da,Db,Dc,Dd";
  auto* compare = app.add_subcommand("compare", "Run ablation configurations");
  compare->add_option("instance", inst_path)->required();
  compare->add_option("--configs", configs, "subset of A,B,C,Da,Db,Dc,Dd");
  compare->add_option("--seed", seed);
  compare->add_option("--rho", rho);
  compare->add_option("--mu", mu);

  int triplets = 30;
  auto* audit = app.add_subcommand("audit-submodularity",
                                   "Sample nested incremental-gain triplets");
  audit->add_option("instance", inst_path)->required();
  audit->add_option("--triplets", triplets);
  audit->add_option("--seed", seed);

  std::string sizes = "50x10";
  int calls = 5;
  auto* bench = app.add_subcommand("bench", "Time exact vs approximate oracle");
  bench->add_option("--sizes", sizes, "comma list of ITEMSxSTORES");
  bench->add_option("--seed", seed);
  bench->add_option("--mu", mu);
  bench->add_option("--calls", calls, "oracle calls per size");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(preset_name, config_path, seed, out);
    if (*solve)
      return cmd_solve(inst_path, solver, rho, mu, seed, lazy, parallel,
                       variant, plan_out, dump_cot);
    if (*check) return cmd_check(inst_path, plan_path);
    if (*compare) return cmd_compare(inst_path, configs, seed, rho, mu);
    if (*audit) return cmd_audit(inst_path, triplets, seed);
    if (*bench) return cmd_bench(sizes, seed, mu, calls);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}
