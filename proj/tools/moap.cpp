#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "moap/bench.hpp"
#include "moap/bnb.hpp"
#include "moap/conflict.hpp"
#include "moap/generators.hpp"
#include "moap/io.hpp"
#include "moap/model.hpp"
#include "moap/runner.hpp"
#include "moap/transforms.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitPartial = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

moap::Instance load_or_exit(const std::string& path) {
  moap::ParseResult parsed = moap::read_instance(path);
  if (!parsed.ok()) {
    std::cerr << path << ": invalid instance\n";
    for (const auto& issue : parsed.issues) std::cerr << "  " << issue.message << "\n";
    std::exit(kExitValidation);
  }
  return std::move(*parsed.instance);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mobility offer allocation toolkit"};
  app.require_subcommand(1);

  // ---- validate ----
  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check an instance file");
  validate->add_option("instance", validate_path)->required();

  // ---- generate ----
  auto* generate = app.add_subcommand("generate", "Create benchmark instances");
  generate->require_subcommand(1);

  int ag_demands = 200;
  double ag_pu = 20, ag_pa = 0.6, ag_pl = 0.02;
  std::uint64_t ag_seed = 0;
  std::string ag_out = "ag.json";
  auto* gen_ag = generate->add_subcommand("ag", "Artificial mixed-fleet family");
  gen_ag->add_option("--demands", ag_demands, "number of demands");
  gen_ag->add_option("--pu", ag_pu, "fleet utilization (percent or fraction)");
  gen_ag->add_option("--pa", ag_pa, "vehicle acceptance probability");
  gen_ag->add_option("--pl", ag_pl, "long demand probability");
  gen_ag->add_option("--seed", ag_seed);
  gen_ag->add_option("-o,--output", ag_out);

  int rw_employees = 500;
  double rw_nu = 0.05;
  std::uint64_t rw_seed = 0;
  std::string rw_out = "rw.json";
  auto* gen_rw = generate->add_subcommand("rw", "Company-week family with vehicle classes");
  gen_rw->add_option("--employees", rw_employees);
  gen_rw->add_option("--nu", rw_nu, "fleet fraction per limited mode");
  gen_rw->add_option("--seed", rw_seed);
  gen_rw->add_option("-o,--output", rw_out);

  std::string isma_in, isma_out = "isma.json";
  auto* gen_isma = generate->add_subcommand("isma", "Reduce an interval-scheduling instance");
  gen_isma->add_option("input", isma_in, "text file: 'machine a b' / 'job s f' lines")->required();
  gen_isma->add_option("-o,--output", isma_out);

  // ---- solve ----
  std::string solve_path, solve_method = "bnb", solve_criterion = "maxmincost";
  std::string solve_formulation = "clique", solve_out, solve_lp, solve_mps, solve_trace, solve_config;
  double solve_time_limit = -1;
  std::int64_t solve_iterations = -1, solve_nodes = -1;
  std::uint64_t solve_seed = 0;
  bool solve_no_warm = false;
  auto* solve = app.add_subcommand("solve", "Run a solver on an instance");
  solve->add_option("instance", solve_path)->required();
  solve->add_option("--method", solve_method,
                    "bnb|bnb-classes|greedy|g1mw|alns|lns-random|lns-time|lns-conflict");
  solve->add_option("--criterion", solve_criterion, "greedy demand ordering");
  solve->add_option("--formulation", solve_formulation, "clique|edge");
  solve->add_option("--time-limit", solve_time_limit, "seconds");
  solve->add_option("--iterations", solve_iterations, "(A)LNS iteration budget (deterministic mode)");
  solve->add_option("--node-limit", solve_nodes, "branch-and-bound node cap");
  solve->add_option("--seed", solve_seed);
  solve->add_option("--config", solve_config, "JSON file overriding ALNS parameters");
  solve->add_option("-o,--output", solve_out, "solution file");
  solve->add_option("--export-lp", solve_lp, "write the model in LP format");
  solve->add_option("--export-mps", solve_mps, "write the model in MPS format");
  solve->add_option("--trace", solve_trace, "ALNS convergence CSV");
  solve->add_flag("--no-warm-start", solve_no_warm, "disable the greedy warm start for bnb");

  // ---- graph ----
  std::string graph_path, graph_offers_dot, graph_demands_dot;
  auto* graph_cmd = app.add_subcommand("graph", "Dump conflict graphs");
  graph_cmd->add_option("instance", graph_path)->required();
  graph_cmd->add_option("--offers-dot", graph_offers_dot, "offer conflict graph in DOT format");
  graph_cmd->add_option("--demands-dot", graph_demands_dot, "demand conflict graph in DOT format");

  // ---- transform ----
  std::string tr_path, tr_out, tr_kind = "collapse";
  auto* transform = app.add_subcommand("transform", "Convert between plain and class models");
  transform->add_option("instance", tr_path)->required();
  transform->add_option("--kind", tr_kind, "collapse|expand|singleton");
  transform->add_option("-o,--output", tr_out)->required();

  // ---- bench ----
  auto* bench = app.add_subcommand("bench", "Experiment harness");
  bench->require_subcommand(1);
  std::string bench_spec;
  auto* bench_run = bench->add_subcommand("run", "Execute an experiment spec");
  bench_run->add_option("spec", bench_spec, "experiment JSON")->required();
  std::string agg_csv, agg_group = "method", agg_out;
  auto* bench_agg = bench->add_subcommand("aggregate", "Summarize a results CSV");
  bench_agg->add_option("results", agg_csv)->required();
  bench_agg->add_option("--group-by", agg_group, "column or metadata key");
  bench_agg->add_option("-o,--output", agg_out, "write the aggregate CSV here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      moap::ParseResult parsed = moap::read_instance(validate_path);
      if (!parsed.ok()) {
        for (const auto& issue : parsed.issues) std::cerr << issue.message << "\n";
        return kExitValidation;
      }
      const auto& inst = *parsed.instance;
      std::cout << "ok: " << inst.num_demands() << " demands, " << inst.num_offers()
                << " offers, " << inst.vehicles.size() << " vehicles";
      if (inst.has_classes()) std::cout << ", " << inst.classes.size() << " classes";
      std::cout << "\n";
      return kExitOk;
    }

    if (*gen_ag) {
      moap::AgParams p;
      p.num_demands = ag_demands;
      p.fleet_utilization = ag_pu > 1 ? ag_pu / 100.0 : ag_pu;
      p.vehicle_acceptance = ag_pa;
      p.long_demand_prob = ag_pl;
      p.seed = ag_seed;
      moap::write_instance_file(moap::generate_ag(p), ag_out);
      std::cout << ag_out << "\n";
      return kExitOk;
    }
    if (*gen_rw) {
      moap::RwParams p;
      p.employees = rw_employees;
      p.nu = rw_nu;
      p.seed = rw_seed;
      moap::write_instance_file(moap::generate_rw(p), rw_out);
      std::cout << rw_out << "\n";
      return kExitOk;
    }
    if (*gen_isma) {
      const moap::IsmaInstance isma = moap::parse_isma(slurp(isma_in));
      moap::write_instance_file(moap::reduce_isma_to_moap(isma), isma_out);
      std::cout << isma_out << "\n";
      return kExitOk;
    }

    if (*solve) {
      const moap::Instance instance = load_or_exit(solve_path);

      if (!solve_lp.empty() || !solve_mps.empty()) {
        const bool classes = instance.has_class_offers();
        const moap::OfferConflictGraph g = moap::build_offer_conflict_graph(instance);
        const moap::IlpModel model = moap::build_model(
            instance, g,
            solve_formulation == "edge" ? moap::Formulation::Edge : moap::Formulation::Clique,
            classes);
        if (!solve_lp.empty()) spit(solve_lp, moap::export_lp(model));
        if (!solve_mps.empty()) spit(solve_mps, moap::export_mps(model));
      }

      moap::SolverSpec spec;
      spec.method = solve_method;
      spec.name = solve_method;
      spec.criterion = moap::sort_criterion_from_string(solve_criterion);
      spec.formulation =
          solve_formulation == "edge" ? moap::Formulation::Edge : moap::Formulation::Clique;
      spec.time_limit_s = solve_time_limit;
      spec.iterations = solve_iterations;
      spec.node_limit = solve_nodes;
      spec.seed = solve_seed;
      spec.warm_start = !solve_no_warm;
      if (!solve_config.empty()) spec.alns_config_json = slurp(solve_config);

      const moap::RunOutput out = moap::run_solver(instance, spec);
      if (!out.error.empty()) {
        std::cerr << "error: " << out.error << "\n";
        return kExitPartial;
      }

      moap::SolutionInfo info;
      info.solver = spec.name;
      // Deterministic runs write runtime 0 so re-runs are byte-identical.
      info.runtime_ms = out.deterministic ? 0 : out.runtime_ms;
      info.seed = solve_seed;
      info.has_seed = true;
      const std::string text = moap::write_solution(instance, out.solution, info);
      if (solve_out.empty())
        std::cout << text;
      else
        spit(solve_out, text);

      if (!solve_trace.empty() && !out.trace.empty()) {
        std::ostringstream tf;
        tf << "elapsed_s,best_cost\n";
        for (const auto& [t, c] : out.trace) tf << t << "," << c << "\n";
        spit(solve_trace, tf.str());
      }

      std::cerr << (out.solution.feasible ? "feasible" : "infeasible") << " objective "
                << out.solution.objective;
      if (out.optimal) std::cerr << " (optimal)";
      if (out.infeasible) std::cerr << " (proven infeasible)";
      if (out.nodes >= 0) std::cerr << ", " << out.nodes << " nodes";
      std::cerr << ", " << out.runtime_ms << " ms\n";
      return out.solution.feasible || out.infeasible ? kExitOk : kExitPartial;
    }

    if (*graph_cmd) {
      const moap::Instance instance = load_or_exit(graph_path);
      const moap::OfferConflictGraph g = moap::build_offer_conflict_graph(instance);
      if (!graph_offers_dot.empty()) spit(graph_offers_dot, moap::offer_graph_dot(instance, g));
      if (!graph_demands_dot.empty()) {
        const moap::DemandConflictGraph dg = moap::build_demand_conflict_graph(instance, g);
        spit(graph_demands_dot, moap::demand_graph_dot(instance, dg));
      }
      std::cout << instance.num_offers() << " offers, " << g.resource_edge_count
                << " vehicle edges, " << g.total_clique_count() << " cliques\n";
      return kExitOk;
    }

    if (*transform) {
      const moap::Instance instance = load_or_exit(tr_path);
      moap::Instance out;
      if (tr_kind == "collapse") out = moap::collapse_classes(instance).instance;
      else if (tr_kind == "expand") out = moap::expand_classes(instance);
      else if (tr_kind == "singleton") out = moap::to_singleton_classes(instance);
      else throw std::invalid_argument("unknown transform kind: " + tr_kind);
      moap::write_instance_file(out, tr_out);
      std::cout << tr_out << "\n";
      return kExitOk;
    }

    if (*bench_run) {
      const moap::ExperimentSpec spec = moap::load_experiment_spec(bench_spec);
      const moap::ExperimentResult result = moap::run_experiment(spec);
      std::cout << result.csv_path << " (" << result.rows.size() << " rows";
      if (result.failures) std::cout << ", " << result.failures << " failures";
      std::cout << ")\n";
      return result.failures ? kExitPartial : kExitOk;
    }
    if (*bench_agg) {
      const auto rows = moap::results_from_csv(slurp(agg_csv));
      const auto agg = moap::aggregate(rows, agg_group);
      std::cout << moap::aggregate_to_table(agg, agg_group);
      if (!agg_out.empty()) spit(agg_out, moap::aggregate_to_csv(agg, agg_group));
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
