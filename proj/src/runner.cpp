#include "moap/runner.hpp"

#include <chrono>
#include <stdexcept>

#include <json.hpp>

#include "moap/bnb.hpp"
#include "moap/coloring.hpp"
#include "moap/conflict.hpp"
#include "moap/greedy.hpp"
#include "moap/transforms.hpp"

namespace moap {

using nlohmann::json;

namespace {

AlnsConfig preset_for(const std::string& method) {
  if (method == "lns-random") return lns_random_preset();
  if (method == "lns-time") return lns_time_interval_preset();
  if (method == "lns-conflict") return lns_conflict_preset();
  return alns_default();
}

// Cheapest feasible construction over all orderings; used to warm-start
// the branch and bound.
Solution best_greedy(const Instance& instance, const OfferConflictGraph& graph) {
  Solution best;
  for (SortCriterion crit :
       {SortCriterion::MinMinCost, SortCriterion::MaxMinCost, SortCriterion::MinMinCostPerTime,
        SortCriterion::MaxMinCostPerTime, SortCriterion::MinAveCost, SortCriterion::MaxAveCost}) {
    const GreedyResult res = greedy_select(instance, graph, order_demands(instance, crit));
    if (res.solution.feasible && (!best.feasible || res.solution.objective < best.objective))
      best = res.solution;
  }
  const GreedyResult mw = greedy_g1mw(instance, graph);
  if (mw.solution.feasible && (!best.feasible || mw.solution.objective < best.objective))
    best = mw.solution;
  return best;
}

RunOutput run_on_plain(const Instance& instance, const SolverSpec& spec) {
  RunOutput out;
  const OfferConflictGraph graph = build_offer_conflict_graph(instance);

  if (spec.method == "greedy") {
    const auto order = order_demands(instance, spec.criterion, spec.seed);
    const GreedyResult res = greedy_select(instance, graph, order);
    out.solution = res.solution;
    out.solved = res.solution.feasible;
    out.deterministic = true;
    return out;
  }
  if (spec.method == "g1mw") {
    const GreedyResult res = greedy_g1mw(instance, graph);
    out.solution = res.solution;
    out.solved = res.solution.feasible;
    out.deterministic = true;
    return out;
  }

  if (spec.method == "bnb") {
    const IlpModel model = build_model(instance, graph, spec.formulation, false);
    BranchAndBoundConfig cfg;
    cfg.time_limit_s = spec.time_limit_s;
    cfg.node_limit = spec.node_limit;
    Solution warm;
    if (spec.warm_start) {
      warm = best_greedy(instance, graph);
      if (warm.feasible) cfg.warm_start = &warm;
    }
    const BnbResult res = solve_bnb(model, cfg);
    if (res.solution) out.solution = *res.solution;
    out.solved = res.solution.has_value();
    out.optimal = res.optimal;
    out.infeasible = res.infeasible;
    out.bound = res.bound;
    out.nodes = res.nodes;
    out.deterministic = res.optimal;  // limit-truncated runs depend on wall time
    return out;
  }

  if (spec.method == "alns" || spec.method == "lns-random" || spec.method == "lns-time" ||
      spec.method == "lns-conflict") {
    AlnsConfig cfg = preset_for(spec.method);
    cfg.seed = spec.seed;
    cfg.time_limit_s = spec.time_limit_s;
    cfg.iteration_limit = spec.iterations;
    if (spec.node_limit >= 0) cfg.exact_repair_node_cap = spec.node_limit;
    if (!spec.alns_config_json.empty()) cfg = alns_config_from_json(spec.alns_config_json, cfg);
    const DemandConflictGraph demand_graph = build_demand_conflict_graph(instance, graph);
    const AlnsResult res = run_alns(instance, graph, demand_graph, cfg);
    out.solution = res.best;
    out.solved = res.initial_feasible && res.best.feasible;
    out.trace = res.trace;
    out.deterministic = cfg.iteration_limit >= 0;
    return out;
  }

  throw std::invalid_argument("unknown method: " + spec.method);
}

}  // namespace

RunOutput run_solver(const Instance& instance, const SolverSpec& spec_in) {
  SolverSpec spec = spec_in;
  if (spec.time_limit_s < 0) spec.time_limit_s = 300;
  RunOutput out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (spec.method == "bnb-classes") {
      // Solve the class model, then recover concrete vehicles by interval
      // coloring; on plain instances with a class map, collapse first and
      // lift the result back.
      BranchAndBoundConfig cfg;
      cfg.time_limit_s = spec.time_limit_s;
      cfg.node_limit = spec.node_limit;
      if (!instance.has_classes())
        throw std::invalid_argument("bnb-classes needs a vehicle class map");
      if (instance.has_class_offers()) {
        const OfferConflictGraph graph = build_offer_conflict_graph(instance);
        const IlpModel model = build_model(instance, graph, spec.formulation, true);
        const BnbResult res = solve_bnb(model, cfg);
        if (res.solution) out.solution = assign_vehicles(instance, *res.solution);
        out.solved = res.solution.has_value();
        out.optimal = res.optimal;
        out.infeasible = res.infeasible;
        out.bound = res.bound;
        out.nodes = res.nodes;
        out.deterministic = res.optimal;
      } else {
        const CollapsedInstance collapsed = collapse_classes(instance);
        const OfferConflictGraph graph = build_offer_conflict_graph(collapsed.instance);
        const IlpModel model = build_model(collapsed.instance, graph, spec.formulation, true);
        const BnbResult res = solve_bnb(model, cfg);
        if (res.solution) {
          const Solution assigned = assign_vehicles(collapsed.instance, *res.solution);
          out.solution = lift_collapsed_solution(instance, collapsed, assigned);
        }
        out.solved = res.solution.has_value();
        out.optimal = res.optimal;
        out.infeasible = res.infeasible;
        out.bound = res.bound;
        out.nodes = res.nodes;
        out.deterministic = res.optimal;
      }
    } else if (instance.has_class_offers()) {
      // Heuristics and the plain model operate on per-vehicle offers.
      const Instance expanded = expand_classes(instance);
      RunOutput inner = run_solver(expanded, spec);
      out = inner;
      if (inner.solved) {
        // Map the expanded selection back: expanded offer "<id>@<vehicle>"
        // selects the class offer <id> with that vehicle assigned.
        Solution lifted;
        lifted.selection.assign(static_cast<std::size_t>(instance.num_demands()), -1);
        lifted.assigned_vehicle.assign(static_cast<std::size_t>(instance.num_offers()), -1);
        for (int d = 0; d < expanded.num_demands(); ++d) {
          const int o = inner.solution.selection[static_cast<std::size_t>(d)];
          if (o < 0) continue;
          const std::string& full = expanded.offers[static_cast<std::size_t>(o)].id;
          const auto at = full.rfind('@');
          const int pd = instance.demand_index.at(expanded.demands[static_cast<std::size_t>(d)].id);
          if (at == std::string::npos) {
            lifted.selection[static_cast<std::size_t>(pd)] = instance.offer_index.at(full);
          } else {
            const int po = instance.offer_index.at(full.substr(0, at));
            lifted.selection[static_cast<std::size_t>(pd)] = po;
            lifted.assigned_vehicle[static_cast<std::size_t>(po)] =
                instance.vehicle_index.at(full.substr(at + 1));
          }
        }
        const Evaluation ev = evaluate(instance, lifted.selection, &lifted.assigned_vehicle);
        lifted.objective = ev.objective;
        lifted.feasible = ev.feasible;
        out.solution = std::move(lifted);
      }
    } else {
      out = run_on_plain(instance, spec);
    }
  } catch (const std::exception& e) {
    out.error = e.what();
    out.solved = false;
  }
  out.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return out;
}

AlnsConfig alns_config_from_json(const std::string& json_text, AlnsConfig base) {
  const json j = json::parse(json_text);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const json& v = it.value();
    if (key == "sigma1") base.sigma1 = v.get<double>();
    else if (key == "sigma2") base.sigma2 = v.get<double>();
    else if (key == "sigma3") base.sigma3 = v.get<double>();
    else if (key == "lambda") base.lambda = v.get<double>();
    else if (key == "w") base.w = v.get<double>();
    else if (key == "p_w") base.p_w = v.get<double>();
    else if (key == "cooling") base.cooling = v.get<double>();
    else if (key == "r_rep") base.r_rep = v.get<double>();
    else if (key == "r_des") {
      base.r_des.clear();
      if (v.is_array())
        for (const auto& x : v) base.r_des.push_back(x.get<double>());
      else
        base.r_des.assign(base.destroys.size(), v.get<double>());
    } else if (key == "repair_criterion")
      base.repair_criterion = sort_criterion_from_string(v.get<std::string>());
    else if (key == "time_limit_s") base.time_limit_s = v.get<double>();
    else if (key == "iterations") base.iteration_limit = v.get<std::int64_t>();
    else if (key == "seed") base.seed = v.get<std::uint64_t>();
    else if (key == "exact_repair_node_cap") base.exact_repair_node_cap = v.get<std::int64_t>();
    else if (key == "trace_interval_s") base.trace_interval_s = v.get<double>();
    else if (key == "target_cost") base.target_cost = v.get<double>();
    else if (key == "destroys") {
      base.destroys.clear();
      for (const auto& x : v) {
        const std::string s = x.get<std::string>();
        if (s == "random") base.destroys.push_back(DestroyOp::Random);
        else if (s == "time") base.destroys.push_back(DestroyOp::TimeInterval);
        else if (s == "conflict") base.destroys.push_back(DestroyOp::ConflictGraph);
        else throw std::invalid_argument("unknown destroy operator: " + s);
      }
      if (base.r_des.size() != base.destroys.size()) base.r_des.assign(base.destroys.size(), 0.15);
    } else if (key == "repairs") {
      base.repairs.clear();
      for (const auto& x : v) {
        const std::string s = x.get<std::string>();
        if (s == "greedy") base.repairs.push_back(RepairOp::Greedy);
        else if (s == "exact") base.repairs.push_back(RepairOp::Exact);
        else throw std::invalid_argument("unknown repair operator: " + s);
      }
    } else {
      throw std::invalid_argument("unknown ALNS config key: " + key);
    }
  }
  return base;
}

SolverSpec solver_spec_from_json(const std::string& json_text) {
  const json j = json::parse(json_text);
  SolverSpec spec;
  spec.method = j.at("method").get<std::string>();
  spec.name = j.contains("name") ? j["name"].get<std::string>() : spec.method;
  if (j.contains("criterion"))
    spec.criterion = sort_criterion_from_string(j["criterion"].get<std::string>());
  if (j.contains("formulation")) {
    const std::string f = j["formulation"].get<std::string>();
    if (f == "clique") spec.formulation = Formulation::Clique;
    else if (f == "edge") spec.formulation = Formulation::Edge;
    else throw std::invalid_argument("unknown formulation: " + f);
  }
  if (j.contains("time_limit_s")) spec.time_limit_s = j["time_limit_s"].get<double>();
  if (j.contains("iterations")) spec.iterations = j["iterations"].get<std::int64_t>();
  if (j.contains("node_limit")) spec.node_limit = j["node_limit"].get<std::int64_t>();
  if (j.contains("warm_start")) spec.warm_start = j["warm_start"].get<bool>();
  if (j.contains("config")) spec.alns_config_json = j["config"].dump();
  return spec;
}

}  // namespace moap
