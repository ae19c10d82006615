#include "moap/alns.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "moap/bnb.hpp"

namespace moap {

AlnsConfig alns_default() { return {}; }

AlnsConfig lns_random_preset() {
  AlnsConfig cfg;
  cfg.destroys = {DestroyOp::Random};
  cfg.r_des = {0.1580};
  cfg.repairs = {RepairOp::Greedy};
  cfg.r_rep = 0.1308;
  cfg.repair_criterion = SortCriterion::MaxMinCost;
  return cfg;
}

AlnsConfig lns_time_interval_preset() {
  AlnsConfig cfg;
  cfg.destroys = {DestroyOp::TimeInterval};
  cfg.r_des = {0.1053};
  cfg.repairs = {RepairOp::Greedy};
  cfg.r_rep = 0.1063;
  cfg.repair_criterion = SortCriterion::MaxMinCost;
  return cfg;
}

AlnsConfig lns_conflict_preset() {
  AlnsConfig cfg;
  cfg.destroys = {DestroyOp::ConflictGraph};
  cfg.r_des = {0.1836};
  cfg.repairs = {RepairOp::Exact};
  return cfg;
}

namespace {

int ceil_fraction(double r, int n) {
  const auto k = static_cast<int>(std::ceil(r * static_cast<double>(n)));
  return std::min(std::max(k, 0), n);
}

}  // namespace

std::vector<int> destroy_random(const Solution& current, int num_demands, double r_des,
                                Rng& rng) {
  (void)current;
  const int k = ceil_fraction(r_des, num_demands);
  std::vector<int> picked = rng.sample_without_replacement(num_demands, k);
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::vector<int> destroy_time_interval(const Instance& instance, const Solution& current,
                                       double r_des, Rng& rng) {
  Tick horizon_start = std::numeric_limits<Tick>::max();
  Tick horizon_end = std::numeric_limits<Tick>::min();
  for (const auto& o : instance.offers) {
    horizon_start = std::min(horizon_start, o.interval.start);
    horizon_end = std::max(horizon_end, o.interval.end);
  }
  if (instance.offers.empty()) return {};

  const Tick span = horizon_end - horizon_start;
  const Tick window = static_cast<Tick>(std::ceil(static_cast<double>(span) * r_des));
  const Tick t_a = rng.uniform_int(horizon_start, horizon_end);

  // Up to two windows: the tail past the horizon end wraps to its start.
  TimeInterval w1{t_a, std::min(t_a + window, horizon_end)};
  TimeInterval w2{0, 0};
  bool wrapped = false;
  if (t_a + window > horizon_end) {
    wrapped = true;
    w2 = {horizon_start, horizon_start + (t_a + window - horizon_end)};
  }

  std::vector<int> destroyed;
  for (int d = 0; d < instance.num_demands(); ++d) {
    const int o = current.selection[static_cast<std::size_t>(d)];
    if (o < 0) continue;
    const TimeInterval iv = instance.offers[static_cast<std::size_t>(o)].interval;
    if (iv.overlaps(w1) || (wrapped && iv.overlaps(w2))) destroyed.push_back(d);
  }
  return destroyed;
}

std::vector<int> destroy_conflict_bfs(const DemandConflictGraph& graph, int num_demands,
                                      double r_des, Rng& rng) {
  const int quota = ceil_fraction(r_des, num_demands);
  std::vector<std::uint8_t> visited(static_cast<std::size_t>(num_demands), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(quota));
  std::vector<int> frontier;

  while (static_cast<int>(order.size()) < quota) {
    // New start node, uniform over the unvisited.
    std::vector<int> unvisited;
    for (int d = 0; d < num_demands; ++d)
      if (!visited[static_cast<std::size_t>(d)]) unvisited.push_back(d);
    if (unvisited.empty()) break;
    const int start = unvisited[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(unvisited.size()) - 1))];

    frontier.clear();
    frontier.push_back(start);
    visited[static_cast<std::size_t>(start)] = 1;
    std::size_t head = 0;
    while (head < frontier.size() && static_cast<int>(order.size()) < quota) {
      const int d = frontier[head++];
      order.push_back(d);
      for (int n : graph.adjacency[static_cast<std::size_t>(d)]) {  // ascending id
        if (visited[static_cast<std::size_t>(n)]) continue;
        visited[static_cast<std::size_t>(n)] = 1;
        frontier.push_back(n);
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

RepairOutcome repair_greedy_rcl(const Instance& instance, const OfferConflictGraph& graph,
                                std::vector<int> partial, SortCriterion criterion, double r_rep,
                                std::uint64_t seed_for_order, Rng& rng) {
  RepairOutcome out;
  const int nd = instance.num_demands();

  std::vector<int> pending;
  {
    const std::vector<int> order = order_demands(instance, criterion, seed_for_order);
    for (int d : order)
      if (partial[static_cast<std::size_t>(d)] < 0) pending.push_back(d);
  }
  const int rcl = std::max(1, ceil_fraction(r_rep, nd));

  auto blocked = [&](int o) {
    for (int n : graph.resource_adjacency[static_cast<std::size_t>(o)]) {
      ++out.work;
      if (partial[static_cast<std::size_t>(instance.offers[static_cast<std::size_t>(n)].demand)] == n)
        return true;
    }
    return false;
  };

  bool all_assigned = true;
  while (!pending.empty()) {
    const auto limit = std::min<std::size_t>(static_cast<std::size_t>(rcl), pending.size());
    const auto pick = static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(limit) - 1));
    const int d = pending[pick];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));

    int chosen = -1;
    for (int o : instance.demands[static_cast<std::size_t>(d)].offers) {
      ++out.work;
      // offers are id-ordered; pick cheapest with id tie-break
      if (chosen >= 0 &&
          instance.offers[static_cast<std::size_t>(o)].cost >=
              instance.offers[static_cast<std::size_t>(chosen)].cost)
        continue;
      if (!blocked(o)) chosen = o;
    }
    if (chosen < 0) {
      all_assigned = false;
      continue;
    }
    partial[static_cast<std::size_t>(d)] = chosen;
  }

  out.selection = std::move(partial);
  out.complete = all_assigned;
  return out;
}

RepairOutcome repair_exact(const IlpModel& model, std::vector<int> partial,
                           std::int64_t node_cap) {
  BranchAndBoundConfig cfg;
  cfg.node_limit = node_cap;
  cfg.root_ascent_rounds = 0;  // small subproblems; the multipliers cost more than they save
  const BnbResult res = solve_completion(model, partial, cfg);
  RepairOutcome out;
  out.work = static_cast<std::size_t>(res.nodes) + 1;
  if (res.solution) {
    out.selection = res.solution->selection;
    out.complete = true;
  } else {
    out.selection = std::move(partial);
    out.complete = false;
  }
  return out;
}

bool accept_candidate(double candidate_cost, double current_cost, double temperature, Rng& rng) {
  if (candidate_cost <= current_cost) return true;
  const double p = std::exp(-(candidate_cost - current_cost) / temperature);
  return rng.uniform01() < p;
}

double initial_temperature(double initial_cost, double w, double p_w, double cap_factor) {
  if (w <= 0 || p_w <= 0 || p_w >= 1) throw std::invalid_argument("initial_temperature: need w > 0 and 0 < p_w < 1");
  if (initial_cost <= 0) return 1.0;  // degenerate zero-cost start
  const double t = -(w * initial_cost) / std::log(p_w);
  return std::min(t, cap_factor * initial_cost);
}

double updated_weight(double rho, double lambda, double sigma_scaled) {
  return lambda * rho + (1.0 - lambda) * sigma_scaled;
}

std::uint64_t selection_hash(const std::vector<int>& selection) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (std::size_t d = 0; d < selection.size(); ++d) {
    // Demand order is fixed, so hashing (d, o) pairs in index order hashes
    // the sorted pair set.
    h = Rng::mix(h ^ Rng::mix((static_cast<std::uint64_t>(d) << 32) ^
                              static_cast<std::uint64_t>(selection[d] + 1)));
  }
  return h;
}

namespace {

struct Clock {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

double roulette_pick(const std::vector<double>& weights, Rng& rng, std::size_t& index) {
  index = rng.weighted_index(weights);
  return weights[index];
}

}  // namespace

AlnsResult run_alns(const Instance& instance, const OfferConflictGraph& graph,
                    const DemandConflictGraph& demand_graph, const AlnsConfig& cfg,
                    const Solution* initial) {
  if (cfg.destroys.size() != cfg.r_des.size())
    throw std::invalid_argument("run_alns: one r_des per destroy operator required");
  if (cfg.destroys.empty() || cfg.repairs.empty())
    throw std::invalid_argument("run_alns: need at least one destroy and one repair operator");

  const bool deterministic = cfg.iteration_limit >= 0;
  AlnsResult result;
  Clock clock;
  Rng rng = Rng(cfg.seed).fork("alns");

  // Initial solution: greedy MaxMinCost unless one is supplied.
  Solution current;
  if (initial) {
    current = *initial;
  } else {
    const auto order = order_demands(instance, SortCriterion::MaxMinCost);
    current = greedy_select(instance, graph, order).solution;
  }
  result.initial_feasible = current.feasible && current.complete();
  result.initial_cost = current.objective;
  result.best = current;
  if (!result.initial_feasible) return result;

  // The exact repair re-solves the clique model with fixations.
  IlpModel model;
  bool need_model = false;
  for (RepairOp r : cfg.repairs) need_model |= (r == RepairOp::Exact);
  if (need_model) model = build_model(instance, graph, Formulation::Clique, instance.has_class_offers());

  std::vector<double> destroy_weights(cfg.destroys.size(), 1.0);
  std::vector<double> repair_weights(cfg.repairs.size(), 1.0);
  result.destroy_uses.assign(cfg.destroys.size(), 0);
  result.repair_uses.assign(cfg.repairs.size(), 0);

  double temperature = initial_temperature(current.objective, cfg.w, cfg.p_w, cfg.temp_cap_factor);
  std::unordered_set<std::uint64_t> seen;
  seen.insert(selection_hash(current.selection));

  result.trace.emplace_back(0.0, result.best.objective);
  double next_trace = cfg.trace_interval_s;

  auto stopped = [&] {
    if (deterministic) return result.iterations >= cfg.iteration_limit;
    return clock.elapsed() >= cfg.time_limit_s;
  };

  while (!stopped() && result.best.objective > cfg.target_cost) {
    std::size_t di = 0, ri = 0;
    roulette_pick(destroy_weights, rng, di);
    roulette_pick(repair_weights, rng, ri);
    ++result.destroy_uses[di];
    ++result.repair_uses[ri];

    std::vector<int> destroyed;
    switch (cfg.destroys[di]) {
      case DestroyOp::Random:
        destroyed = destroy_random(current, instance.num_demands(), cfg.r_des[di], rng);
        break;
      case DestroyOp::TimeInterval:
        destroyed = destroy_time_interval(instance, current, cfg.r_des[di], rng);
        break;
      case DestroyOp::ConflictGraph:
        destroyed = destroy_conflict_bfs(demand_graph, instance.num_demands(), cfg.r_des[di], rng);
        break;
    }
    std::vector<int> partial = current.selection;
    for (int d : destroyed) partial[static_cast<std::size_t>(d)] = -1;

    const double repair_start = clock.elapsed();
    RepairOutcome repaired;
    switch (cfg.repairs[ri]) {
      case RepairOp::Greedy:
        repaired = repair_greedy_rcl(instance, graph, std::move(partial), cfg.repair_criterion,
                                     cfg.r_rep, cfg.seed, rng);
        break;
      case RepairOp::Exact:
        repaired = repair_exact(model, std::move(partial), cfg.exact_repair_node_cap);
        break;
    }
    // Reward scaling: wall time, or a deterministic work proxy (1us per
    // unit) in iteration mode, so fixed seeds reproduce bit-identically.
    const double repair_seconds = deterministic
                                      ? static_cast<double>(repaired.work) * 1e-6
                                      : clock.elapsed() - repair_start;

    IterationOutcome outcome;
    if (!repaired.complete) {
      outcome = IterationOutcome::Rejected;
    } else {
      double cand_cost = 0;
      for (std::size_t d = 0; d < repaired.selection.size(); ++d)
        cand_cost += instance.offers[static_cast<std::size_t>(repaired.selection[d])].cost;

      const std::uint64_t h = selection_hash(repaired.selection);
      const bool duplicate = !seen.insert(h).second;
      if (duplicate) ++result.duplicates;

      const double best_before = result.best.objective;
      const double current_before = current.objective;
      const bool accepted = accept_candidate(cand_cost, current_before, temperature, rng);

      if (accepted) {
        if (cfg.validate_candidates) {
          const Evaluation ev = evaluate(instance, repaired.selection);
          if (!ev.feasible)
            throw std::logic_error("run_alns: accepted candidate fails feasibility");
        }
        current.selection = repaired.selection;
        current.objective = cand_cost;
        current.feasible = true;
      }
      if (cand_cost < best_before) {
        result.best.selection = repaired.selection;
        result.best.objective = cand_cost;
        result.best.feasible = true;
      }

      if (duplicate)
        outcome = IterationOutcome::Duplicate;
      else if (cand_cost < best_before)
        outcome = IterationOutcome::NewBest;
      else if (cand_cost < current_before)
        outcome = IterationOutcome::Improving;
      else if (accepted)
        outcome = IterationOutcome::AcceptedWorse;
      else
        outcome = IterationOutcome::Rejected;
    }

    double sigma = 0;
    switch (outcome) {
      case IterationOutcome::NewBest: sigma = cfg.sigma1; break;
      case IterationOutcome::Improving: sigma = cfg.sigma2; break;
      case IterationOutcome::AcceptedWorse: sigma = cfg.sigma3; break;
      case IterationOutcome::Rejected:
      case IterationOutcome::Duplicate: sigma = 0; break;
    }
    const double sigma_scaled = sigma / std::max(repair_seconds, 1e-3);
    // Floor keeps the roulette well-defined after long reward droughts.
    destroy_weights[di] =
        std::max(updated_weight(destroy_weights[di], cfg.lambda, sigma_scaled), 1e-12);
    repair_weights[ri] =
        std::max(updated_weight(repair_weights[ri], cfg.lambda, sigma_scaled), 1e-12);

    temperature = std::max(cfg.cooling * temperature, std::numeric_limits<double>::min());
    ++result.iterations;

    const double now = clock.elapsed();
    if (now >= next_trace) {
      result.trace.emplace_back(now, result.best.objective);
      next_trace += cfg.trace_interval_s;
    }
  }

  result.trace.emplace_back(clock.elapsed(), result.best.objective);
  result.destroy_weights = destroy_weights;
  result.repair_weights = repair_weights;
  return result;
}

}  // namespace moap
