#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "moap/conflict.hpp"
#include "moap/core.hpp"
#include "moap/greedy.hpp"
#include "moap/model.hpp"
#include "moap/rng.hpp"

namespace moap {

enum class DestroyOp { Random, TimeInterval, ConflictGraph };
enum class RepairOp { Greedy, Exact };

// Tuned defaults; see alns_default() and the single-operator presets.
struct AlnsConfig {
  double sigma1 = 23;   // reward: new best
  double sigma2 = 40;   // reward: improves current
  double sigma3 = 50;   // reward: worse but accepted
  double lambda = 0.2377;  // weight decay
  double w = 0.0373;       // start-temperature worsening fraction
  double p_w = 0.656;      // acceptance probability of a w-worse solution
  double cooling = 0.2267;

  std::vector<DestroyOp> destroys = {DestroyOp::Random, DestroyOp::TimeInterval,
                                     DestroyOp::ConflictGraph};
  std::vector<double> r_des = {0.15, 0.15, 0.15};  // per destroy operator
  std::vector<RepairOp> repairs = {RepairOp::Greedy, RepairOp::Exact};
  double r_rep = 0.1;  // restricted-candidate-list fraction for greedy repair
  SortCriterion repair_criterion = SortCriterion::MaxMinCost;

  double time_limit_s = 300;
  std::int64_t iteration_limit = -1;  // >= 0 switches to deterministic mode
  std::uint64_t seed = 0;
  std::int64_t exact_repair_node_cap = 50000;
  double trace_interval_s = 10.0;
  double target_cost = -std::numeric_limits<double>::infinity();  // early stop when reached
  double temp_cap_factor = 1e6;  // T_start <= factor * initial cost
  bool validate_candidates = false;  // re-check accepted candidates via evaluate()
};

// Combined configuration the experiments default to: all three destroy
// operators at r_des = 0.15 with greedy (MaxMinCost, r_rep = 0.1) and
// exact repair.
AlnsConfig alns_default();
// Single destroy/repair pairs with their individually tuned parameters.
AlnsConfig lns_random_preset();         // greedy MaxMinCost, r_rep .1308, r_des .1580
AlnsConfig lns_time_interval_preset();  // greedy MaxMinCost, r_rep .1063, r_des .1053
AlnsConfig lns_conflict_preset();       // exact repair, r_des .1836

// --- operator primitives (exposed for tests) ---

// ceil(r * |D|) distinct demands, uniformly at random.
std::vector<int> destroy_random(const Solution& current, int num_demands, double r_des, Rng& rng);

// Demands whose selected offer overlaps a random time window of length
// ceil(horizon * r_des); a window running past the horizon end wraps to
// its beginning. The horizon spans all offers of the instance.
std::vector<int> destroy_time_interval(const Instance& instance, const Solution& current,
                                       double r_des, Rng& rng);

// Breadth-first search over the demand conflict graph from a random start
// node (neighbors in ascending id order), restarting on a new random
// component until ceil(r * |D|) demands are visited.
std::vector<int> destroy_conflict_bfs(const DemandConflictGraph& graph, int num_demands,
                                      double r_des, Rng& rng);

struct RepairOutcome {
  std::vector<int> selection;
  bool complete = false;
  std::size_t work = 0;  // deterministic effort proxy (offers scanned / nodes)
};

// GRASP-style completion: unassigned demands ordered by the criterion,
// the next demand drawn uniformly from the first ceil(r_rep * |D|)
// remaining, then its cheapest offer compatible with the current partial
// selection. Demands without a selectable offer stay unassigned.
RepairOutcome repair_greedy_rcl(const Instance& instance, const OfferConflictGraph& graph,
                                std::vector<int> partial, SortCriterion criterion, double r_rep,
                                std::uint64_t seed_for_order, Rng& rng);

// Optimal completion of the partial selection via branch and bound under
// the node cap; degrades to the best completion found when the cap hits.
RepairOutcome repair_exact(const IlpModel& model, std::vector<int> partial,
                           std::int64_t node_cap);

// Simulated-annealing test: improving or equal always accepted, worse
// accepted with probability exp(-(candidate - current) / T).
bool accept_candidate(double candidate_cost, double current_cost, double temperature, Rng& rng);

// T with exp(-w * initial_cost / T) = p_w, capped at cap_factor * cost;
// degenerates to 1 for a zero-cost initial solution.
double initial_temperature(double initial_cost, double w, double p_w, double cap_factor = 1e6);

// rho := lambda * rho + (1 - lambda) * sigma_scaled.
double updated_weight(double rho, double lambda, double sigma_scaled);

// Order-independent 64-bit hash of a complete selection.
std::uint64_t selection_hash(const std::vector<int>& selection);

enum class IterationOutcome { NewBest, Improving, AcceptedWorse, Rejected, Duplicate };

struct AlnsResult {
  Solution best;
  bool initial_feasible = false;
  double initial_cost = 0;
  std::int64_t iterations = 0;
  std::vector<std::pair<double, double>> trace;  // (elapsed seconds, best cost)
  std::vector<std::int64_t> destroy_uses;
  std::vector<std::int64_t> repair_uses;
  std::vector<double> destroy_weights;
  std::vector<double> repair_weights;
  std::int64_t duplicates = 0;
};

// Adaptive large neighborhood search: roulette operator selection by
// weight, destroy + repair, duplicate detection, simulated-annealing
// acceptance, decayed weight update with time-scaled rewards, geometric
// cooling. Starts from the given solution or a MaxMinCost greedy one.
// With iteration_limit >= 0 the run is bit-reproducible for a fixed seed
// (rewards then use a deterministic work proxy instead of wall time).
AlnsResult run_alns(const Instance& instance, const OfferConflictGraph& graph,
                    const DemandConflictGraph& demand_graph, const AlnsConfig& cfg,
                    const Solution* initial = nullptr);

}  // namespace moap
