#pragma once

#include <cstdint>
#include <limits>
#include <optional>

#include "moap/model.hpp"

namespace moap {

struct BranchAndBoundConfig {
  double time_limit_s = std::numeric_limits<double>::infinity();
  std::int64_t node_limit = -1;            // < 0: unlimited
  const Solution* warm_start = nullptr;    // optional incumbent
  int root_ascent_rounds = 200;  // subgradient rounds for the root multipliers
};

struct BnbResult {
  std::optional<Solution> solution;  // empty if none found
  double bound = 0.0;                // proven global lower bound
  double root_bound = 0.0;
  bool optimal = false;              // search completed (optimum or infeasibility proven)
  bool infeasible = false;           // proven: no feasible selection exists
  std::int64_t nodes = 0;            // expanded nodes
};

// Best-first branch and bound on the binary model. Node lower bound: cost
// of fixed selections plus, per open demand, its cheapest still-selectable
// offer, strengthened by an admissible capacity penalty (whenever more
// open demands' cheapest offers sit in one capacity row than its remaining
// rhs admits, the excess demands are charged their cheapest alternative
// outside the row; rows applied greedily, demand-disjoint). Branching
// picks the open demand with the largest gap between its two cheapest
// selectable offers and branches on selecting vs. forbidding the cheapest.
// Exploration order is fully determined by (bound, depth, demand,
// insertion order), so runs are deterministic for a fixed config.
BnbResult solve_bnb(const IlpModel& model, const BranchAndBoundConfig& cfg = {});

// Same search with some demands pre-fixed to given offers (-1 = free).
// Used by the exact repair operator. Fixed offers that violate a capacity
// row make the result infeasible.
BnbResult solve_completion(const IlpModel& model, const std::vector<int>& fixed,
                           const BranchAndBoundConfig& cfg = {});

// Root lower bound of the model. For the clique formulation this is the
// max of the clique-row penalty bound and the bound over the pair rows the
// cliques imply, so it dominates the edge formulation's root bound by
// construction.
double root_bound(const IlpModel& model);

}  // namespace moap
