#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "moap/conflict.hpp"
#include "moap/core.hpp"

namespace moap {

enum class SortCriterion {
  MinMinCost,
  MaxMinCost,
  MinMinCostPerTime,
  MaxMinCostPerTime,
  MinAveCost,
  MaxAveCost,
  Random,
};

const char* to_string(SortCriterion c);
SortCriterion sort_criterion_from_string(const std::string& name);

// Total demand order under the given criterion; ties broken by demand id
// ascending. Random shuffles with the given seed and is reproducible.
std::vector<int> order_demands(const Instance& instance, SortCriterion criterion,
                               std::uint64_t seed = 0);

struct GreedyResult {
  Solution solution;           // feasible = false when demands stayed unassigned
  std::vector<int> unassigned;  // demand indices without a selectable offer
  std::size_t edges_touched = 0;  // resource edges visited; at most |E|
};

// Scans demands in the given order and selects each demand's cheapest
// still-selectable offer (ties by offer id), marking all conflict-graph
// neighbors unselectable. Demands whose offers are all blocked are
// reported unassigned instead of failing. Requires a plain instance
// (capacity-1 resources); expand class offers first.
GreedyResult greedy_select(const Instance& instance, const OfferConflictGraph& graph,
                           std::span<const int> ordering);

// Baseline that always takes the globally cheapest selectable offer among
// unsatisfied demands; ties by (demand id, offer id).
GreedyResult greedy_g1mw(const Instance& instance, const OfferConflictGraph& graph);

}  // namespace moap
