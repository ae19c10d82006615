#pragma once

// Independent brute-force oracles. These deliberately avoid the library's
// conflict-graph and solver code paths: feasibility is the pairwise
// definition, optima come from full enumeration, cliques from subset
// enumeration. Expected values in the tests are frozen from these.

#include <algorithm>
#include <optional>
#include <vector>

#include "moap/core.hpp"
#include "moap/generators.hpp"
#include "moap/rng.hpp"

namespace moap::test {

inline bool offers_conflict(const Instance& inst, int a, int b) {
  const Offer& oa = inst.offers[static_cast<std::size_t>(a)];
  const Offer& ob = inst.offers[static_cast<std::size_t>(b)];
  if (oa.demand == ob.demand) return true;
  if (oa.resource.kind == ResourceKind::None || oa.resource != ob.resource) return false;
  return oa.interval.start < ob.interval.end && ob.interval.start < oa.interval.end;
}

// Full offer conflict adjacency from the pairwise definition (capacity-1
// resources only).
inline std::vector<std::vector<bool>> brute_adjacency(const Instance& inst) {
  const int n = inst.num_offers();
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n),
                                     std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (offers_conflict(inst, a, b)) adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
  return adj;
}

struct BruteForceResult {
  bool feasible = false;
  double objective = 0;
  std::vector<int> selection;
};

// Exhaustive enumeration over all selections with incremental pairwise
// feasibility. Only for tiny instances.
inline BruteForceResult brute_force_optimum(const Instance& inst) {
  BruteForceResult best;
  std::vector<int> current(static_cast<std::size_t>(inst.num_demands()), -1);

  auto conflicts_with_chosen = [&](int offer, int upto) {
    for (int d = 0; d < upto; ++d) {
      const int other = current[static_cast<std::size_t>(d)];
      const Offer& oa = inst.offers[static_cast<std::size_t>(offer)];
      const Offer& ob = inst.offers[static_cast<std::size_t>(other)];
      if (oa.resource.kind == ResourceKind::Vehicle && oa.resource == ob.resource &&
          oa.interval.start < ob.interval.end && ob.interval.start < oa.interval.end)
        return true;
    }
    return false;
  };

  auto recurse = [&](auto&& self, int d, double cost) -> void {
    if (best.feasible && cost >= best.objective) return;
    if (d == inst.num_demands()) {
      // Recompute in demand order so bitwise comparison with evaluate() holds.
      double total = 0;
      for (int i = 0; i < inst.num_demands(); ++i)
        total += inst.offers[static_cast<std::size_t>(current[static_cast<std::size_t>(i)])].cost;
      if (!best.feasible || total < best.objective) {
        best.feasible = true;
        best.objective = total;
        best.selection = current;
      }
      return;
    }
    for (int o : inst.demands[static_cast<std::size_t>(d)].offers) {
      if (conflicts_with_chosen(o, d)) continue;
      current[static_cast<std::size_t>(d)] = o;
      self(self, d + 1, cost + inst.offers[static_cast<std::size_t>(o)].cost);
      current[static_cast<std::size_t>(d)] = -1;
    }
  };
  recurse(recurse, 0, 0.0);
  return best;
}

// All inclusion-maximal cliques of an adjacency matrix by subset
// enumeration (n <= 20), as sorted index sets, sorted lexicographically.
inline std::vector<std::vector<int>> brute_force_max_cliques(
    const std::vector<std::vector<bool>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::uint32_t> cliques;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    bool is_clique = true;
    for (int a = 0; a < n && is_clique; ++a) {
      if (!(s & (1u << a))) continue;
      for (int b = a + 1; b < n && is_clique; ++b)
        if ((s & (1u << b)) && !adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
          is_clique = false;
    }
    if (is_clique) cliques.push_back(s);
  }
  std::vector<std::vector<int>> maximal;
  for (std::uint32_t s : cliques) {
    bool contained = false;
    for (std::uint32_t t : cliques)
      if (t != s && (s & t) == s) {
        contained = true;
        break;
      }
    if (contained) continue;
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (s & (1u << i)) members.push_back(i);
    maximal.push_back(std::move(members));
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

// Recursive job->machine assignment with half-open interval semantics.
inline bool brute_force_isma_feasible(const IsmaInstance& isma) {
  std::vector<std::vector<TimeInterval>> schedule(isma.machines.size());
  auto recurse = [&](auto&& self, std::size_t j) -> bool {
    if (j == isma.jobs.size()) return true;
    const TimeInterval job = isma.jobs[j];
    for (std::size_t m = 0; m < isma.machines.size(); ++m) {
      const TimeInterval avail = isma.machines[m];
      if (job.start < avail.start || job.end > avail.end) continue;
      bool clash = false;
      for (const auto& other : schedule[m])
        if (job.start < other.end && other.start < job.end) {
          clash = true;
          break;
        }
      if (clash) continue;
      schedule[m].push_back(job);
      if (self(self, j + 1)) return true;
      schedule[m].pop_back();
    }
    return false;
  };
  return recurse(recurse, 0);
}

// Small random instances with integer costs (exact double sums), used by
// the oracle-equivalence and property tests. Feasibility is NOT
// guaranteed unless with_fallback is set. When unique_vehicle_per_demand
// is set, a demand gets at most one offer per vehicle (the setting in
// which every maximal clique is a demand set or a vehicle clique; with
// same-vehicle alternative dates a third offer spanning both dates forms
// a maximal clique of neither kind).
inline Instance make_random_instance(std::uint64_t seed, int max_demands, int max_offers,
                                     int num_vehicles, Tick horizon, bool with_fallback,
                                     bool unique_vehicle_per_demand = false) {
  Rng rng = Rng(seed).fork("test-instance");
  Instance inst;
  for (int v = 0; v < num_vehicles; ++v) inst.vehicles.push_back("v" + std::to_string(v));
  inst.vehicle_class.assign(inst.vehicles.size(), -1);

  const int nd = static_cast<int>(rng.uniform_int(1, max_demands));
  for (int d = 0; d < nd; ++d) {
    Demand demand;
    demand.id = "d" + std::to_string(d);
    const int no = static_cast<int>(rng.uniform_int(1, max_offers));
    std::vector<bool> used_vehicle(static_cast<std::size_t>(num_vehicles), false);
    for (int k = 0; k < no; ++k) {
      Offer o;
      o.id = demand.id + "_o" + std::to_string(k);
      o.demand = d;
      const Tick start = rng.uniform_int(0, horizon - 2);
      o.interval = {start, start + rng.uniform_int(1, horizon - start - 1)};
      o.cost = static_cast<double>(rng.uniform_int(1, 100));
      if (num_vehicles > 0 && rng.bernoulli(0.85)) {
        const int v = static_cast<int>(rng.uniform_int(0, num_vehicles - 1));
        if (!unique_vehicle_per_demand || !used_vehicle[static_cast<std::size_t>(v)]) {
          o.resource = Resource::vehicle(v);
          used_vehicle[static_cast<std::size_t>(v)] = true;
        }
      }
      demand.offers.push_back(static_cast<int>(inst.offers.size()));
      inst.offers.push_back(std::move(o));
    }
    if (with_fallback) {
      Offer o;
      o.id = demand.id + "_z";
      o.demand = d;
      o.interval = {0, 1};
      o.cost = static_cast<double>(rng.uniform_int(150, 400));
      demand.offers.push_back(static_cast<int>(inst.offers.size()));
      inst.offers.push_back(std::move(o));
    }
    inst.demands.push_back(std::move(demand));
  }
  inst.meta["generator"] = "test";
  inst.meta["time_unit"] = "ticks";
  inst.rebuild_indexes();
  return inst;
}

}  // namespace moap::test
