#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "moap/core.hpp"

namespace moap {

struct IntervalNode {
  TimeInterval interval;
  int node = 0;
};

struct SweepStats {
  std::size_t operations = 0;  // endpoint events processed (excludes output)
};

// Reports all maximum cliques of an interval graph given implicitly by
// its intervals. Endpoints are swept in ascending order; on ties right
// endpoints come first (so touching half-open intervals never meet), and
// endpoints of the same kind tie-break by node id for determinism. A
// clique is reported whenever a right endpoint directly follows a left
// endpoint; the very first endpoint counts as not-left. Each reported
// clique is a sorted node-id array; at most one clique per interval is
// emitted and together they cover all nodes.
std::vector<std::vector<int>> max_cliques_interval(std::span<const IntervalNode> intervals,
                                                   SweepStats* stats = nullptr);

// Offer conflict graph: offers of one demand are pairwise adjacent, and
// offers on the same vehicle (or vehicle class) with overlapping absence
// intervals are adjacent. Resource-induced adjacency is stored explicitly;
// same-demand adjacency is implicit via Offer::demand.
struct OfferConflictGraph {
  struct ResourceGroup {
    ResourceKind kind = ResourceKind::Vehicle;
    int index = -1;                        // vehicle or class index
    int capacity = 1;                      // 1, or |phi^-1(w)| for a class
    std::vector<int> offers;               // members, ascending
    std::vector<std::vector<int>> cliques;  // maximum cliques, sweep order
  };

  std::vector<std::vector<int>> resource_adjacency;  // per offer, ascending
  std::vector<std::vector<int>> demand_cliques;      // per demand: O_d
  std::vector<ResourceGroup> groups;                 // per used vehicle/class
  std::size_t resource_edge_count = 0;

  // Upper bound |D| + sum_v |O^v| on the number of maximum cliques.
  std::size_t clique_count_bound() const;
  std::size_t total_clique_count() const;
};

OfferConflictGraph build_offer_conflict_graph(const Instance& instance);

// Demand conflict graph: the quotient of the offer conflict graph under
// the demand partition. Demands d, h are adjacent iff some offer of d and
// some offer of h require the same vehicle with overlapping intervals.
// No self-loops.
struct DemandConflictGraph {
  std::vector<std::vector<int>> adjacency;  // per demand, ascending
  std::size_t edge_count = 0;
};

DemandConflictGraph build_demand_conflict_graph(const Instance& instance,
                                                const OfferConflictGraph& graph);

// Graphviz dumps for debugging.
std::string offer_graph_dot(const Instance& instance, const OfferConflictGraph& graph);
std::string demand_graph_dot(const Instance& instance, const DemandConflictGraph& graph);

}  // namespace moap
