#include "moap/conflict.hpp"

#include <algorithm>
#include <sstream>

namespace moap {

std::vector<std::vector<int>> max_cliques_interval(std::span<const IntervalNode> intervals,
                                                   SweepStats* stats) {
  struct Endpoint {
    Tick time;
    bool right;  // right endpoints sort before left on equal time
    int node;
  };
  std::vector<Endpoint> endpoints;
  endpoints.reserve(intervals.size() * 2);
  for (const auto& iv : intervals) {
    endpoints.push_back({iv.interval.start, false, iv.node});
    endpoints.push_back({iv.interval.end, true, iv.node});
  }
  std::sort(endpoints.begin(), endpoints.end(), [](const Endpoint& a, const Endpoint& b) {
    if (a.time != b.time) return a.time < b.time;
    if (a.right != b.right) return a.right;  // right first
    return a.node < b.node;
  });

  std::vector<std::vector<int>> cliques;
  std::vector<int> current;  // kept sorted
  bool previous_was_left = false;
  for (const Endpoint& e : endpoints) {
    if (stats) ++stats->operations;
    if (!e.right) {
      current.insert(std::lower_bound(current.begin(), current.end(), e.node), e.node);
      previous_was_left = true;
    } else {
      if (previous_was_left) cliques.push_back(current);
      current.erase(std::lower_bound(current.begin(), current.end(), e.node));
      previous_was_left = false;
    }
  }
  return cliques;
}

OfferConflictGraph build_offer_conflict_graph(const Instance& instance) {
  OfferConflictGraph g;
  const int no = instance.num_offers();
  g.resource_adjacency.assign(static_cast<std::size_t>(no), {});

  g.demand_cliques.reserve(instance.demands.size());
  for (const auto& d : instance.demands) g.demand_cliques.push_back(d.offers);

  // Group offers by required resource.
  std::vector<std::vector<int>> by_vehicle(instance.vehicles.size());
  std::vector<std::vector<int>> by_class(instance.classes.size());
  for (int o = 0; o < no; ++o) {
    const Resource r = instance.offers[static_cast<std::size_t>(o)].resource;
    if (r.kind == ResourceKind::Vehicle) by_vehicle[static_cast<std::size_t>(r.index)].push_back(o);
    else if (r.kind == ResourceKind::VehicleClass) by_class[static_cast<std::size_t>(r.index)].push_back(o);
  }

  auto add_group = [&](ResourceKind kind, int index, int capacity, std::vector<int>& members) {
    if (members.empty()) return;
    OfferConflictGraph::ResourceGroup group;
    group.kind = kind;
    group.index = index;
    group.capacity = capacity;
    group.offers = members;

    // Adjacency: sort by start, pair each offer with the later starts it covers.
    std::vector<int> order = members;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const auto& ia = instance.offers[static_cast<std::size_t>(a)].interval;
      const auto& ib = instance.offers[static_cast<std::size_t>(b)].interval;
      if (ia.start != ib.start) return ia.start < ib.start;
      return a < b;
    });
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto& ii = instance.offers[static_cast<std::size_t>(order[i])].interval;
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        const auto& ij = instance.offers[static_cast<std::size_t>(order[j])].interval;
        if (ij.start >= ii.end) break;
        g.resource_adjacency[static_cast<std::size_t>(order[i])].push_back(order[j]);
        g.resource_adjacency[static_cast<std::size_t>(order[j])].push_back(order[i]);
        ++g.resource_edge_count;
      }
    }

    std::vector<IntervalNode> nodes;
    nodes.reserve(members.size());
    for (int o : members)
      nodes.push_back({instance.offers[static_cast<std::size_t>(o)].interval, o});
    group.cliques = max_cliques_interval(nodes);
    g.groups.push_back(std::move(group));
  };

  for (int v = 0; v < static_cast<int>(instance.vehicles.size()); ++v)
    add_group(ResourceKind::Vehicle, v, 1, by_vehicle[static_cast<std::size_t>(v)]);
  for (int w = 0; w < static_cast<int>(instance.classes.size()); ++w)
    add_group(ResourceKind::VehicleClass, w,
              instance.class_size[static_cast<std::size_t>(w)], by_class[static_cast<std::size_t>(w)]);

  for (auto& adj : g.resource_adjacency) std::sort(adj.begin(), adj.end());
  return g;
}

std::size_t OfferConflictGraph::clique_count_bound() const {
  std::size_t bound = demand_cliques.size();
  for (const auto& group : groups) bound += group.offers.size();
  return bound;
}

std::size_t OfferConflictGraph::total_clique_count() const {
  std::size_t n = demand_cliques.size();
  for (const auto& group : groups) n += group.cliques.size();
  return n;
}

DemandConflictGraph build_demand_conflict_graph(const Instance& instance,
                                                const OfferConflictGraph& graph) {
  DemandConflictGraph dg;
  dg.adjacency.assign(instance.demands.size(), {});
  for (int o = 0; o < instance.num_offers(); ++o) {
    const int d = instance.offers[static_cast<std::size_t>(o)].demand;
    for (int n : graph.resource_adjacency[static_cast<std::size_t>(o)]) {
      const int h = instance.offers[static_cast<std::size_t>(n)].demand;
      if (h != d) dg.adjacency[static_cast<std::size_t>(d)].push_back(h);
    }
  }
  for (auto& adj : dg.adjacency) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    dg.edge_count += adj.size();
  }
  dg.edge_count /= 2;
  return dg;
}

std::string offer_graph_dot(const Instance& instance, const OfferConflictGraph& graph) {
  std::ostringstream out;
  out << "graph offer_conflicts {\n";
  for (const auto& o : instance.offers) out << "  \"" << o.id << "\";\n";
  for (const auto& d : instance.demands)
    for (std::size_t i = 0; i < d.offers.size(); ++i)
      for (std::size_t j = i + 1; j < d.offers.size(); ++j)
        out << "  \"" << instance.offers[static_cast<std::size_t>(d.offers[i])].id << "\" -- \""
            << instance.offers[static_cast<std::size_t>(d.offers[j])].id << "\" [style=dashed];\n";
  for (int o = 0; o < instance.num_offers(); ++o)
    for (int n : graph.resource_adjacency[static_cast<std::size_t>(o)])
      if (o < n)
        out << "  \"" << instance.offers[static_cast<std::size_t>(o)].id << "\" -- \""
            << instance.offers[static_cast<std::size_t>(n)].id << "\";\n";
  out << "}\n";
  return out.str();
}

std::string demand_graph_dot(const Instance& instance, const DemandConflictGraph& graph) {
  std::ostringstream out;
  out << "graph demand_conflicts {\n";
  for (const auto& d : instance.demands) out << "  \"" << d.id << "\";\n";
  for (int d = 0; d < instance.num_demands(); ++d)
    for (int h : graph.adjacency[static_cast<std::size_t>(d)])
      if (d < h)
        out << "  \"" << instance.demands[static_cast<std::size_t>(d)].id << "\" -- \""
            << instance.demands[static_cast<std::size_t>(h)].id << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace moap
