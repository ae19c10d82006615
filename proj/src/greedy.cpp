#include "moap/greedy.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "moap/rng.hpp"

namespace moap {

const char* to_string(SortCriterion c) {
  switch (c) {
    case SortCriterion::MinMinCost: return "minmincost";
    case SortCriterion::MaxMinCost: return "maxmincost";
    case SortCriterion::MinMinCostPerTime: return "minmincostpertime";
    case SortCriterion::MaxMinCostPerTime: return "maxmincostpertime";
    case SortCriterion::MinAveCost: return "minavecost";
    case SortCriterion::MaxAveCost: return "maxavecost";
    case SortCriterion::Random: return "random";
  }
  return "?";
}

SortCriterion sort_criterion_from_string(const std::string& name) {
  for (SortCriterion c :
       {SortCriterion::MinMinCost, SortCriterion::MaxMinCost, SortCriterion::MinMinCostPerTime,
        SortCriterion::MaxMinCostPerTime, SortCriterion::MinAveCost, SortCriterion::MaxAveCost,
        SortCriterion::Random})
    if (name == to_string(c)) return c;
  throw std::invalid_argument("unknown sort criterion: " + name);
}

std::vector<int> order_demands(const Instance& instance, SortCriterion criterion,
                               std::uint64_t seed) {
  const int nd = instance.num_demands();
  std::vector<int> order(static_cast<std::size_t>(nd));
  for (int d = 0; d < nd; ++d) order[static_cast<std::size_t>(d)] = d;

  if (criterion == SortCriterion::Random) {
    Rng rng = Rng(seed).fork("order-demands");
    rng.shuffle(order);
    return order;
  }

  std::vector<double> key(static_cast<std::size_t>(nd), 0.0);
  for (int d = 0; d < nd; ++d) {
    double min_cost = std::numeric_limits<double>::infinity();
    double min_cpt = std::numeric_limits<double>::infinity();
    double sum = 0;
    const auto& offers = instance.demands[static_cast<std::size_t>(d)].offers;
    for (int oi : offers) {
      const Offer& o = instance.offers[static_cast<std::size_t>(oi)];
      min_cost = std::min(min_cost, o.cost);
      min_cpt = std::min(min_cpt, o.cost / static_cast<double>(o.interval.duration()));
      sum += o.cost;
    }
    switch (criterion) {
      case SortCriterion::MinMinCost: key[static_cast<std::size_t>(d)] = min_cost; break;
      case SortCriterion::MaxMinCost: key[static_cast<std::size_t>(d)] = -min_cost; break;
      case SortCriterion::MinMinCostPerTime: key[static_cast<std::size_t>(d)] = min_cpt; break;
      case SortCriterion::MaxMinCostPerTime: key[static_cast<std::size_t>(d)] = -min_cpt; break;
      case SortCriterion::MinAveCost:
        key[static_cast<std::size_t>(d)] = sum / static_cast<double>(offers.size());
        break;
      case SortCriterion::MaxAveCost:
        key[static_cast<std::size_t>(d)] = -sum / static_cast<double>(offers.size());
        break;
      case SortCriterion::Random: break;
    }
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (key[static_cast<std::size_t>(a)] != key[static_cast<std::size_t>(b)])
      return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)];
    return a < b;  // index order == id order
  });
  return order;
}

namespace {

GreedyResult scan_offers(const Instance& instance, const OfferConflictGraph& graph,
                         const std::vector<int>& offer_order) {
  for (const auto& group : graph.groups)
    if (group.capacity != 1)
      throw std::invalid_argument("greedy requires the plain model; expand class offers first");

  GreedyResult result;
  result.solution.selection.assign(static_cast<std::size_t>(instance.num_demands()), -1);
  std::vector<std::uint8_t> selectable(static_cast<std::size_t>(instance.num_offers()), 1);

  for (int o : offer_order) {
    if (!selectable[static_cast<std::size_t>(o)]) continue;
    const int d = instance.offers[static_cast<std::size_t>(o)].demand;
    if (result.solution.selection[static_cast<std::size_t>(d)] >= 0) continue;
    result.solution.selection[static_cast<std::size_t>(d)] = o;
    for (int n : graph.resource_adjacency[static_cast<std::size_t>(o)]) {
      selectable[static_cast<std::size_t>(n)] = 0;
      ++result.edges_touched;
    }
  }

  double objective = 0;
  for (int d = 0; d < instance.num_demands(); ++d) {
    const int o = result.solution.selection[static_cast<std::size_t>(d)];
    if (o < 0)
      result.unassigned.push_back(d);
    else
      objective += instance.offers[static_cast<std::size_t>(o)].cost;
  }
  result.solution.objective = objective;
  result.solution.feasible = result.unassigned.empty();
  return result;
}

}  // namespace

GreedyResult greedy_select(const Instance& instance, const OfferConflictGraph& graph,
                           std::span<const int> ordering) {
  std::vector<int> position(static_cast<std::size_t>(instance.num_demands()), 0);
  for (int i = 0; i < static_cast<int>(ordering.size()); ++i)
    position[static_cast<std::size_t>(ordering[static_cast<std::size_t>(i)])] = i;

  std::vector<int> offer_order(static_cast<std::size_t>(instance.num_offers()));
  for (int o = 0; o < instance.num_offers(); ++o) offer_order[static_cast<std::size_t>(o)] = o;
  std::sort(offer_order.begin(), offer_order.end(), [&](int a, int b) {
    const Offer& oa = instance.offers[static_cast<std::size_t>(a)];
    const Offer& ob = instance.offers[static_cast<std::size_t>(b)];
    if (oa.demand != ob.demand)
      return position[static_cast<std::size_t>(oa.demand)] < position[static_cast<std::size_t>(ob.demand)];
    if (oa.cost != ob.cost) return oa.cost < ob.cost;
    return a < b;  // offer id order within the demand
  });
  return scan_offers(instance, graph, offer_order);
}

GreedyResult greedy_g1mw(const Instance& instance, const OfferConflictGraph& graph) {
  std::vector<int> offer_order(static_cast<std::size_t>(instance.num_offers()));
  for (int o = 0; o < instance.num_offers(); ++o) offer_order[static_cast<std::size_t>(o)] = o;
  std::sort(offer_order.begin(), offer_order.end(), [&](int a, int b) {
    const Offer& oa = instance.offers[static_cast<std::size_t>(a)];
    const Offer& ob = instance.offers[static_cast<std::size_t>(b)];
    if (oa.cost != ob.cost) return oa.cost < ob.cost;
    if (oa.demand != ob.demand) return oa.demand < ob.demand;
    return a < b;
  });
  return scan_offers(instance, graph, offer_order);
}

}  // namespace moap
