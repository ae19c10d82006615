#include "moap/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace moap {

IlpModel build_model(const Instance& instance, const OfferConflictGraph& graph,
                     Formulation formulation, bool classes) {
  if (classes) {
    if (!instance.has_classes() || !instance.has_class_offers())
      throw std::invalid_argument("build_model: class model requested but the instance has no class offers");
  } else {
    if (instance.has_class_offers())
      throw std::invalid_argument("build_model: plain model requested on a class-offer instance");
  }

  IlpModel model;
  model.instance = &instance;
  model.formulation = formulation;
  model.classes = classes;

  auto resource_name = [&](const OfferConflictGraph::ResourceGroup& g) {
    return g.kind == ResourceKind::Vehicle ? instance.vehicles[static_cast<std::size_t>(g.index)]
                                           : instance.classes[static_cast<std::size_t>(g.index)];
  };

  for (const auto& group : graph.groups) {
    const int rhs = group.capacity;
    if (formulation == Formulation::Clique) {
      int k = 0;
      for (const auto& clique : group.cliques) {
        if (static_cast<int>(clique.size()) <= rhs) continue;  // can never bind
        IlpModel::Row row;
        row.offers = clique;
        row.rhs = rhs;
        row.name = "c_" + resource_name(group) + "_" + std::to_string(k++);
        model.capacity.push_back(std::move(row));
      }
    } else {
      int k = 0;
      if (rhs >= 2) continue;  // pair rows are vacuous above capacity 1
      for (int o : group.offers) {
        for (int n : graph.resource_adjacency[static_cast<std::size_t>(o)]) {
          if (n <= o) continue;
          IlpModel::Row row;
          row.offers = {o, n};
          row.rhs = rhs;
          row.name = "e_" + resource_name(group) + "_" + std::to_string(k++);
          model.capacity.push_back(std::move(row));
        }
      }
    }
  }

  model.rows_of_offer.assign(static_cast<std::size_t>(instance.num_offers()), {});
  for (int r = 0; r < static_cast<int>(model.capacity.size()); ++r)
    for (int o : model.capacity[static_cast<std::size_t>(r)].offers)
      model.rows_of_offer[static_cast<std::size_t>(o)].push_back(r);

  model.offers_by_cost.reserve(instance.demands.size());
  for (const auto& d : instance.demands) {
    std::vector<int> order = d.offers;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const double ca = instance.offers[static_cast<std::size_t>(a)].cost;
      const double cb = instance.offers[static_cast<std::size_t>(b)].cost;
      if (ca != cb) return ca < cb;
      return a < b;  // index order == id order within a demand
    });
    model.offers_by_cost.push_back(std::move(order));
  }

  return model;
}

}  // namespace moap
