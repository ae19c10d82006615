#include "moap/transforms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace moap {

namespace {

// Vehicles of one class, ascending by id (i.e. ascending index, since the
// instance vehicle list is id-sorted).
std::vector<std::vector<int>> vehicles_by_class(const Instance& inst) {
  std::vector<std::vector<int>> byc(inst.classes.size());
  for (int v = 0; v < static_cast<int>(inst.vehicles.size()); ++v) {
    const int w = inst.vehicle_class[static_cast<std::size_t>(v)];
    if (w >= 0) byc[static_cast<std::size_t>(w)].push_back(v);
  }
  return byc;
}

}  // namespace

CollapsedInstance collapse_classes(const Instance& plain) {
  if (!plain.has_classes())
    throw std::invalid_argument("collapse_classes: instance has no vehicle classes");
  for (int c : plain.vehicle_class)
    if (c < 0) throw std::invalid_argument("collapse_classes: class map is not total");
  if (plain.has_class_offers())
    throw std::invalid_argument("collapse_classes: instance already uses class offers");

  const auto byc = vehicles_by_class(plain);

  CollapsedInstance out;
  Instance& inst = out.instance;
  inst.vehicles = plain.vehicles;
  inst.classes = plain.classes;
  inst.vehicle_class = plain.vehicle_class;
  inst.meta = plain.meta;
  inst.meta["model"] = "classes";

  for (const auto& d : plain.demands) {
    Demand dd;
    dd.id = d.id;
    // Group key: (class, interval, cost). Offers without a vehicle pass through.
    std::map<std::tuple<int, Tick, Tick, double>, std::vector<int>> groups;
    std::vector<int> loose;
    for (int oi : d.offers) {
      const Offer& o = plain.offers[static_cast<std::size_t>(oi)];
      if (o.resource.kind == ResourceKind::Vehicle) {
        const int w = plain.vehicle_class[static_cast<std::size_t>(o.resource.index)];
        groups[{w, o.interval.start, o.interval.end, o.cost}].push_back(oi);
      } else {
        loose.push_back(oi);
      }
    }

    struct Pending {
      Offer offer;
      std::vector<int> constituents;
    };
    std::vector<Pending> pending;
    for (int oi : loose) {
      Pending p;
      p.offer = plain.offers[static_cast<std::size_t>(oi)];
      pending.push_back(std::move(p));
    }
    for (auto& [key, members] : groups) {
      const int w = std::get<0>(key);
      const auto& vlist = byc[static_cast<std::size_t>(w)];
      if (members.size() != vlist.size())
        throw std::invalid_argument(
            "collapse_classes: demand " + d.id + " has " + std::to_string(members.size()) +
            " identical offers on class " + plain.classes[static_cast<std::size_t>(w)] +
            " but the class holds " + std::to_string(vlist.size()) +
            " vehicles (vehicles not indistinguishable)");
      // Order constituents by vehicle index so lifting is positional.
      std::sort(members.begin(), members.end(), [&](int a, int b) {
        return plain.offers[static_cast<std::size_t>(a)].resource.index <
               plain.offers[static_cast<std::size_t>(b)].resource.index;
      });
      for (std::size_t i = 0; i < members.size(); ++i)
        if (plain.offers[static_cast<std::size_t>(members[i])].resource.index != vlist[i])
          throw std::invalid_argument("collapse_classes: demand " + d.id +
                                      " is missing an offer on some vehicle of class " +
                                      plain.classes[static_cast<std::size_t>(w)]);
      Pending p;
      p.offer = plain.offers[static_cast<std::size_t>(members.front())];  // smallest id
      p.offer.id = plain.offers[static_cast<std::size_t>(
          *std::min_element(members.begin(), members.end(), [&](int a, int b) {
            return plain.offers[static_cast<std::size_t>(a)].id <
                   plain.offers[static_cast<std::size_t>(b)].id;
          }))].id;
      p.offer.resource = Resource::vehicle_class(w);
      p.constituents = members;
      pending.push_back(std::move(p));
    }

    std::sort(pending.begin(), pending.end(),
              [](const Pending& a, const Pending& b) { return a.offer.id < b.offer.id; });
    const int demand_idx = static_cast<int>(inst.demands.size());
    for (auto& p : pending) {
      p.offer.demand = demand_idx;
      dd.offers.push_back(static_cast<int>(inst.offers.size()));
      inst.offers.push_back(std::move(p.offer));
      out.constituents.push_back(std::move(p.constituents));
    }
    inst.demands.push_back(std::move(dd));
  }

  inst.rebuild_indexes();
  return out;
}

Instance expand_classes(const Instance& classy) {
  const auto byc = vehicles_by_class(classy);
  Instance inst;
  inst.vehicles = classy.vehicles;
  inst.classes = classy.classes;
  inst.vehicle_class = classy.vehicle_class;
  inst.meta = classy.meta;
  inst.meta["model"] = "plain";

  for (const auto& d : classy.demands) {
    Demand dd;
    dd.id = d.id;
    std::vector<Offer> expanded;
    for (int oi : d.offers) {
      const Offer& o = classy.offers[static_cast<std::size_t>(oi)];
      if (o.resource.kind == ResourceKind::VehicleClass) {
        for (int v : byc[static_cast<std::size_t>(o.resource.index)]) {
          Offer copy = o;
          copy.id = o.id + "@" + classy.vehicles[static_cast<std::size_t>(v)];
          copy.resource = Resource::vehicle(v);
          expanded.push_back(std::move(copy));
        }
      } else {
        expanded.push_back(o);
      }
    }
    std::sort(expanded.begin(), expanded.end(),
              [](const Offer& a, const Offer& b) { return a.id < b.id; });
    const int demand_idx = static_cast<int>(inst.demands.size());
    for (auto& o : expanded) {
      o.demand = demand_idx;
      dd.offers.push_back(static_cast<int>(inst.offers.size()));
      inst.offers.push_back(std::move(o));
    }
    inst.demands.push_back(std::move(dd));
  }

  inst.rebuild_indexes();
  return inst;
}

Instance to_singleton_classes(const Instance& plain) {
  if (plain.has_class_offers())
    throw std::invalid_argument("to_singleton_classes: instance already uses class offers");
  Instance inst = plain;
  inst.classes = plain.vehicles;  // one class per vehicle, same ids
  inst.vehicle_class.resize(plain.vehicles.size());
  for (std::size_t v = 0; v < plain.vehicles.size(); ++v)
    inst.vehicle_class[v] = static_cast<int>(v);
  for (auto& o : inst.offers)
    if (o.resource.kind == ResourceKind::Vehicle)
      o.resource = Resource::vehicle_class(o.resource.index);
  inst.meta["model"] = "singleton-classes";
  inst.rebuild_indexes();
  return inst;
}

Solution lift_collapsed_solution(const Instance& plain, const CollapsedInstance& collapsed,
                                 const Solution& class_solution) {
  const Instance& cinst = collapsed.instance;
  const auto byc = vehicles_by_class(cinst);

  Solution out;
  out.selection.assign(static_cast<std::size_t>(plain.num_demands()), -1);
  for (int d = 0; d < cinst.num_demands(); ++d) {
    const int co = class_solution.selection[static_cast<std::size_t>(d)];
    if (co < 0) continue;
    const Offer& offer = cinst.offers[static_cast<std::size_t>(co)];
    const auto& members = collapsed.constituents[static_cast<std::size_t>(co)];
    const int pd = plain.demand_index.at(cinst.demands[static_cast<std::size_t>(d)].id);
    if (members.empty()) {
      // Not collapsed: same offer id exists in the plain instance.
      out.selection[static_cast<std::size_t>(pd)] = plain.offer_index.at(offer.id);
      continue;
    }
    if (!class_solution.has_assignment())
      throw std::invalid_argument("lift_collapsed_solution: class solution lacks a vehicle assignment");
    const int v = class_solution.assigned_vehicle[static_cast<std::size_t>(co)];
    if (v < 0) throw std::invalid_argument("lift_collapsed_solution: selected class offer unassigned");
    const auto& vlist = byc[static_cast<std::size_t>(offer.resource.index)];
    const auto pos = std::lower_bound(vlist.begin(), vlist.end(), v);
    if (pos == vlist.end() || *pos != v)
      throw std::invalid_argument("lift_collapsed_solution: assigned vehicle outside class");
    out.selection[static_cast<std::size_t>(pd)] =
        members[static_cast<std::size_t>(pos - vlist.begin())];
  }

  const Evaluation ev = evaluate(plain, out.selection);
  out.objective = ev.objective;
  out.feasible = ev.feasible;
  return out;
}

}  // namespace moap
