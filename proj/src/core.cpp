#include "moap/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace moap {

void Instance::rebuild_indexes() {
  demand_index.clear();
  offer_index.clear();
  vehicle_index.clear();
  class_index.clear();
  for (int d = 0; d < num_demands(); ++d) demand_index.emplace(demands[static_cast<std::size_t>(d)].id, d);
  for (int o = 0; o < num_offers(); ++o) offer_index.emplace(offers[static_cast<std::size_t>(o)].id, o);
  for (int v = 0; v < static_cast<int>(vehicles.size()); ++v) vehicle_index.emplace(vehicles[static_cast<std::size_t>(v)], v);
  for (int w = 0; w < static_cast<int>(classes.size()); ++w) class_index.emplace(classes[static_cast<std::size_t>(w)], w);
  class_size.assign(classes.size(), 0);
  for (int c : vehicle_class)
    if (c >= 0) ++class_size[static_cast<std::size_t>(c)];
}

namespace {

// Reports every overlapping pair among the given (interval, offer) items.
void overlapping_pairs(std::vector<std::pair<TimeInterval, int>>& items,
                       Violation::Kind kind, std::vector<Violation>& out) {
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.start != b.first.start) return a.first.start < b.first.start;
    return a.second < b.second;
  });
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      if (items[j].first.start >= items[i].first.end) break;
      out.push_back({kind, std::min(items[i].second, items[j].second),
                     std::max(items[i].second, items[j].second)});
    }
  }
}

// Maximum number of simultaneously active intervals (clique number of an
// interval set), via an endpoint sweep with right endpoints first on ties.
int max_overlap(std::vector<std::pair<TimeInterval, int>>& items) {
  std::vector<std::pair<Tick, int>> events;  // (time, +1/-1), -1 sorts first
  events.reserve(items.size() * 2);
  for (const auto& [iv, id] : items) {
    events.emplace_back(iv.start, +1);
    events.emplace_back(iv.end, -1);
  }
  std::sort(events.begin(), events.end());
  int cur = 0, best = 0;
  for (const auto& [t, delta] : events) {
    cur += delta;
    best = std::max(best, cur);
  }
  return best;
}

}  // namespace

Evaluation evaluate(const Instance& instance, const std::vector<int>& selection,
                    const std::vector<int>* assigned_vehicle) {
  Evaluation ev;
  const int nd = instance.num_demands();
  const int no = instance.num_offers();

  for (int d = 0; d < nd; ++d) {
    const int o = d < static_cast<int>(selection.size()) ? selection[static_cast<std::size_t>(d)] : -1;
    if (o < 0 || o >= no) {
      ev.violations.push_back({Violation::Unassigned, d, -1});
      continue;
    }
    if (instance.offers[static_cast<std::size_t>(o)].demand != d) {
      ev.violations.push_back({Violation::ForeignOffer, d, o});
      continue;
    }
    ev.objective += instance.offers[static_cast<std::size_t>(o)].cost;
  }

  // Per concrete vehicle: every overlapping pair of selected offers.
  std::vector<std::vector<std::pair<TimeInterval, int>>> by_vehicle(instance.vehicles.size());
  std::vector<std::vector<std::pair<TimeInterval, int>>> by_class(instance.classes.size());
  for (int d = 0; d < nd && d < static_cast<int>(selection.size()); ++d) {
    const int o = selection[static_cast<std::size_t>(d)];
    if (o < 0 || o >= no) continue;
    const Offer& offer = instance.offers[static_cast<std::size_t>(o)];
    if (offer.demand != d) continue;
    if (offer.resource.kind == ResourceKind::Vehicle) {
      by_vehicle[static_cast<std::size_t>(offer.resource.index)].emplace_back(offer.interval, o);
    } else if (offer.resource.kind == ResourceKind::VehicleClass) {
      const int w = offer.resource.index;
      int assigned = -1;
      if (assigned_vehicle && o < static_cast<int>(assigned_vehicle->size()))
        assigned = (*assigned_vehicle)[static_cast<std::size_t>(o)];
      if (assigned >= 0) {
        if (assigned >= static_cast<int>(instance.vehicles.size()) ||
            instance.vehicle_class[static_cast<std::size_t>(assigned)] != w) {
          ev.violations.push_back({Violation::BadAssignment, o, assigned});
        } else {
          by_vehicle[static_cast<std::size_t>(assigned)].emplace_back(offer.interval, o);
        }
      } else {
        by_class[static_cast<std::size_t>(w)].emplace_back(offer.interval, o);
      }
    }
  }
  for (std::size_t v = 0; v < by_vehicle.size(); ++v)
    overlapping_pairs(by_vehicle[v], Violation::OverlapSameVehicle, ev.violations);
  // Unassigned class offers: simultaneous usage may not exceed the class size.
  for (std::size_t w = 0; w < by_class.size(); ++w) {
    const int peak = max_overlap(by_class[w]);
    if (peak > instance.class_size[w])
      ev.violations.push_back({Violation::ClassCapacity, static_cast<int>(w), peak});
  }

  ev.feasible = ev.violations.empty();
  return ev;
}

Evaluation evaluate(const Instance& instance, const Solution& solution) {
  return evaluate(instance, solution.selection,
                  solution.has_assignment() ? &solution.assigned_vehicle : nullptr);
}

double per_demand_lower_bound(const Instance& instance) {
  double total = 0;
  for (const auto& d : instance.demands) {
    double best = std::numeric_limits<double>::infinity();
    for (int o : d.offers) best = std::min(best, instance.offers[static_cast<std::size_t>(o)].cost);
    total += best;
  }
  return total;
}

std::string violation_to_string(const Instance& instance, const Violation& v) {
  auto offer_id = [&](int o) { return instance.offers[static_cast<std::size_t>(o)].id; };
  switch (v.kind) {
    case Violation::OverlapSameVehicle:
      return "overlap on shared vehicle: " + offer_id(v.a) + ", " + offer_id(v.b);
    case Violation::OverlapAssigned:
      return "overlap on assigned vehicle: " + offer_id(v.a) + ", " + offer_id(v.b);
    case Violation::ForeignOffer:
      return "demand " + instance.demands[static_cast<std::size_t>(v.a)].id +
             " selects foreign offer " + offer_id(v.b);
    case Violation::Unassigned:
      return "demand " + instance.demands[static_cast<std::size_t>(v.a)].id + " unassigned";
    case Violation::ClassCapacity:
      return "class " + instance.classes[static_cast<std::size_t>(v.a)] + " used " +
             std::to_string(v.b) + " times simultaneously";
    case Violation::BadAssignment:
      return "offer " + offer_id(v.a) + " assigned to a vehicle outside its class";
  }
  return "unknown violation";
}

}  // namespace moap
