#include "moap/coloring.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace moap {

Solution assign_vehicles(const Instance& instance, const Solution& class_solution) {
  Solution out = class_solution;
  out.assigned_vehicle.assign(static_cast<std::size_t>(instance.num_offers()), -1);

  std::vector<std::vector<int>> vehicles_of_class(instance.classes.size());
  for (int v = 0; v < static_cast<int>(instance.vehicles.size()); ++v) {
    const int w = instance.vehicle_class[static_cast<std::size_t>(v)];
    if (w >= 0) vehicles_of_class[static_cast<std::size_t>(w)].push_back(v);
  }

  std::vector<std::vector<int>> selected_by_class(instance.classes.size());
  for (int d = 0; d < instance.num_demands(); ++d) {
    const int o = class_solution.selection[static_cast<std::size_t>(d)];
    if (o < 0) continue;
    const Offer& offer = instance.offers[static_cast<std::size_t>(o)];
    if (offer.resource.kind == ResourceKind::VehicleClass)
      selected_by_class[static_cast<std::size_t>(offer.resource.index)].push_back(o);
  }

  for (std::size_t w = 0; w < selected_by_class.size(); ++w) {
    auto& offers = selected_by_class[w];
    const auto& slots = vehicles_of_class[w];
    std::sort(offers.begin(), offers.end(), [&](int a, int b) {
      const auto& ia = instance.offers[static_cast<std::size_t>(a)].interval;
      const auto& ib = instance.offers[static_cast<std::size_t>(b)].interval;
      if (ia.start != ib.start) return ia.start < ib.start;
      return a < b;
    });

    // Busy slots keyed by release time; freed slots reused smallest-index
    // first for determinism.
    using Busy = std::pair<Tick, int>;  // (end, slot)
    std::priority_queue<Busy, std::vector<Busy>, std::greater<>> busy;
    std::priority_queue<int, std::vector<int>, std::greater<>> free_slots;
    std::size_t next_slot = 0;

    for (int o : offers) {
      const TimeInterval iv = instance.offers[static_cast<std::size_t>(o)].interval;
      while (!busy.empty() && busy.top().first <= iv.start) {
        free_slots.push(busy.top().second);
        busy.pop();
      }
      int slot;
      if (!free_slots.empty()) {
        slot = free_slots.top();
        free_slots.pop();
      } else if (next_slot < slots.size()) {
        slot = static_cast<int>(next_slot++);
      } else {
        throw std::runtime_error("capacity exceeded: class " + instance.classes[w] +
                                 " needs more than " + std::to_string(slots.size()) +
                                 " vehicles");
      }
      busy.emplace(iv.end, slot);
      out.assigned_vehicle[static_cast<std::size_t>(o)] = slots[static_cast<std::size_t>(slot)];
    }
  }

  return out;
}

}  // namespace moap
