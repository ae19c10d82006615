#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace moap {

// Times are integer ticks in the unit declared by the instance
// ("hours", "minutes", ...), which keeps every overlap test exact.
using Tick = std::int64_t;

// Half-open absence interval [start, end): touching intervals do not
// overlap, so back-to-back bookings of one vehicle are feasible.
struct TimeInterval {
  Tick start = 0;
  Tick end = 0;

  Tick duration() const { return end - start; }
  bool overlaps(const TimeInterval& o) const {
    return start < o.end && o.start < end;
  }
  auto operator<=>(const TimeInterval&) const = default;
};

enum class ResourceKind : std::uint8_t { None, Vehicle, VehicleClass };

// What an offer occupies while selected: a concrete vehicle, any vehicle
// of a class, or nothing (public transport, taxi, regret offers).
struct Resource {
  ResourceKind kind = ResourceKind::None;
  int index = -1;  // into Instance::vehicles or Instance::classes

  static Resource none() { return {}; }
  static Resource vehicle(int v) { return {ResourceKind::Vehicle, v}; }
  static Resource vehicle_class(int w) { return {ResourceKind::VehicleClass, w}; }
  bool operator==(const Resource&) const = default;
};

struct Offer {
  std::string id;
  int demand = -1;  // owning demand index
  TimeInterval interval;
  double cost = 0.0;
  Resource resource;
};

struct Demand {
  std::string id;
  std::vector<int> offers;  // offer indices, ascending by offer id
};

// A validated problem instance. Immutable after construction; safe to
// share across concurrently running solvers.
//
// Index order is canonical: demands ascending by id, offers ascending by
// (demand id, offer id), vehicles and classes ascending by id.
struct Instance {
  std::vector<Demand> demands;
  std::vector<Offer> offers;
  std::vector<std::string> vehicles;
  std::vector<std::string> classes;    // empty unless the class model is used
  std::vector<int> vehicle_class;      // per vehicle: class index, or -1
  std::vector<int> class_size;         // per class: |phi^-1(w)|
  std::map<std::string, std::string> meta;

  std::unordered_map<std::string, int> demand_index;
  std::unordered_map<std::string, int> offer_index;
  std::unordered_map<std::string, int> vehicle_index;
  std::unordered_map<std::string, int> class_index;

  bool has_classes() const { return !classes.empty(); }
  int num_demands() const { return static_cast<int>(demands.size()); }
  int num_offers() const { return static_cast<int>(offers.size()); }

  // True if any offer references a vehicle class instead of a vehicle.
  bool has_class_offers() const {
    for (const auto& o : offers)
      if (o.resource.kind == ResourceKind::VehicleClass) return true;
    return false;
  }

  void rebuild_indexes();
};

// One selected offer per demand (index-based; -1 = unassigned).
struct Solution {
  std::vector<int> selection;          // per demand index: offer index
  double objective = 0.0;
  bool feasible = false;
  std::vector<int> assigned_vehicle;   // per offer index, -1 if none; may be empty

  bool has_assignment() const { return !assigned_vehicle.empty(); }
  bool complete() const {
    for (int o : selection)
      if (o < 0) return false;
    return true;
  }
};

struct Violation {
  enum Kind {
    OverlapSameVehicle,   // a, b: offer indices on one vehicle, intervals overlap
    OverlapAssigned,      // a, b: class offers assigned to the same vehicle, overlap
    ForeignOffer,         // a: demand index, b: offer index not in O_a
    Unassigned,           // a: demand index without a selection
    ClassCapacity,        // a: class index, b: overlap count exceeding the class size
    BadAssignment,        // a: offer index with a vehicle outside its class
  };
  Kind kind;
  int a = -1;
  int b = -1;
};

struct Evaluation {
  double objective = 0.0;
  bool feasible = false;
  std::vector<Violation> violations;
};

// Recomputes the objective and checks feasibility of a selection:
// selected offers on one concrete vehicle must have pairwise disjoint
// intervals, every demand must select one of its own offers, and for
// class offers the simultaneous usage of a class may not exceed its
// size. Infeasibility is reported, never thrown. Pure.
Evaluation evaluate(const Instance& instance, const std::vector<int>& selection,
                    const std::vector<int>* assigned_vehicle = nullptr);

// Convenience: evaluate a solution including its vehicle assignment.
Evaluation evaluate(const Instance& instance, const Solution& solution);

// Sum over demands of the cheapest offer cost: a lower bound on any
// feasible objective.
double per_demand_lower_bound(const Instance& instance);

std::string violation_to_string(const Instance& instance, const Violation& v);

}  // namespace moap
