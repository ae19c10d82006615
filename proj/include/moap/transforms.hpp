#pragma once

#include <vector>

#include "moap/core.hpp"

namespace moap {

// The plain and class models are equally general; these transforms move
// between them.

// Result of collapsing per-vehicle offers into abstract class offers.
struct CollapsedInstance {
  Instance instance;  // offers reference vehicle classes
  // Per collapsed offer index: the original offer index on each vehicle of
  // its class (parallel to the class's vehicle list, ascending by vehicle
  // id). Empty for offers that were not collapsed (resource None).
  std::vector<std::vector<int>> constituents;
  // Per collapsed offer: original offer indices in ascending order (same
  // content as constituents, kept for convenience).
};

// Groups, per demand, the vehicle offers that sit on vehicles of one class
// and share interval and cost into a single abstract class offer.
// Requires a total vehicle->class map and, within each (demand, class,
// interval, cost) group, exactly one offer per vehicle of the class --
// i.e. vehicles of a class must be indistinguishable. Throws
// std::invalid_argument otherwise.
CollapsedInstance collapse_classes(const Instance& plain);

// Inverse direction: every class offer becomes one offer per vehicle of
// the class (id "<offer>@<vehicle>"); vehicle offers pass through.
Instance expand_classes(const Instance& classy);

// Wraps every vehicle in its own singleton class and rewrites vehicle
// offers as class offers. Solving the class model of the result is
// equivalent to solving the plain model of the input.
Instance to_singleton_classes(const Instance& plain);

// Translates a solution of collapse_classes(plain) (including its vehicle
// assignment) back to the original plain instance: each selected abstract
// offer maps to the constituent offer on its assigned vehicle.
Solution lift_collapsed_solution(const Instance& plain, const CollapsedInstance& collapsed,
                                 const Solution& class_solution);

}  // namespace moap
