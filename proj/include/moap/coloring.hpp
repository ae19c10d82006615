#pragma once

#include "moap/core.hpp"

namespace moap {

// Lifts a class-model solution to concrete vehicles: per class, the
// selected offers' intervals are colored greedily in start order, each
// color being one vehicle of the class (ascending by id). The number of
// vehicles used per class equals the maximum overlap of the selected
// intervals (interval graphs are perfect). Throws std::runtime_error
// "capacity exceeded" when a class needs more vehicles than it has, which
// indicates an infeasible input solution.
Solution assign_vehicles(const Instance& instance, const Solution& class_solution);

}  // namespace moap
