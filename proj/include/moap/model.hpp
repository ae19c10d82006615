#pragma once

#include <string>
#include <vector>

#include "moap/conflict.hpp"
#include "moap/core.hpp"

namespace moap {

enum class Formulation { Clique, Edge };

// Binary program over one x_o per offer:
//   min sum c_o x_o
//   sum_{o in O_d} x_o  = 1            per demand (implicit, from the instance)
//   sum_{o in K}   x_o <= rhs          per capacity row
// Capacity rows are the maximum cliques of each vehicle's (or class's)
// conflict graph with rhs 1 (or the class size), or one row per
// conflicting pair for the edge formulation. Rows that can never bind
// (|K| <= rhs) are dropped; binary bounds subsume them.
struct IlpModel {
  const Instance* instance = nullptr;
  Formulation formulation = Formulation::Clique;
  bool classes = false;

  struct Row {
    std::vector<int> offers;  // ascending
    int rhs = 1;
    std::string name;
  };
  std::vector<Row> capacity;
  std::vector<std::vector<int>> rows_of_offer;        // capacity rows containing each offer
  std::vector<std::vector<int>> offers_by_cost;       // per demand: offer indices, (cost, id) ascending

  int num_demands() const { return instance->num_demands(); }
  int num_offers() const { return instance->num_offers(); }
};

// Builds the model from a conflict graph. With classes = true the
// instance must use class offers and a total class map (rhs = class
// sizes); with classes = false it must be a plain instance. Throws
// std::invalid_argument on a mismatch.
IlpModel build_model(const Instance& instance, const OfferConflictGraph& graph,
                     Formulation formulation, bool classes);

// CPLEX LP text. Variables are named x_<offerid> (non-alphanumeric
// characters replaced by '_'), assignment rows d_<demandid>.
std::string export_lp(const IlpModel& model);

// Column-aligned MPS. Names longer than the historical 8 characters widen
// their field; modern readers accept this.
std::string export_mps(const IlpModel& model);

}  // namespace moap
