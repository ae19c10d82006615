#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "moap/alns.hpp"
#include "moap/core.hpp"
#include "moap/model.hpp"

namespace moap {

// One solver invocation, as named on the command line and in experiment
// specs: greedy | g1mw | bnb | bnb-classes | alns | lns-random | lns-time
// | lns-conflict.
struct SolverSpec {
  std::string name;    // row label; defaults to the method string
  std::string method = "greedy";
  SortCriterion criterion = SortCriterion::MaxMinCost;
  Formulation formulation = Formulation::Clique;
  double time_limit_s = -1;  // < 0: default (300 s, or the experiment-wide limit)
  std::int64_t iterations = -1;  // >= 0: deterministic mode for (A)LNS
  std::int64_t node_limit = -1;
  std::uint64_t seed = 0;
  bool warm_start = true;  // bnb: start from the MaxMinCost greedy solution
  std::string alns_config_json;  // optional overrides for (A)LNS runs
};

struct RunOutput {
  Solution solution;
  bool solved = false;      // a complete feasible solution was produced
  bool optimal = false;     // bnb proved optimality (or infeasibility)
  bool infeasible = false;  // bnb proved there is no feasible selection
  double bound = std::numeric_limits<double>::quiet_NaN();
  std::int64_t nodes = -1;
  std::int64_t runtime_ms = 0;
  bool deterministic = false;  // reproducible bit-for-bit given the seed
  std::vector<std::pair<double, double>> trace;  // ALNS convergence samples
  std::string error;  // nonempty when the run failed
};

// Runs one solver on one instance. Heuristics on class-offer instances
// work on the expanded plain instance and report selections lifted back.
// Never throws; failures land in RunOutput::error.
RunOutput run_solver(const Instance& instance, const SolverSpec& spec);

// Applies JSON overrides ({"sigma1": .., "cooling": .., ...}) over a base
// ALNS configuration; unknown keys are an error.
AlnsConfig alns_config_from_json(const std::string& json_text, AlnsConfig base);

// Parses a method object of an experiment spec.
SolverSpec solver_spec_from_json(const std::string& json_text);

}  // namespace moap
