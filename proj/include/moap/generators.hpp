#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "moap/core.hpp"

namespace moap {

// Artificial instance family: mixed fleet of four vehicle categories,
// demands with alternative dates, taxi fallback and optional public
// transport offers. Times are integer hours on a four-week horizon.
struct AgParams {
  int num_demands = 200;
  double fleet_utilization = 0.20;   // P_u
  double vehicle_acceptance = 0.6;   // P_a
  double long_demand_prob = 0.02;    // P_l
  std::uint64_t seed = 0;
};

// Deterministic per-category fleet sizes for the given parameters.
std::vector<int> ag_fleet_sizes(const AgParams& params);

Instance generate_ag(const AgParams& params);

// Company-week instance family: employees with weekly schedules, demands
// as office-to-office tours, one offer per accepted transport mode (and
// per vehicle for the limited modes). Vehicles carry a class map, so the
// class model applies. Times are integer minutes.
struct RwParams {
  int employees = 500;
  double nu = 0.05;  // fleet fraction: each limited mode gets DU[0, floor(nu*|P|)] vehicles
  std::uint64_t seed = 0;
};

Instance generate_rw(const RwParams& params);

// Interval scheduling with machine availabilities, used as an adversarial
// test-instance source: one demand per job, a zero-cost offer per machine
// whose availability contains the job, plus a cost-1 fallback per demand.
// The schedule exists iff the optimum is below 1.
struct IsmaInstance {
  std::vector<TimeInterval> machines;  // availability [a, b]
  std::vector<TimeInterval> jobs;      // processing [s, f]
};

Instance reduce_isma_to_moap(const IsmaInstance& isma);

// Text format: one interval per line, "machine <a> <b>" or "job <s> <f>"
// ('m'/'j' abbreviations allowed, '#' comments).
IsmaInstance parse_isma(const std::string& text);

}  // namespace moap
