#pragma once

#include <stdexcept>
#include <string>

#include "moap/core.hpp"
#include "moap/io.hpp"

namespace moap::test {

// The worked three-demand, two-vehicle example: demand A has alternative
// dates on V1 plus a V2 offer and a no-vehicle offer; the vehicle
// conflicts are exactly (A2,C1), (A3,C2), (C2,B1), the demand conflicts
// {A,C} and {B,C}, and the unique optimum is {A3, B1, C1} = 120.
inline const char* kFig1Json = R"json({
  "meta": {"name": "fig1", "time_unit": "ticks"},
  "vehicles": [{"id": "V1"}, {"id": "V2"}],
  "demands": [
    {"id": "A", "offers": [
      {"id": "A1", "start": 125, "end": 325, "cost": 60, "vehicle": "V1"},
      {"id": "A2", "start": 700, "end": 900, "cost": 50, "vehicle": "V1"},
      {"id": "A3", "start": 100, "end": 350, "cost": 30, "vehicle": "V2"},
      {"id": "A4", "start": 100, "end": 350, "cost": 90, "vehicle": null}
    ]},
    {"id": "B", "offers": [
      {"id": "B1", "start": 650, "end": 950, "cost": 40, "vehicle": "V2"},
      {"id": "B2", "start": 700, "end": 1000, "cost": 100, "vehicle": null}
    ]},
    {"id": "C", "offers": [
      {"id": "C1", "start": 350, "end": 750, "cost": 50, "vehicle": "V1"},
      {"id": "C2", "start": 275, "end": 825, "cost": 45, "vehicle": "V2"},
      {"id": "C3", "start": 250, "end": 850, "cost": 120, "vehicle": null}
    ]}
  ]
})json";

inline Instance fig1() {
  ParseResult parsed = parse_instance(kFig1Json);
  if (!parsed.ok()) throw std::logic_error("fig1 fixture failed to parse");
  return std::move(*parsed.instance);
}

// Selection helper by external ids.
inline std::vector<int> selection_of(const Instance& inst,
                                     const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<int> sel(static_cast<std::size_t>(inst.num_demands()), -1);
  for (const auto& [d, o] : pairs)
    sel[static_cast<std::size_t>(inst.demand_index.at(d))] = inst.offer_index.at(o);
  return sel;
}

}  // namespace moap::test
