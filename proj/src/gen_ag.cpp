#include <algorithm>
#include <cmath>
#include <cstdio>

#include "moap/generators.hpp"
#include "moap/rng.hpp"

namespace moap {

namespace {

constexpr Tick kHorizonHours = 672;  // four weeks
constexpr double kCategoryPortion[4] = {0.15, 0.35, 0.35, 0.15};
constexpr int kCategoryCostFactor[4] = {2, 3, 4, 7};
// Calibration constant of the fleet-size formula; reproduces the sixteen
// published (|D|, P_u) fleet sizes exactly.
constexpr double kFleetCalibration = 0.447;

std::string pad(int value, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%0*d", width, value);
  return buf;
}

double expected_duration(double long_prob) {
  return (1.0 - long_prob) * (1 + 6) / 2.0 +
         long_prob * (7 + static_cast<double>(kHorizonHours)) / 2.0;
}

}  // namespace

std::vector<int> ag_fleet_sizes(const AgParams& p) {
  const double expected = static_cast<double>(p.num_demands) * expected_duration(p.long_demand_prob) *
                          kFleetCalibration /
                          (static_cast<double>(kHorizonHours) * p.fleet_utilization);
  std::vector<int> sizes(4);
  for (int c = 0; c < 4; ++c)
    sizes[static_cast<std::size_t>(c)] =
        static_cast<int>(std::ceil(kCategoryPortion[c] * expected));
  return sizes;
}

Instance generate_ag(const AgParams& params) {
  const Rng master(params.seed);
  Instance inst;

  const std::vector<int> fleet = ag_fleet_sizes(params);
  std::vector<int> category_of_vehicle;
  for (int c = 0; c < 4; ++c)
    for (int i = 0; i < fleet[static_cast<std::size_t>(c)]; ++i) {
      inst.vehicles.push_back("v" + pad(static_cast<int>(inst.vehicles.size()) + 1, 3));
      category_of_vehicle.push_back(c);
    }
  inst.vehicle_class.assign(inst.vehicles.size(), -1);

  const int id_width = std::max(4, static_cast<int>(std::to_string(params.num_demands).size()));

  for (int di = 0; di < params.num_demands; ++di) {
    Rng rng = master.fork("demand", static_cast<std::uint64_t>(di));
    const std::string did = "d" + pad(di + 1, id_width);

    const int min_cat = static_cast<int>(rng.weighted_index(
        {kCategoryPortion[0], kCategoryPortion[1], kCategoryPortion[2], kCategoryPortion[3]}));
    const bool is_long = rng.bernoulli(params.long_demand_prob);
    const Tick duration = is_long ? rng.uniform_int(7, kHorizonHours) : rng.uniform_int(1, 6);
    const double cost_per_time = static_cast<double>(rng.uniform_int(10, 30));
    // Demands spread over the four-week horizon; the relative start date
    // places each absence interval within the demand's week.
    const Tick week_anchor = 168 * rng.uniform_int(0, 3);

    Demand demand;
    demand.id = did;
    std::vector<Offer> offers;

    for (int v = 0; v < static_cast<int>(inst.vehicles.size()); ++v) {
      const int cat = category_of_vehicle[static_cast<std::size_t>(v)];
      if (cat < min_cat) continue;
      if (!rng.bernoulli(params.vehicle_acceptance)) continue;
      const int intervals = static_cast<int>(rng.uniform_int(1, 3));
      std::vector<Tick> starts;
      for (int k = 0; k < intervals; ++k) {
        Tick start;
        do {
          start = week_anchor + rng.uniform_int(2, 168);
        } while (std::find(starts.begin(), starts.end(), start) != starts.end());
        starts.push_back(start);
        Offer o;
        o.id = did + "_" + inst.vehicles[static_cast<std::size_t>(v)] + "_" + std::to_string(k);
        o.interval = {start, start + duration};
        o.cost = cost_per_time * static_cast<double>(duration) *
                 static_cast<double>(kCategoryCostFactor[cat]);
        o.resource = Resource::vehicle(v);
        offers.push_back(std::move(o));
      }
    }

    const double base_cost = cost_per_time * static_cast<double>(duration) *
                             static_cast<double>(kCategoryCostFactor[min_cat]);
    {
      // Taxi fallback: always present, so instances stay feasible.
      const Tick start = week_anchor + rng.uniform_int(2, 168);
      const double pct = static_cast<double>(rng.uniform_int(300, 600));
      Offer o;
      o.id = did + "_taxi";
      o.interval = {start, start + duration};
      o.cost = base_cost * pct / 100.0;
      offers.push_back(std::move(o));
    }
    if (rng.bernoulli(0.5)) {
      const Tick start = week_anchor + rng.uniform_int(2, 168);
      const double pct = static_cast<double>(rng.uniform_int(100, 300));
      Offer o;
      o.id = did + "_pt";
      o.interval = {start, start + duration};
      o.cost = base_cost * pct / 100.0;
      offers.push_back(std::move(o));
    }

    std::sort(offers.begin(), offers.end(),
              [](const Offer& a, const Offer& b) { return a.id < b.id; });
    for (auto& o : offers) {
      o.demand = di;
      demand.offers.push_back(static_cast<int>(inst.offers.size()));
      inst.offers.push_back(std::move(o));
    }
    inst.demands.push_back(std::move(demand));
  }

  inst.meta["generator"] = "ag";
  inst.meta["time_unit"] = "hours";
  inst.meta["demands"] = std::to_string(params.num_demands);
  inst.meta["pu"] = std::to_string(params.fleet_utilization);
  inst.meta["pa"] = std::to_string(params.vehicle_acceptance);
  inst.meta["pl"] = std::to_string(params.long_demand_prob);
  inst.meta["seed"] = std::to_string(params.seed);
  inst.meta["horizon_hours"] = std::to_string(kHorizonHours);
  inst.meta["fleet"] = std::to_string(fleet[0]) + "/" + std::to_string(fleet[1]) + "/" +
                       std::to_string(fleet[2]) + "/" + std::to_string(fleet[3]);
  inst.meta["note"] = "per-demand week anchor plus relative start DU[2,168]";
  inst.rebuild_indexes();
  return inst;
}

}  // namespace moap
