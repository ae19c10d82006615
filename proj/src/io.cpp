#include "moap/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace moap {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string id_of(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  throw std::runtime_error("id must be a string or integer");
}

}  // namespace

ParseResult parse_instance(const std::string& json_text) {
  ParseResult result;
  auto issue = [&](std::string msg) { result.issues.push_back({std::move(msg)}); };

  json root;
  try {
    root = json::parse(json_text);
  } catch (const std::exception& e) {
    issue(std::string("invalid JSON: ") + e.what());
    return result;
  }
  if (!root.is_object() || !root.contains("demands") || !root["demands"].is_array()) {
    issue("instance must be an object with a 'demands' array");
    return result;
  }

  Instance inst;
  try {
    if (root.contains("meta") && root["meta"].is_object()) {
      for (auto it = root["meta"].begin(); it != root["meta"].end(); ++it) {
        const json& v = it.value();
        inst.meta[it.key()] = v.is_string() ? v.get<std::string>() : v.dump();
      }
    }

    struct RawVehicle {
      std::string id;
      std::string cls;  // empty = none
    };
    std::vector<RawVehicle> vehicles;
    if (root.contains("vehicles")) {
      for (const json& jv : root["vehicles"]) {
        RawVehicle v;
        if (jv.is_object()) {
          v.id = id_of(jv.at("id"));
          if (jv.contains("class") && !jv["class"].is_null()) v.cls = id_of(jv["class"]);
        } else {
          v.id = id_of(jv);
        }
        vehicles.push_back(std::move(v));
      }
    }
    std::sort(vehicles.begin(), vehicles.end(),
              [](const RawVehicle& a, const RawVehicle& b) { return a.id < b.id; });
    for (std::size_t i = 0; i + 1 < vehicles.size(); ++i)
      if (vehicles[i].id == vehicles[i + 1].id) issue("duplicate vehicle id: " + vehicles[i].id);

    std::set<std::string> class_ids;
    for (const auto& v : vehicles)
      if (!v.cls.empty()) class_ids.insert(v.cls);
    // If any vehicle declares a class, the map must be total.
    if (!class_ids.empty()) {
      for (const auto& v : vehicles)
        if (v.cls.empty()) issue("vehicle without class in a class-model instance: " + v.id);
    }
    inst.classes.assign(class_ids.begin(), class_ids.end());
    for (const auto& v : vehicles) {
      inst.vehicles.push_back(v.id);
      int cidx = -1;
      if (!v.cls.empty())
        cidx = static_cast<int>(std::lower_bound(inst.classes.begin(), inst.classes.end(), v.cls) -
                                inst.classes.begin());
      inst.vehicle_class.push_back(cidx);
    }

    struct RawOffer {
      std::string id;
      std::string demand_id;
      Tick start = 0, end = 0;
      double cost = 0;
      std::string vehicle;  // empty = none
      std::string cls;      // empty = none
    };
    struct RawDemand {
      std::string id;
      std::vector<RawOffer> offers;
    };
    std::vector<RawDemand> demands;
    for (const json& jd : root["demands"]) {
      RawDemand d;
      d.id = id_of(jd.at("id"));
      if (jd.contains("offers") && jd["offers"].is_array()) {
        for (const json& jo : jd["offers"]) {
          RawOffer o;
          o.id = id_of(jo.at("id"));
          o.demand_id = d.id;
          if (!jo.at("start").is_number_integer() || !jo.at("end").is_number_integer())
            issue("offer " + o.id + ": start/end must be integer ticks");
          else {
            o.start = jo["start"].get<Tick>();
            o.end = jo["end"].get<Tick>();
          }
          o.cost = jo.at("cost").get<double>();
          if (jo.contains("vehicle") && !jo["vehicle"].is_null()) o.vehicle = id_of(jo["vehicle"]);
          if (jo.contains("class") && !jo["class"].is_null()) o.cls = id_of(jo["class"]);
          if (!o.vehicle.empty() && !o.cls.empty())
            issue("offer " + o.id + ": both vehicle and class given");
          d.offers.push_back(std::move(o));
        }
      }
      demands.push_back(std::move(d));
    }

    std::sort(demands.begin(), demands.end(),
              [](const RawDemand& a, const RawDemand& b) { return a.id < b.id; });
    for (std::size_t i = 0; i + 1 < demands.size(); ++i)
      if (demands[i].id == demands[i + 1].id) issue("duplicate demand id: " + demands[i].id);

    std::set<std::string> offer_ids;
    for (auto& d : demands) {
      if (d.offers.empty()) issue("empty demand: " + d.id);
      std::sort(d.offers.begin(), d.offers.end(),
                [](const RawOffer& a, const RawOffer& b) { return a.id < b.id; });
      for (std::size_t i = 0; i + 1 < d.offers.size(); ++i)
        if (d.offers[i].id == d.offers[i + 1].id)
          issue("duplicate offer id in demand " + d.id + ": " + d.offers[i].id);
      for (const auto& o : d.offers) {
        if (!offer_ids.insert(o.id).second) issue("duplicate offer id: " + o.id);
        if (o.start >= o.end)
          issue("degenerate interval on offer " + o.id + ": [" + std::to_string(o.start) +
                "," + std::to_string(o.end) + ")");
        if (!(o.cost >= 0.0) || !std::isfinite(o.cost)) {
          if (std::isfinite(o.cost))
            issue("negative cost on offer " + o.id);
          else
            issue("non-finite cost on offer " + o.id);
        }
        if (!o.vehicle.empty() &&
            !std::binary_search(inst.vehicles.begin(), inst.vehicles.end(), o.vehicle))
          issue("dangling reference: offer " + o.id + " uses unknown vehicle " + o.vehicle);
        if (!o.cls.empty() &&
            !std::binary_search(inst.classes.begin(), inst.classes.end(), o.cls))
          issue("dangling reference: offer " + o.id + " uses unknown class " + o.cls);
      }
    }

    if (!result.issues.empty()) return result;

    for (const auto& d : demands) {
      Demand dd;
      dd.id = d.id;
      for (const auto& o : d.offers) {
        Offer off;
        off.id = o.id;
        off.demand = static_cast<int>(inst.demands.size());
        off.interval = {o.start, o.end};
        off.cost = o.cost;
        if (!o.vehicle.empty()) {
          const auto it = std::lower_bound(inst.vehicles.begin(), inst.vehicles.end(), o.vehicle);
          off.resource = Resource::vehicle(static_cast<int>(it - inst.vehicles.begin()));
        } else if (!o.cls.empty()) {
          const auto it = std::lower_bound(inst.classes.begin(), inst.classes.end(), o.cls);
          off.resource = Resource::vehicle_class(static_cast<int>(it - inst.classes.begin()));
        }
        dd.offers.push_back(static_cast<int>(inst.offers.size()));
        inst.offers.push_back(std::move(off));
      }
      inst.demands.push_back(std::move(dd));
    }
  } catch (const std::exception& e) {
    issue(std::string("malformed instance: ") + e.what());
    return result;
  }

  inst.rebuild_indexes();
  result.instance = std::move(inst);
  return result;
}

ParseResult read_instance(const std::string& path) { return parse_instance(slurp(path)); }

std::string write_instance(const Instance& instance) {
  ordered_json root;
  ordered_json meta = ordered_json::object();
  for (const auto& [k, v] : instance.meta) meta[k] = v;  // std::map: sorted keys
  root["meta"] = std::move(meta);

  ordered_json vehicles = ordered_json::array();
  for (std::size_t v = 0; v < instance.vehicles.size(); ++v) {
    ordered_json jv;
    jv["id"] = instance.vehicles[v];
    if (instance.vehicle_class[v] >= 0)
      jv["class"] = instance.classes[static_cast<std::size_t>(instance.vehicle_class[v])];
    vehicles.push_back(std::move(jv));
  }
  root["vehicles"] = std::move(vehicles);

  ordered_json demands = ordered_json::array();
  for (const auto& d : instance.demands) {
    ordered_json jd;
    jd["id"] = d.id;
    ordered_json offers = ordered_json::array();
    for (int oi : d.offers) {
      const Offer& o = instance.offers[static_cast<std::size_t>(oi)];
      ordered_json jo;
      jo["id"] = o.id;
      jo["start"] = o.interval.start;
      jo["end"] = o.interval.end;
      jo["cost"] = o.cost;
      switch (o.resource.kind) {
        case ResourceKind::None:
          jo["vehicle"] = nullptr;
          break;
        case ResourceKind::Vehicle:
          jo["vehicle"] = instance.vehicles[static_cast<std::size_t>(o.resource.index)];
          break;
        case ResourceKind::VehicleClass:
          jo["class"] = instance.classes[static_cast<std::size_t>(o.resource.index)];
          break;
      }
      offers.push_back(std::move(jo));
    }
    jd["offers"] = std::move(offers);
    demands.push_back(std::move(jd));
  }
  root["demands"] = std::move(demands);

  return root.dump(2) + "\n";
}

void write_instance_file(const Instance& instance, const std::string& path) {
  spit(path, write_instance(instance));
}

std::string write_solution(const Instance& instance, const Solution& solution,
                           const SolutionInfo& info) {
  ordered_json root;
  root["objective"] = solution.objective;
  ordered_json sel = ordered_json::object();
  for (int d = 0; d < instance.num_demands(); ++d) {
    const int o = solution.selection.empty() ? -1 : solution.selection[static_cast<std::size_t>(d)];
    sel[instance.demands[static_cast<std::size_t>(d)].id] =
        o >= 0 ? ordered_json(instance.offers[static_cast<std::size_t>(o)].id) : ordered_json(nullptr);
  }
  root["selection"] = std::move(sel);
  if (solution.has_assignment()) {
    ordered_json va = ordered_json::object();
    for (int o = 0; o < instance.num_offers(); ++o) {
      const int v = solution.assigned_vehicle[static_cast<std::size_t>(o)];
      if (v >= 0)
        va[instance.offers[static_cast<std::size_t>(o)].id] = instance.vehicles[static_cast<std::size_t>(v)];
    }
    root["vehicle_assignment"] = std::move(va);
  }
  root["feasible"] = solution.feasible;
  root["solver"] = info.solver;
  root["runtime_ms"] = info.runtime_ms;
  if (info.has_seed) root["seed"] = info.seed;
  return root.dump(2) + "\n";
}

void write_solution_file(const Instance& instance, const Solution& solution,
                         const SolutionInfo& info, const std::string& path) {
  spit(path, write_solution(instance, solution, info));
}

Solution parse_solution(const Instance& instance, const std::string& json_text) {
  const json root = json::parse(json_text);
  Solution s;
  s.selection.assign(static_cast<std::size_t>(instance.num_demands()), -1);
  for (auto it = root.at("selection").begin(); it != root.at("selection").end(); ++it) {
    const auto d = instance.demand_index.find(it.key());
    if (d == instance.demand_index.end())
      throw std::runtime_error("solution references unknown demand " + it.key());
    if (it.value().is_null()) continue;
    const std::string oid = id_of(it.value());
    const auto o = instance.offer_index.find(oid);
    if (o == instance.offer_index.end())
      throw std::runtime_error("solution references unknown offer " + oid);
    s.selection[static_cast<std::size_t>(d->second)] = o->second;
  }
  if (root.contains("vehicle_assignment") && root["vehicle_assignment"].is_object()) {
    s.assigned_vehicle.assign(static_cast<std::size_t>(instance.num_offers()), -1);
    for (auto it = root["vehicle_assignment"].begin(); it != root["vehicle_assignment"].end(); ++it) {
      const auto o = instance.offer_index.find(it.key());
      const auto v = instance.vehicle_index.find(id_of(it.value()));
      if (o == instance.offer_index.end() || v == instance.vehicle_index.end())
        throw std::runtime_error("vehicle_assignment references unknown id " + it.key());
      s.assigned_vehicle[static_cast<std::size_t>(o->second)] = v->second;
    }
  }
  const Evaluation ev = evaluate(instance, s.selection,
                                 s.has_assignment() ? &s.assigned_vehicle : nullptr);
  s.objective = ev.objective;
  s.feasible = ev.feasible;
  return s;
}

Solution read_solution(const Instance& instance, const std::string& path) {
  return parse_solution(instance, slurp(path));
}

}  // namespace moap
