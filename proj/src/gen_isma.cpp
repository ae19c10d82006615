#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "moap/generators.hpp"

namespace moap {

namespace {

std::string pad(int value, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%0*d", width, value);
  return buf;
}

}  // namespace

Instance reduce_isma_to_moap(const IsmaInstance& isma) {
  Instance inst;
  const int mwidth = 2, jwidth = 3;
  for (int m = 0; m < static_cast<int>(isma.machines.size()); ++m)
    inst.vehicles.push_back("m" + pad(m + 1, mwidth));
  inst.vehicle_class.assign(inst.vehicles.size(), -1);

  for (int j = 0; j < static_cast<int>(isma.jobs.size()); ++j) {
    const TimeInterval job = isma.jobs[static_cast<std::size_t>(j)];
    Demand d;
    d.id = "j" + pad(j + 1, jwidth);
    const int dindex = static_cast<int>(inst.demands.size());
    // Zero-cost offer on every machine whose availability contains the job.
    for (int m = 0; m < static_cast<int>(isma.machines.size()); ++m) {
      const TimeInterval avail = isma.machines[static_cast<std::size_t>(m)];
      if (job.start < avail.start || job.end > avail.end) continue;
      Offer o;
      o.id = d.id + "_m" + pad(m + 1, mwidth);
      o.demand = dindex;
      o.interval = job;
      o.cost = 0.0;
      o.resource = Resource::vehicle(m);
      d.offers.push_back(static_cast<int>(inst.offers.size()));
      inst.offers.push_back(std::move(o));
    }
    // Fallback marking the job as unscheduled.
    Offer skip;
    skip.id = d.id + "_skip";
    skip.demand = dindex;
    skip.interval = job;
    skip.cost = 1.0;
    d.offers.push_back(static_cast<int>(inst.offers.size()));
    inst.offers.push_back(std::move(skip));
    inst.demands.push_back(std::move(d));
  }

  inst.meta["generator"] = "isma";
  inst.meta["time_unit"] = "ticks";
  inst.meta["machines"] = std::to_string(isma.machines.size());
  inst.meta["jobs"] = std::to_string(isma.jobs.size());
  inst.rebuild_indexes();
  return inst;
}

IsmaInstance parse_isma(const std::string& text) {
  IsmaInstance isma;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    Tick a, b;
    if (!(ls >> a >> b) || a >= b)
      throw std::runtime_error("isma line " + std::to_string(lineno) + ": expected '<kind> <a> <b>' with a < b");
    if (kind == "machine" || kind == "m")
      isma.machines.push_back({a, b});
    else if (kind == "job" || kind == "j")
      isma.jobs.push_back({a, b});
    else
      throw std::runtime_error("isma line " + std::to_string(lineno) + ": unknown kind '" + kind + "'");
  }
  return isma;
}

}  // namespace moap
