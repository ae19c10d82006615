#include <algorithm>
#include <cmath>
#include <cstdio>

#include "moap/generators.hpp"
#include "moap/rng.hpp"

namespace moap {

namespace {

constexpr int kMinutesPerDay = 1440;

// Transport mode table. Speeds in km/h, distance cost per km, time cost
// per minute (gross salary incl. employer costs), emissions in g/km,
// setup in seconds, aerial-to-road sloping factor. Limited modes form one
// vehicle class each; foot, public transport and taxi are unlimited.
struct Mode {
  const char* name;
  double speed_kmh;
  double cost_per_km;
  double cost_per_min;
  double emissions_g_km;
  double setup_s;
  double sloping;
  bool limited;
};

constexpr Mode kModes[] = {
    {"foot", 5.0, 0.00, 0.5, 0.0, 0.0, 1.3, false},
    {"pt", 20.0, 0.25, 0.5, 35.0, 300.0, 1.5, false},
    {"taxi", 30.0, 1.60, 0.5, 160.0, 300.0, 1.4, false},
    {"bike", 16.0, 0.05, 0.5, 0.0, 120.0, 1.3, true},
    {"bev_smart", 30.0, 0.35, 0.5, 15.0, 600.0, 1.4, true},
    {"bev_leaf", 30.0, 0.40, 0.5, 17.0, 600.0, 1.4, true},
    {"bev_imiev", 30.0, 0.38, 0.5, 16.0, 600.0, 1.4, true},
    {"icev_small", 30.0, 0.45, 0.5, 140.0, 600.0, 1.4, true},
    {"icev_large", 30.0, 0.60, 0.5, 190.0, 600.0, 1.4, true},
};
constexpr int kNumModes = static_cast<int>(sizeof(kModes) / sizeof(kModes[0]));
constexpr int kFoot = 0, kPt = 1, kTaxi = 2, kBike = 3;
constexpr int kIcevSmall = 7, kIcevLarge = 8;
constexpr double kCo2EuroPerGram = 5.0 / 1e6;  // 5 Euro per ton

// Salary share rebated on legs that are neither work->meeting nor
// meeting->work (travel on the employee's own time).
constexpr double kSalaryRebate = 0.8;

// Mode-acceptance combinations. Licensed employees draw from the first
// five, unlicensed from the last two.
struct Combo {
  std::vector<int> modes;
  bool pick_one_icev = false;
  bool pick_one_bev = false;
};

enum EventType { kWork, kMeeting, kPrivate, kHome };

struct Event {
  EventType type;
  int location;
  Tick arrive;  // latest arrival, minutes
  Tick depart;  // earliest departure
};

struct Employee {
  bool female = false;
  int hierarchy = 2;  // 0 boss, 1 middle, 2 worker
  int office = 0;     // location index
  int home = 0;
  Tick work_start = 480;   // minutes into a day
  Tick work_minutes = 480;
  std::vector<bool> accepts;  // per mode
};

struct Location {
  double x, y;
};

// 250 grid points over a 20x20 km square with central density peaks:
// residential weights fall off with radius 6 km, office weights with 3 km.
void build_locations(std::vector<Location>& locations, std::vector<double>& home_weight,
                     std::vector<double>& office_weight) {
  for (int gy = 0; gy < 16 && static_cast<int>(locations.size()) < 250; ++gy)
    for (int gx = 0; gx < 16 && static_cast<int>(locations.size()) < 250; ++gx) {
      const double x = (gx + 0.5) * 20.0 / 16.0;
      const double y = (gy + 0.5) * 20.0 / 16.0;
      locations.push_back({x, y});
      const double r = std::hypot(x - 10.0, y - 10.0);
      home_weight.push_back(std::exp(-r / 6.0));
      office_weight.push_back(std::exp(-r / 3.0));
    }
}

double aerial_km(const Location& a, const Location& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

Tick travel_minutes(const std::vector<Location>& locations, int from, int to, int mode) {
  const double d = aerial_km(locations[static_cast<std::size_t>(from)],
                             locations[static_cast<std::size_t>(to)]) *
                   kModes[mode].sloping;
  return static_cast<Tick>(std::llround(d / kModes[mode].speed_kmh * 60.0));
}

// c_d * d + c_t * t + emissions * d * c_e for one leg.
double leg_cost(const std::vector<Location>& locations, int from, int to, int mode) {
  const Mode& m = kModes[mode];
  const double d = aerial_km(locations[static_cast<std::size_t>(from)],
                             locations[static_cast<std::size_t>(to)]) * m.sloping;
  const double t = static_cast<double>(travel_minutes(locations, from, to, mode));
  return m.cost_per_km * d + m.cost_per_min * t + m.emissions_g_km * d * kCo2EuroPerGram;
}

std::string pad(int value, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%0*d", width, value);
  return buf;
}

}  // namespace

Instance generate_rw(const RwParams& params) {
  const Rng master(params.seed);
  Instance inst;

  std::vector<Location> locations;
  std::vector<double> home_weight, office_weight;
  build_locations(locations, home_weight, office_weight);

  // Company: two depots from the office distribution, and per limited
  // mode DU[0, floor(nu |P|)] vehicles forming one class.
  Rng company = master.fork("company");
  int depot_a = static_cast<int>(company.weighted_index(office_weight));
  int depot_b = depot_a;
  while (depot_b == depot_a) depot_b = static_cast<int>(company.weighted_index(office_weight));
  const int depots[2] = {depot_a, depot_b};

  const auto fleet_cap = static_cast<std::int64_t>(std::floor(params.nu * params.employees));
  std::vector<int> fleet_of_mode(kNumModes, 0);
  for (int k = 0; k < kNumModes; ++k) {
    if (!kModes[k].limited) continue;
    fleet_of_mode[static_cast<std::size_t>(k)] =
        static_cast<int>(company.uniform_int(0, fleet_cap));
    inst.classes.push_back(kModes[k].name);
  }
  std::sort(inst.classes.begin(), inst.classes.end());
  for (int k = 0; k < kNumModes; ++k) {
    if (!kModes[k].limited) continue;
    const int w = static_cast<int>(
        std::lower_bound(inst.classes.begin(), inst.classes.end(), kModes[k].name) -
        inst.classes.begin());
    for (int i = 0; i < fleet_of_mode[static_cast<std::size_t>(k)]; ++i) {
      inst.vehicles.push_back(std::string(kModes[k].name) + "_" + pad(i + 1, 3));
      inst.vehicle_class.push_back(w);
    }
  }
  {
    // Vehicles must be id-sorted; class names are distinct prefixes so a
    // plain sort keeps per-class blocks together.
    std::vector<std::pair<std::string, int>> tmp;
    for (std::size_t i = 0; i < inst.vehicles.size(); ++i)
      tmp.emplace_back(inst.vehicles[i], inst.vehicle_class[i]);
    std::sort(tmp.begin(), tmp.end());
    for (std::size_t i = 0; i < tmp.size(); ++i) {
      inst.vehicles[i] = tmp[i].first;
      inst.vehicle_class[i] = tmp[i].second;
    }
  }

  std::vector<int> vehicles_of_mode_first(kNumModes, -1), vehicles_of_mode_count(kNumModes, 0);
  for (int k = 0; k < kNumModes; ++k) {
    if (!kModes[k].limited || fleet_of_mode[static_cast<std::size_t>(k)] == 0) continue;
    const auto it = std::lower_bound(inst.vehicles.begin(), inst.vehicles.end(),
                                     std::string(kModes[k].name) + "_");
    vehicles_of_mode_first[static_cast<std::size_t>(k)] =
        static_cast<int>(it - inst.vehicles.begin());
    vehicles_of_mode_count[static_cast<std::size_t>(k)] = fleet_of_mode[static_cast<std::size_t>(k)];
  }

  const int id_width = std::max(4, static_cast<int>(std::to_string(params.employees).size()));

  for (int pi = 0; pi < params.employees; ++pi) {
    Rng rng = master.fork("employee", static_cast<std::uint64_t>(pi));
    Employee emp;
    emp.female = rng.bernoulli(0.4678);
    emp.hierarchy = static_cast<int>(rng.weighted_index({0.01, 0.10, 0.89}));
    emp.office = depots[rng.uniform_int(0, 1)];
    emp.home = static_cast<int>(rng.weighted_index(home_weight));
    emp.work_start = static_cast<Tick>(std::llround(rng.triangular(300, 480, 660)));
    const double base_hours[3] = {9.5, 8.5, 8.0};
    emp.work_minutes = static_cast<Tick>(std::llround(base_hours[emp.hierarchy] * 60.0)) +
                       (emp.female ? -30 : 0) + rng.uniform_int(-60, 60);

    // Accepted transport modes: seven combinations, license-dependent.
    const double license_prob = emp.female ? 0.85 : 0.92;
    const bool licensed = rng.bernoulli(license_prob);
    emp.accepts.assign(kNumModes, false);
    emp.accepts[kFoot] = emp.accepts[kTaxi] = true;
    if (licensed) {
      const int combo = static_cast<int>(rng.weighted_index({0.26, 0.20, 0.16, 0.10, 0.08, 0.20}));
      switch (combo) {
        case 0:  // one ICEV model
          emp.accepts[kPt] = true;
          emp.accepts[kIcevSmall + rng.uniform_int(0, 1)] = true;
          break;
        case 1:  // one BEV model
          emp.accepts[kPt] = true;
          emp.accepts[4 + rng.uniform_int(0, 2)] = true;
          break;
        case 2:  // bike plus one ICEV model
          emp.accepts[kBike] = true;
          emp.accepts[kIcevSmall + rng.uniform_int(0, 1)] = true;
          break;
        case 3:  // all BEV models
          emp.accepts[kPt] = emp.accepts[4] = emp.accepts[5] = emp.accepts[6] = true;
          break;
        case 4:  // everything
          for (int k = 0; k < kNumModes; ++k) emp.accepts[static_cast<std::size_t>(k)] = true;
          break;
        default:  // public transport only
          emp.accepts[kPt] = true;
          break;
      }
    } else {
      if (rng.bernoulli(0.4)) {
        emp.accepts[kPt] = true;  // eco: bike and public transport
        emp.accepts[kBike] = true;
      } else {
        emp.accepts[kPt] = true;
      }
    }

    // Weekly schedule: meetings inside work hours on weekdays, private
    // events in the morning / evening, weekends private only.
    const double meeting_minutes_per_day[3] = {210, 120, 45};
    std::vector<std::vector<Event>> meetings_by_day(5);
    std::vector<std::vector<Event>> privates_by_day(7);
    for (int day = 0; day < 7; ++day) {
      Rng ev = rng.fork("events", static_cast<std::uint64_t>(day));
      const Tick day0 = static_cast<Tick>(day) * kMinutesPerDay;
      const bool workday = day < 5;
      const Tick ws = day0 + emp.work_start;
      const Tick we = ws + emp.work_minutes;

      if (ev.bernoulli(0.20)) {  // morning private, 60 minutes
        const Tick start = workday ? ws - 90 : day0 + 540;
        privates_by_day[static_cast<std::size_t>(day)].push_back(
            {kPrivate, static_cast<int>(ev.weighted_index(home_weight)), start, start + 60});
      }
      if (workday) {
        double remaining = meeting_minutes_per_day[emp.hierarchy];
        while (remaining >= 30) {
          const Tick dur = 30 + 15 * ev.uniform_int(0, 10);
          if (static_cast<double>(dur) > remaining) break;
          const Tick latest = emp.work_minutes - dur;
          if (latest < 0) break;
          bool placed = false;
          for (int attempt = 0; attempt < 10 && !placed; ++attempt) {
            const Tick start = ws + 15 * ev.uniform_int(0, latest / 15);
            const TimeInterval cand{start, start + dur};
            bool clash = false;
            for (const auto& m : meetings_by_day[static_cast<std::size_t>(day)])
              if (cand.overlaps({m.arrive, m.depart})) {
                clash = true;
                break;
              }
            if (!clash) {
              meetings_by_day[static_cast<std::size_t>(day)].push_back(
                  {kMeeting, static_cast<int>(ev.weighted_index(office_weight)), start,
                   start + dur});
              placed = true;
            }
          }
          if (!placed) break;
          remaining -= static_cast<double>(dur);
        }
      }
      if (ev.bernoulli(0.65)) {  // evening private, 120 minutes
        const Tick start = workday ? we + 30 + ev.uniform_int(0, 90) : day0 + 1080 + ev.uniform_int(0, 60);
        privates_by_day[static_cast<std::size_t>(day)].push_back(
            {kPrivate, static_cast<int>(ev.weighted_index(home_weight)), start, start + 120});
      }
    }

    // Demands. Meeting tours: office -> meeting -> office.
    const std::string pid = "p" + pad(pi + 1, id_width);
    int demand_seq = 0;
    std::vector<std::pair<std::string, std::vector<Event>>> tours;
    for (int day = 0; day < 5; ++day) {
      auto meetings = meetings_by_day[static_cast<std::size_t>(day)];
      std::sort(meetings.begin(), meetings.end(),
                [](const Event& a, const Event& b) { return a.arrive < b.arrive; });
      for (const auto& m : meetings)
        tours.emplace_back(pid + "_d" + pad(++demand_seq, 2), std::vector<Event>{m});
    }

    // Overnight tours between consecutive work blocks; the Friday tour
    // spans the weekend and ends at a Monday-morning anchor (day 7).
    const int work_days[6] = {0, 1, 2, 3, 4, 7};
    for (int i = 0; i + 1 < 6; ++i) {
      const int from_day = work_days[i];
      const int to_day = work_days[i + 1];
      const Tick leave = static_cast<Tick>(from_day) * kMinutesPerDay + emp.work_start + emp.work_minutes;
      const Tick back = static_cast<Tick>(to_day) * kMinutesPerDay + emp.work_start;

      std::vector<Event> privates;
      for (int day = from_day; day <= std::min(to_day, 6); ++day)
        for (const auto& pe : privates_by_day[static_cast<std::size_t>(day)])
          if (pe.arrive > leave && pe.depart < back) privates.push_back(pe);
      std::sort(privates.begin(), privates.end(),
                [](const Event& a, const Event& b) { return a.arrive < b.arrive; });

      // Insert a home stay into every gap that crosses midnight.
      std::vector<Event> inner;
      Tick prev_depart = leave;
      for (std::size_t e = 0; e <= privates.size(); ++e) {
        const Tick next_arrive = e < privates.size() ? privates[e].arrive : back;
        if (next_arrive / kMinutesPerDay > prev_depart / kMinutesPerDay) {
          const Tick home_arrive = prev_depart + 30;
          inner.push_back(
              {kHome, emp.home, home_arrive, std::max(home_arrive + 1, next_arrive - 30)});
        }
        if (e < privates.size()) {
          inner.push_back(privates[e]);
          prev_depart = privates[e].depart;
        }
      }
      tours.emplace_back(pid + "_d" + pad(++demand_seq, 2), std::move(inner));
    }

    // Offers: one per accepted unlimited mode, one per vehicle of each
    // accepted limited mode.
    for (auto& [did, inner] : tours) {
      if (inner.empty()) continue;
      Demand demand;
      demand.id = did;
      std::vector<Offer> offers;
      for (int k = 0; k < kNumModes; ++k) {
        if (!emp.accepts[static_cast<std::size_t>(k)]) continue;
        if (kModes[k].limited && vehicles_of_mode_count[static_cast<std::size_t>(k)] == 0) continue;

        const Tick setup_half = static_cast<Tick>(std::llround(kModes[k].setup_s / 120.0));
        const Tick t_out = travel_minutes(locations, emp.office, inner.front().location, k);
        const Tick t_back = travel_minutes(locations, inner.back().location, emp.office, k);
        const TimeInterval interval{inner.front().arrive - t_out - setup_half,
                                    inner.back().depart + t_back + setup_half};

        double cost = kModes[k].setup_s / 60.0 * kModes[k].cost_per_min;  // C_S
        int prev_loc = emp.office;
        EventType prev_type = kWork;
        for (std::size_t e = 0; e <= inner.size(); ++e) {
          const int next_loc = e < inner.size() ? inner[e].location : emp.office;
          const EventType next_type = e < inner.size() ? inner[e].type : kWork;
          const bool work_meeting = (prev_type == kWork && next_type == kMeeting) ||
                                    (prev_type == kMeeting && next_type == kWork);
          cost += leg_cost(locations, prev_loc, next_loc, k);
          if (!work_meeting)
            cost -= kSalaryRebate * static_cast<double>(travel_minutes(locations, prev_loc, next_loc, k)) *
                    kModes[k].cost_per_min;
          prev_loc = next_loc;
          prev_type = next_type;
        }

        if (!kModes[k].limited) {
          Offer o;
          o.id = did + "_" + kModes[k].name;
          o.interval = interval;
          o.cost = cost;
          offers.push_back(std::move(o));
        } else {
          const int first = vehicles_of_mode_first[static_cast<std::size_t>(k)];
          for (int i = 0; i < vehicles_of_mode_count[static_cast<std::size_t>(k)]; ++i) {
            Offer o;
            o.id = did + "_" + inst.vehicles[static_cast<std::size_t>(first + i)];
            o.interval = interval;
            o.cost = cost;
            o.resource = Resource::vehicle(first + i);
            offers.push_back(std::move(o));
          }
        }
      }
      if (offers.empty()) continue;
      std::sort(offers.begin(), offers.end(),
                [](const Offer& a, const Offer& b) { return a.id < b.id; });
      const int dindex = static_cast<int>(inst.demands.size());
      for (auto& o : offers) {
        o.demand = dindex;
        demand.offers.push_back(static_cast<int>(inst.offers.size()));
        inst.offers.push_back(std::move(o));
      }
      inst.demands.push_back(std::move(demand));
    }
  }

  inst.meta["generator"] = "rw";
  inst.meta["time_unit"] = "minutes";
  inst.meta["employees"] = std::to_string(params.employees);
  inst.meta["nu"] = std::to_string(params.nu);
  inst.meta["seed"] = std::to_string(params.seed);
  inst.meta["locations"] = "250 grid points, 20x20 km, radial density (home 6 km, office 3 km)";
  inst.meta["modes"] = "foot/pt/taxi unlimited; bike, 3 BEV models, 2 ICEV sizes as classes";
  inst.meta["note"] = "per-vehicle offers with a total vehicle->class map";
  inst.rebuild_indexes();
  return inst;
}

}  // namespace moap
