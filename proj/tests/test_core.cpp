#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "moap/core.hpp"
#include "moap/generators.hpp"
#include "moap/io.hpp"
#include "moap/transforms.hpp"
#include "oracle.hpp"

using namespace moap;
using namespace moap::test;

TEST_CASE("interval semantics are half-open") {
  const TimeInterval a{0, 2}, b{2, 4}, c{1, 3};
  CHECK(!a.overlaps(b));
  CHECK(!b.overlaps(a));
  CHECK(a.overlaps(c));
  CHECK(c.overlaps(b));
  CHECK(a.duration() == 2);
}

TEST_CASE("fig1 fixture parses into a valid instance") {
  const Instance inst = fig1();
  CHECK(inst.num_demands() == 3);
  CHECK(inst.num_offers() == 9);
  CHECK(inst.vehicles.size() == 2);
  CHECK(inst.demand_index.at("A") == 0);
  CHECK(inst.offers[static_cast<std::size_t>(inst.offer_index.at("A3"))].resource ==
        Resource::vehicle(inst.vehicle_index.at("V2")));
}

TEST_CASE("validation reports each defect with the offending id") {
  SUBCASE("empty demand") {
    const auto r = parse_instance(R"({"demands": [{"id": "d1", "offers": []}]})");
    REQUIRE(!r.ok());
    CHECK(r.issues[0].message.find("empty demand") != std::string::npos);
    CHECK(r.issues[0].message.find("d1") != std::string::npos);
  }
  SUBCASE("degenerate interval") {
    const auto r = parse_instance(
        R"({"demands": [{"id": "d", "offers": [{"id": "o", "start": 5, "end": 5, "cost": 1}]}]})");
    REQUIRE(!r.ok());
    CHECK(r.issues[0].message.find("degenerate interval") != std::string::npos);
    CHECK(r.issues[0].message.find("o") != std::string::npos);
  }
  SUBCASE("negative cost") {
    const auto r = parse_instance(
        R"({"demands": [{"id": "d", "offers": [{"id": "o", "start": 0, "end": 1, "cost": -2}]}]})");
    REQUIRE(!r.ok());
    CHECK(r.issues[0].message.find("negative cost") != std::string::npos);
  }
  SUBCASE("dangling vehicle reference") {
    const auto r = parse_instance(
        R"({"vehicles": [{"id": "v1"}],
            "demands": [{"id": "d", "offers": [{"id": "o", "start": 0, "end": 1, "cost": 1, "vehicle": "v9"}]}]})");
    REQUIRE(!r.ok());
    CHECK(r.issues[0].message.find("dangling reference") != std::string::npos);
    CHECK(r.issues[0].message.find("v9") != std::string::npos);
  }
  SUBCASE("zero cost is legal") {
    const auto r = parse_instance(
        R"({"demands": [{"id": "d", "offers": [{"id": "o", "start": 0, "end": 1, "cost": 0}]}]})");
    CHECK(r.ok());
  }
}

TEST_CASE("evaluate on the fig1 selections") {
  const Instance inst = fig1();

  SUBCASE("feasible selection {A3,B1,C1}") {
    const auto ev = evaluate(inst, selection_of(inst, {{"A", "A3"}, {"B", "B1"}, {"C", "C1"}}));
    CHECK(ev.feasible);
    CHECK(ev.objective == doctest::Approx(120.0));
  }
  SUBCASE("feasible selection {A2,B2,C2}") {
    const auto ev = evaluate(inst, selection_of(inst, {{"A", "A2"}, {"B", "B2"}, {"C", "C2"}}));
    CHECK(ev.feasible);
  }
  SUBCASE("infeasible selection reports both overlap pairs") {
    const auto ev = evaluate(inst, selection_of(inst, {{"A", "A3"}, {"B", "B1"}, {"C", "C2"}}));
    CHECK(!ev.feasible);
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& v : ev.violations) {
      REQUIRE(v.kind == Violation::OverlapSameVehicle);
      pairs.emplace(inst.offers[static_cast<std::size_t>(v.a)].id,
                    inst.offers[static_cast<std::size_t>(v.b)].id);
    }
    CHECK(pairs == std::set<std::pair<std::string, std::string>>{{"A3", "C2"}, {"B1", "C2"}});
  }
  SUBCASE("all no-vehicle offers are trivially feasible") {
    const auto ev = evaluate(inst, selection_of(inst, {{"A", "A4"}, {"B", "B2"}, {"C", "C3"}}));
    CHECK(ev.feasible);
  }
  SUBCASE("foreign offer is flagged") {
    const auto ev = evaluate(inst, selection_of(inst, {{"A", "B1"}, {"B", "B2"}, {"C", "C3"}}));
    CHECK(!ev.feasible);
    CHECK(ev.violations[0].kind == Violation::ForeignOffer);
  }
}

TEST_CASE("evaluate is pure and bounded below by per-demand minima") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = make_random_instance(seed, 6, 4, 3, 40, true);
    const auto brute = brute_force_optimum(inst);
    if (!brute.feasible) continue;
    const auto e1 = evaluate(inst, brute.selection);
    const auto e2 = evaluate(inst, brute.selection);
    CHECK(e1.objective == e2.objective);
    CHECK(e1.feasible == e2.feasible);
    CHECK(e1.objective >= per_demand_lower_bound(inst) - 1e-9);
  }
}

TEST_CASE("canonical files round-trip byte-identically") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = make_random_instance(seed, 8, 4, 3, 60, true);
    const std::string once = write_instance(inst);
    ParseResult again = parse_instance(once);
    REQUIRE(again.ok());
    CHECK(write_instance(*again.instance) == once);
  }
  const std::string fig = write_instance(fig1());
  ParseResult again = parse_instance(fig);
  REQUIRE(again.ok());
  CHECK(write_instance(*again.instance) == fig);
}

TEST_CASE("solution files round-trip through read_solution") {
  const Instance inst = fig1();
  Solution s;
  s.selection = selection_of(inst, {{"A", "A3"}, {"B", "B1"}, {"C", "C1"}});
  const auto ev = evaluate(inst, s.selection);
  s.objective = ev.objective;
  s.feasible = ev.feasible;
  SolutionInfo info;
  info.solver = "test";
  const std::string text = write_solution(inst, s, info);
  const Solution back = parse_solution(inst, text);
  CHECK(back.selection == s.selection);
  CHECK(back.objective == doctest::Approx(s.objective));
  CHECK(back.feasible);
}

TEST_CASE("class transforms preserve the optimum") {
  // Two interchangeable vehicles; collapsing and expanding are inverses up
  // to offer naming, and the singleton wrapping keeps the plain optimum.
  const char* text = R"({
    "vehicles": [{"id": "u1", "class": "k"}, {"id": "u2", "class": "k"}],
    "demands": [
      {"id": "a", "offers": [
        {"id": "a_u1", "start": 0, "end": 4, "cost": 10, "vehicle": "u1"},
        {"id": "a_u2", "start": 0, "end": 4, "cost": 10, "vehicle": "u2"},
        {"id": "a_z", "start": 0, "end": 4, "cost": 50, "vehicle": null}
      ]},
      {"id": "b", "offers": [
        {"id": "b_u1", "start": 2, "end": 6, "cost": 20, "vehicle": "u1"},
        {"id": "b_u2", "start": 2, "end": 6, "cost": 20, "vehicle": "u2"},
        {"id": "b_z", "start": 2, "end": 6, "cost": 70, "vehicle": null}
      ]}
    ]})";
  ParseResult parsed = parse_instance(text);
  REQUIRE(parsed.ok());
  const Instance plain = *parsed.instance;

  const CollapsedInstance collapsed = collapse_classes(plain);
  CHECK(collapsed.instance.num_offers() == 4);  // one class offer each + fallbacks
  CHECK(collapsed.instance.has_class_offers());

  const Instance expanded = expand_classes(collapsed.instance);
  CHECK(expanded.num_offers() == plain.num_offers());

  const Instance singleton = to_singleton_classes(plain);
  CHECK(singleton.classes.size() == 2);
  CHECK(singleton.has_class_offers());

  // Class capacity check in evaluate: both demands on class k at once is
  // fine with two vehicles.
  std::vector<int> sel = {collapsed.instance.demands[0].offers[0],
                          collapsed.instance.demands[1].offers[0]};
  // offers are id-sorted; find the class offers explicitly
  sel[0] = collapsed.instance.offer_index.at("a_u1");
  sel[1] = collapsed.instance.offer_index.at("b_u1");
  CHECK(evaluate(collapsed.instance, sel).feasible);
}

TEST_CASE("generated instances validate") {
  AgParams ap;
  ap.num_demands = 40;
  ap.seed = 3;
  const Instance ag = generate_ag(ap);
  ParseResult r1 = parse_instance(write_instance(ag));
  CHECK(r1.ok());

  RwParams rp;
  rp.employees = 12;
  rp.nu = 0.1;
  rp.seed = 3;
  const Instance rw = generate_rw(rp);
  ParseResult r2 = parse_instance(write_instance(rw));
  CHECK(r2.ok());
}
