#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "moap/conflict.hpp"
#include "oracle.hpp"

using namespace moap;
using namespace moap::test;

namespace {

std::vector<std::vector<int>> sweep(std::vector<IntervalNode> nodes, SweepStats* stats = nullptr) {
  return max_cliques_interval(nodes, stats);
}

std::set<std::pair<std::string, std::string>> vehicle_edges(const Instance& inst,
                                                            const OfferConflictGraph& g) {
  std::set<std::pair<std::string, std::string>> edges;
  for (int o = 0; o < inst.num_offers(); ++o)
    for (int n : g.resource_adjacency[static_cast<std::size_t>(o)])
      if (o < n)
        edges.emplace(inst.offers[static_cast<std::size_t>(o)].id,
                      inst.offers[static_cast<std::size_t>(n)].id);
  return edges;
}

}  // namespace

TEST_CASE("sweep reports maximum cliques in sweep order") {
  SUBCASE("three intervals, two cliques") {
    const auto cliques = sweep({{{0, 2}, 0}, {{1, 3}, 1}, {{4, 5}, 2}});
    REQUIRE(cliques.size() == 2);
    CHECK(cliques[0] == std::vector<int>{0, 1});
    CHECK(cliques[1] == std::vector<int>{2});
  }
  SUBCASE("touching intervals stay separate") {
    const auto cliques = sweep({{{0, 2}, 0}, {{2, 4}, 1}});
    REQUIRE(cliques.size() == 2);
    CHECK(cliques[0] == std::vector<int>{0});
    CHECK(cliques[1] == std::vector<int>{1});
  }
  SUBCASE("empty input") { CHECK(sweep({}).empty()); }
  SUBCASE("nested and duplicate intervals") {
    const auto cliques = sweep({{{0, 10}, 0}, {{2, 3}, 1}, {{2, 3}, 2}});
    REQUIRE(cliques.size() == 1);
    CHECK(cliques[0] == std::vector<int>{0, 1, 2});
  }
}

TEST_CASE("sweep cliques match brute force on random interval families") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng = Rng(seed).fork("sweep");
    const int n = static_cast<int>(rng.uniform_int(1, 10));
    std::vector<IntervalNode> nodes;
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) {
      const Tick s = rng.uniform_int(0, 20);
      nodes.push_back({{s, s + rng.uniform_int(1, 10)}, i});
    }
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (nodes[static_cast<std::size_t>(a)].interval.overlaps(nodes[static_cast<std::size_t>(b)].interval))
          adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
              adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;

    auto got = sweep(nodes);
    for (auto& c : got) std::sort(c.begin(), c.end());
    std::sort(got.begin(), got.end());
    got.erase(std::unique(got.begin(), got.end()), got.end());
    CHECK(got == brute_force_max_cliques(adj));

    // At most one clique per node, and the union covers all nodes.
    CHECK(got.size() <= static_cast<std::size_t>(n));
    std::set<int> covered;
    for (const auto& c : got) covered.insert(c.begin(), c.end());
    CHECK(covered.size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("sweep work grows subquadratically on overlap chains") {
  auto chain = [](int n) {
    std::vector<IntervalNode> nodes;
    for (int i = 0; i < n; ++i) nodes.push_back({{2 * i, 2 * i + 3}, i});
    return nodes;
  };
  SweepStats small, large;
  sweep(chain(256), &small);
  sweep(chain(512), &large);
  // Endpoint events scale linearly; a quadratic scan would quadruple.
  CHECK(large.operations <= 2 * small.operations + 16);
}

TEST_CASE("fig1 conflict graph matches the published edges and cliques") {
  const Instance inst = fig1();
  const OfferConflictGraph g = build_offer_conflict_graph(inst);

  CHECK(vehicle_edges(inst, g) == std::set<std::pair<std::string, std::string>>{
                                      {"A2", "C1"}, {"A3", "C2"}, {"B1", "C2"}});
  CHECK(g.resource_edge_count == 3);

  // V2 cliques are {A3,C2} and {C2,B1}.
  const int v2 = inst.vehicle_index.at("V2");
  for (const auto& group : g.groups) {
    if (group.kind != ResourceKind::Vehicle || group.index != v2) continue;
    REQUIRE(group.cliques.size() == 2);
    auto name = [&](const std::vector<int>& c) {
      std::set<std::string> ids;
      for (int o : c) ids.insert(inst.offers[static_cast<std::size_t>(o)].id);
      return ids;
    };
    CHECK(name(group.cliques[0]) == std::set<std::string>{"A3", "C2"});
    CHECK(name(group.cliques[1]) == std::set<std::string>{"B1", "C2"});
  }

  const DemandConflictGraph dg = build_demand_conflict_graph(inst, g);
  CHECK(dg.edge_count == 2);
  const int A = inst.demand_index.at("A"), B = inst.demand_index.at("B"), C = inst.demand_index.at("C");
  CHECK(dg.adjacency[static_cast<std::size_t>(A)] == std::vector<int>{C});
  CHECK(dg.adjacency[static_cast<std::size_t>(B)] == std::vector<int>{C});
  CHECK(dg.adjacency[static_cast<std::size_t>(C)] == std::vector<int>{A, B});
}

TEST_CASE("no vehicles means no resource edges") {
  const auto r = parse_instance(R"({
    "demands": [
      {"id": "a", "offers": [{"id": "a1", "start": 0, "end": 5, "cost": 1},
                              {"id": "a2", "start": 0, "end": 5, "cost": 2}]},
      {"id": "b", "offers": [{"id": "b1", "start": 0, "end": 5, "cost": 1}]}
    ]})");
  REQUIRE(r.ok());
  const OfferConflictGraph g = build_offer_conflict_graph(*r.instance);
  CHECK(g.resource_edge_count == 0);
  CHECK(g.groups.empty());
  CHECK(g.demand_cliques.size() == 2);
  const DemandConflictGraph dg = build_demand_conflict_graph(*r.instance, g);
  CHECK(dg.edge_count == 0);
}

TEST_CASE("resource adjacency equals the pairwise definition on random instances") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = make_random_instance(seed, 5, 3, 3, 30, false);
    if (inst.num_offers() > 12) continue;
    const OfferConflictGraph g = build_offer_conflict_graph(inst);
    const auto brute = brute_adjacency(inst);
    for (int a = 0; a < inst.num_offers(); ++a)
      for (int b = 0; b < inst.num_offers(); ++b) {
        if (inst.offers[static_cast<std::size_t>(a)].demand ==
            inst.offers[static_cast<std::size_t>(b)].demand)
          continue;  // demand edges are implicit
        const bool adjacent =
            std::binary_search(g.resource_adjacency[static_cast<std::size_t>(a)].begin(),
                               g.resource_adjacency[static_cast<std::size_t>(a)].end(), b);
        CHECK(adjacent == static_cast<bool>(brute[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]));
      }
  }
}

TEST_CASE("demand graph is the quotient graph on random instances") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = make_random_instance(seed, 6, 3, 3, 30, false);
    const OfferConflictGraph g = build_offer_conflict_graph(inst);
    const DemandConflictGraph dg = build_demand_conflict_graph(inst, g);
    for (int d = 0; d < inst.num_demands(); ++d)
      for (int h = d + 1; h < inst.num_demands(); ++h) {
        bool expect = false;
        for (int a : inst.demands[static_cast<std::size_t>(d)].offers)
          for (int b : inst.demands[static_cast<std::size_t>(h)].offers)
            if (offers_conflict(inst, a, b)) expect = true;
        const bool got = std::binary_search(dg.adjacency[static_cast<std::size_t>(d)].begin(),
                                            dg.adjacency[static_cast<std::size_t>(d)].end(), h);
        CHECK(got == expect);
      }
    for (int d = 0; d < inst.num_demands(); ++d)
      CHECK(!std::binary_search(dg.adjacency[static_cast<std::size_t>(d)].begin(),
                                dg.adjacency[static_cast<std::size_t>(d)].end(), d));
  }
}

TEST_CASE("theorem: maximal cliques are demand sets or vehicle cliques") {
  // Holds when a demand has at most one offer per vehicle. With
  // same-vehicle alternative dates, a spanning third offer forms a
  // maximal clique of neither kind (see the note in oracle.hpp).
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 100; ++seed) {
    const Instance inst = make_random_instance(seed, 5, 3, 3, 25, false, true);
    if (inst.num_offers() > 14) continue;
    ++checked;
    const OfferConflictGraph g = build_offer_conflict_graph(inst);

    // Candidate union {O_d} u {C^v}, deduplicated.
    std::set<std::vector<int>> unioned;
    for (const auto& c : g.demand_cliques) {
      auto s = c;
      std::sort(s.begin(), s.end());
      unioned.insert(s);
    }
    for (const auto& group : g.groups)
      for (const auto& c : group.cliques) unioned.insert(c);

    CHECK(unioned.size() <= g.clique_count_bound());

    // Inclusion-maximal members of the union = the true maximal cliques.
    std::set<std::vector<int>> maximal_union;
    for (const auto& c : unioned) {
      bool contained = false;
      for (const auto& other : unioned) {
        if (other.size() <= c.size() || other == c) continue;
        if (std::includes(other.begin(), other.end(), c.begin(), c.end())) {
          contained = true;
          break;
        }
      }
      if (!contained) maximal_union.insert(c);
    }

    const auto brute = brute_force_max_cliques(brute_adjacency(inst));
    const std::set<std::vector<int>> expected(brute.begin(), brute.end());
    CHECK(maximal_union == expected);
  }
}
