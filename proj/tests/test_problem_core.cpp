#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "qroute/compiled.hpp"
#include "qroute/error.hpp"
#include "qroute/problem.hpp"
#include "test_util.hpp"

using namespace qroute;

TEST_CASE("hardware graph validation") {
  CHECK_THROWS_AS(HardwareGraph(3, {{1, 1}}), Error);          // self-loop
  CHECK_THROWS_AS(HardwareGraph(3, {{1, 2}, {2, 1}}), Error);  // duplicate
  CHECK_THROWS_AS(HardwareGraph(4, {{1, 2}, {3, 4}}), Error);  // disconnected
  CHECK_THROWS_AS(HardwareGraph(3, {{1, 2}, {2, 4}}), Error);  // out of range
  CHECK_THROWS_AS(HardwareGraph::path(1), Error);

  HardwareGraph g(3, {{2, 3}, {1, 2}});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK(g.arcs().size() == 4);
  CHECK(g.adjacent(3, 2));
  CHECK(!g.adjacent(1, 3));
  CHECK(g.distance(1, 3) == 2);
}

TEST_CASE("path and lattice recognition") {
  CHECK(HardwareGraph::path(4).is_path());
  CHECK(!HardwareGraph::lattice(2, 2).is_path());

  auto dims = HardwareGraph::lattice(2, 3).lattice_dims();
  REQUIRE(dims.has_value());
  CHECK(*dims == std::pair{2, 3});
  // A path is a 1 x n grid.
  CHECK(HardwareGraph::path(5).lattice_dims() == std::pair{1, 5});
  // Star graph: not a grid.
  CHECK(!HardwareGraph(4, {{1, 2}, {1, 3}, {1, 4}}).lattice_dims().has_value());
}

TEST_CASE("logical circuit validation") {
  CHECK_THROWS_AS(LogicalCircuit(4, {}), Error);                  // no layers
  CHECK_THROWS_AS(LogicalCircuit(4, {{}}), Error);                // empty layer
  CHECK_THROWS_AS(LogicalCircuit(4, {{{1, 1}}}), Error);          // p = q
  CHECK_THROWS_AS(LogicalCircuit(4, {{{1, 2}, {2, 3}}}), Error);  // overlap
  CHECK_THROWS_AS(LogicalCircuit(4, {{{1, 5}}}), Error);          // out of range
  LogicalCircuit c(4, {{{2, 1}, {3, 4}}});
  CHECK(c.layer(0)[0] == Gate{1, 2});  // normalized
  CHECK(c.gate_count() == 2);
}

TEST_CASE("expand_timeline layout") {
  LogicalCircuit two(4, {{{1, 2}}, {{3, 4}}});
  LayerTimeline tl = expand_timeline(two, 4);
  CHECK(tl.size() == 6);
  CHECK(tl.swap_layer_count() == 4);
  CHECK(tl.entry(0).kind == TimelineEntry::Kind::Gate);
  CHECK(tl.entry(5).kind == TimelineEntry::Kind::Gate);
  for (int l = 1; l <= 4; ++l) {
    CHECK(tl.entry(l).kind == TimelineEntry::Kind::Dummy);
    CHECK(tl.entry(l).block == 0);
    CHECK(tl.entry(l).pos_in_block == l - 1);
  }

  LogicalCircuit one(4, {{{1, 2}}});
  LayerTimeline single = expand_timeline(one, 4);
  CHECK(single.size() == 1);
  CHECK(single.swap_layer_count() == 0);

  LogicalCircuit three(4, {{{1, 2}}, {{3, 4}}, {{1, 3}}});
  LayerTimeline t3 = expand_timeline(three, 2);
  CHECK(t3.size() == 7);
  CHECK(t3.entry(3).kind == TimelineEntry::Kind::Gate);
  CHECK(t3.entry(4).block == 1);
  CHECK(t3.gate_layer_position(2) == 6);

  CHECK_THROWS_AS(expand_timeline(three, -1), Error);
}

TEST_CASE("timeline length identity |L'| = L + K(L-1)") {
  for (int L = 1; L <= 7; ++L) {
    std::vector<std::vector<Gate>> layers(L, {{1, 2}});
    LogicalCircuit c(2, layers);
    for (int K = 0; K <= 6; ++K) {
      LayerTimeline tl = expand_timeline(c, K);
      CHECK(tl.size() == L + K * (L - 1));
      CHECK(tl.swap_layer_count() == K * (L - 1));
      int dummies = 0;
      for (int t = 0; t < tl.transition_count(); ++t) dummies += tl.dummy_origin(t);
      CHECK(dummies == tl.swap_layer_count());
    }
  }
}

TEST_CASE("objective_of counts only dummy-origin movement") {
  RoutingProblem problem = qroute::testing::fig1_problem();
  CompiledCircuit fig1 = make_compiled(problem, qroute::testing::fig1_placements());
  CHECK(objective_of(problem, fig1) == 1);
  CHECK(depth_of(problem, fig1) == 3);
  CHECK(fig1.objective == 1);
  CHECK(fig1.depth == 3);
  REQUIRE(fig1.swap_schedule.size() == 1);
  CHECK(fig1.swap_schedule[0].after_layer == 2);
  CHECK(fig1.swap_schedule[0].pairs == std::vector<std::pair<int, int>>{{2, 3}});
  CHECK(fig1.swap_schedule[0].cycles.empty());

  // Identity placements: no movement anywhere. (The accountant does not
  // police gate executability; that is the verifier's job.)
  std::vector<std::vector<int>> identity(problem.timeline().size(), {1, 2, 3, 4});
  CompiledCircuit id_compiled{identity, 0, 2, {}};
  CHECK(objective_of(problem, id_compiled) == 0);

  // Merged SWAP out of a gate layer moves qubits at zero cost.
  RoutingProblem q3 = qroute::testing::merged_swap_q3();
  const LayerTimeline tl = q3.timeline();
  std::vector<std::vector<int>> placements;
  for (int l = 0; l < tl.size(); ++l) {
    placements.push_back(l <= tl.gate_layer_position(1) ? std::vector<int>{2, 1, 3}
                                                        : std::vector<int>{3, 1, 2});
  }
  CompiledCircuit m = make_compiled(q3, placements);
  CHECK(m.objective == 0);
  CHECK(m.depth == 3);
  CHECK(m.swap_schedule.empty());

  // Structural error: placements not covering the timeline.
  CompiledCircuit bad{{{1, 2, 3, 4}}, 0, 0, {}};
  CHECK_THROWS_AS(objective_of(problem, bad), Error);
}

TEST_CASE("depth identity depth = L + objective") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int q = 3 + static_cast<int>(rng() % 3);
    int L = 2 + static_cast<int>(rng() % 3);
    int K = 1 + static_cast<int>(rng() % 4);
    RoutingProblem p = qroute::testing::random_problem(q, L, rng(), Topology::LinearArray,
                                                       Mode::Faithful, K);
    const LayerTimeline tl = p.timeline();
    std::vector<int> base(q);
    for (int i = 0; i < q; ++i) base[i] = i + 1;
    std::vector<std::vector<int>> placements;
    for (int l = 0; l < tl.size(); ++l) {
      std::shuffle(base.begin(), base.end(), rng);
      placements.push_back(base);
    }
    CompiledCircuit c = make_compiled(p, placements);
    CHECK(c.depth == p.circuit.layer_count() + c.objective);
    CHECK(depth_of(p, c) == p.circuit.layer_count() + objective_of(p, c));
  }
}

TEST_CASE("objective invariant under relabeling by a graph automorphism") {
  RoutingProblem problem = qroute::testing::fig1_problem();
  const int n = problem.graph.node_count();
  auto reflect = [n](int v) { return n + 1 - v; };

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const LayerTimeline tl = problem.timeline();
    std::vector<int> base = {1, 2, 3, 4};
    std::vector<std::vector<int>> placements;
    for (int l = 0; l < tl.size(); ++l) {
      if (rng() % 2) std::shuffle(base.begin(), base.end(), rng);
      placements.push_back(base);
    }
    std::vector<std::vector<int>> mirrored = placements;
    for (auto& layer : mirrored) {
      for (int& v : layer) v = reflect(v);
    }
    CompiledCircuit a = make_compiled(problem, placements);
    CompiledCircuit b = make_compiled(problem, mirrored);
    CHECK(a.objective == b.objective);
    CHECK(a.depth == b.depth);
  }
}

TEST_CASE("problem validation") {
  RoutingProblem p = qroute::testing::fig1_problem();
  CHECK_NOTHROW(validate_problem(p));

  RoutingProblem wrong_size{LogicalCircuit(3, {{{1, 2}}}), HardwareGraph::path(4)};
  CHECK_THROWS_AS(validate_problem(wrong_size), Error);

  RoutingProblem bad_variant{LogicalCircuit(4, {{{1, 2}}}), HardwareGraph::lattice(2, 2)};
  bad_variant.variant = Variant::Linear;
  CHECK_THROWS_AS(validate_problem(bad_variant), Error);

  RoutingProblem neg{LogicalCircuit(4, {{{1, 2}}}), HardwareGraph::path(4)};
  neg.dummy_count = -1;
  CHECK_THROWS_AS(validate_problem(neg), Error);
}

TEST_CASE("status round trip") {
  for (auto s : {SolveStatus::Optimal, SolveStatus::Feasible, SolveStatus::Infeasible,
                 SolveStatus::Unknown}) {
    CHECK(solve_status_from_string(to_string(s)) == s);
  }
  CHECK_THROWS_AS(solve_status_from_string("great"), Error);
}
