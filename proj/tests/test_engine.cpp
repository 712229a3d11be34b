#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qroute/engine/propagators.hpp"
#include "qroute/error.hpp"
#include "qroute/engine/search.hpp"
#include "qroute/engine/var_store.hpp"
#include "qroute/model.hpp"
#include "qroute/solver.hpp"
#include "test_util.hpp"

using namespace qroute;
using namespace qroute::engine;

namespace {

Mask values(std::initializer_list<int> vals) {
  Mask m = 0;
  for (int v : vals) m |= value_bit(v);
  return m;
}

// Round-robin to a fixpoint; propagators are monotone so the order does not
// change the result.
bool fixpoint(VarStore& store, std::vector<Propagator*> props) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto* p : props) {
      std::size_t before = store.mark();
      if (!p->propagate(store)) return false;
      if (store.mark() != before) changed = true;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("alldifferent filtering") {
  // Assigned-value elimination.
  {
    VarStore s({values({3}), values({1, 3})});
    AllDifferentProp p({0, 1});
    CHECK(p.propagate(s));
    CHECK(s.dom(1) == values({1}));
  }
  // Pigeonhole: four variables over a three-value union.
  {
    VarStore s({values({1, 2}), values({2, 3}), values({1, 3}), values({1, 2, 3})});
    AllDifferentProp p({0, 1, 2, 3});
    CHECK(!p.propagate(s));
  }
  // Full domains: every permutation remains possible, no pruning.
  {
    VarStore s(std::vector<Mask>(4, values({1, 2, 3, 4})));
    AllDifferentProp p({0, 1, 2, 3});
    CHECK(p.propagate(s));
    for (int v = 0; v < 4; ++v) CHECK(s.dom(v) == values({1, 2, 3, 4}));
  }
  // Two variables fixed to the same value fail.
  {
    VarStore s({values({2}), values({2})});
    AllDifferentProp p({0, 1});
    CHECK(!p.propagate(s));
  }
}

TEST_CASE("allowed pairs is generalized arc consistent") {
  std::vector<std::pair<int, int>> tuples = {{1, 2}, {2, 3}};
  {
    VarStore s({values({1, 2, 3}), values({1, 2, 3})});
    AllowedPairsProp p(0, 1, tuples);
    CHECK(p.propagate(s));
    CHECK(s.dom(0) == values({1, 2}));
    CHECK(s.dom(1) == values({2, 3}));
  }
  // Universal relation: no pruning.
  {
    std::vector<std::pair<int, int>> all;
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) all.push_back({a, b});
    }
    VarStore s({values({1, 2, 3}), values({1, 2, 3})});
    AllowedPairsProp p(0, 1, all);
    CHECK(p.propagate(s));
    CHECK(s.dom(0) == values({1, 2, 3}));
    CHECK(s.dom(1) == values({1, 2, 3}));
  }
  // Partner fixed: unique support.
  {
    VarStore s({values({1, 2, 3}), values({3})});
    AllowedPairsProp p(0, 1, tuples);
    CHECK(p.propagate(s));
    CHECK(s.dom(0) == values({2}));
  }
}

TEST_CASE("absolute value propagators") {
  {
    VarStore s({values({1, 4}), values({2})});
    AbsEqOneProp p(0, 1);
    CHECK(p.propagate(s));
    CHECK(s.dom(0) == values({1}));
  }
  {
    VarStore s({values({1, 2, 3, 4}), values({1, 2, 3, 4})});
    AbsLeOneProp p(0, 1);
    CHECK(p.propagate(s));
    CHECK(s.dom(0) == values({1, 2, 3, 4}));
    CHECK(s.dom(1) == values({1, 2, 3, 4}));
  }
  {
    VarStore s({values({1}), values({3, 4})});
    AbsLeOneProp p(0, 1);
    CHECK(!p.propagate(s));
  }
}

TEST_CASE("movement flag links z to observed movement") {
  // z = 0 equalizes each pair.
  {
    VarStore s({values({0}), values({2}), values({1, 2, 3})});
    MovementFlagProp p(0, {{1, 2}});
    CHECK(p.propagate(s));
    CHECK(s.dom(2) == values({2}));
  }
  // Fixed movement forces z = 1.
  {
    VarStore s({values({0, 1}), values({1}), values({2})});
    MovementFlagProp p(0, {{1, 2}});
    CHECK(p.propagate(s));
    CHECK(s.dom(0) == values({1}));
  }
  // Everything fixed in place forces z = 0.
  {
    VarStore s({values({0, 1}), values({1}), values({1}), values({4}), values({4})});
    MovementFlagProp p(0, {{1, 2}, {3, 4}});
    CHECK(p.propagate(s));
    CHECK(s.dom(0) == values({0}));
  }
  // z fixed to 1 with a single movable pair forces that pair apart.
  {
    VarStore s({values({1}), values({2}), values({1, 2, 3}), values({4}), values({4})});
    MovementFlagProp p(0, {{1, 2}, {3, 4}});
    CHECK(p.propagate(s));
    CHECK(s.dom(2) == values({1, 3}));
  }
}

TEST_CASE("gate persistence: the pair stays or swaps") {
  // Next positions narrow to the gate's node pair.
  {
    VarStore s({values({1}), values({2}),                      // p,q now
                values({1, 2, 3, 4}), values({1, 2, 3, 4})});  // p,q next
    GatePersistenceProp gp(0, 1, 2, 3);
    CHECK(gp.propagate(s));
    CHECK(s.dom(2) == values({1, 2}));
    CHECK(s.dom(3) == values({1, 2}));
    // Enumerate all completions: exactly stay-stay and the full swap.
    int solutions = 0;
    for (int pn = 1; pn <= 4; ++pn) {
      for (int qn = 1; qn <= 4; ++qn) {
        VarStore probe({values({1}), values({2}), values({pn}), values({qn})});
        GatePersistenceProp g(0, 1, 2, 3);
        AllDifferentProp d({2, 3});
        if (fixpoint(probe, {&g, &d})) {
          ++solutions;
          CHECK(((pn == 1 && qn == 2) || (pn == 2 && qn == 1)));
        }
      }
    }
    CHECK(solutions == 2);
  }
  // Partner pinned in place: the free qubit must stay.
  {
    VarStore s({values({1}), values({2}), values({1}), values({1, 2, 3})});
    GatePersistenceProp gp(0, 1, 2, 3);
    CHECK(gp.propagate(s));
    CHECK(s.dom(3) == values({2}));
  }
  // Entailed stay-stay: no pruning, no failure.
  {
    VarStore s({values({1}), values({2}), values({1}), values({2})});
    GatePersistenceProp gp(0, 1, 2, 3);
    CHECK(gp.propagate(s));
    CHECK(s.dom(2) == values({1}));
    CHECK(s.dom(3) == values({2}));
  }
}

TEST_CASE("involution propagator pairs up fixed movement") {
  // Qubit 0 moves 1 -> 2; the occupant of node 2 must come back to node 1.
  VarStore s({values({1}), values({2}),              // from
              values({2}), values({1, 2, 3})});      // to
  InvolutionProp p({0, 1}, {2, 3}, 3);
  CHECK(p.propagate(s));
  CHECK(s.dom(3) == values({1}));

  // A 3-cycle on fixed values fails.
  VarStore s3({values({1}), values({2}), values({3}),
               values({2}), values({3}), values({1})});
  InvolutionProp p3({0, 1, 2}, {3, 4, 5}, 3);
  CHECK(!p3.propagate(s3));
}

TEST_CASE("flag order and budget propagators") {
  {
    VarStore s({values({0, 1}), values({1})});
    FlagOrderProp p(0, 1);
    CHECK(p.propagate(s));
    CHECK(s.dom(0) == values({1}));
  }
  {
    VarStore s({values({0}), values({0, 1})});
    FlagOrderProp p(0, 1);
    CHECK(p.propagate(s));
    CHECK(s.dom(1) == values({0}));
  }
  {
    VarStore s({values({1}), values({1}), values({0, 1}), values({0, 1})});
    SumLeProp p({0, 1, 2, 3}, 2);
    CHECK(p.propagate(s));
    CHECK(s.dom(2) == values({0}));
    CHECK(s.dom(3) == values({0}));
  }
  {
    VarStore s({values({1}), values({1})});
    SumLeProp p({0, 1}, 1);
    CHECK(!p.propagate(s));
  }
}

TEST_CASE("trail restores domains exactly across backtracking") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Mask> doms;
    int n = 3 + static_cast<int>(rng() % 4);
    for (int v = 0; v < n; ++v) {
      Mask m = rng() % (value_bit(n + 1) - 2) + 2;  // nonempty over 1..n+some
      doms.push_back(m);
    }
    VarStore store(doms);
    const std::uint64_t before = store.checksum();
    const std::size_t mark = store.mark();

    AllDifferentProp p([&] {
      std::vector<int> vars(n);
      for (int v = 0; v < n; ++v) vars[v] = v;
      return vars;
    }());
    (void)p.propagate(store);
    for (int v = 0; v < n; ++v) {
      (void)store.intersect(v, rng() | 1ull << (rng() % 8));
    }
    store.undo_to(mark);
    CHECK(store.checksum() == before);
    for (int v = 0; v < n; ++v) CHECK(store.dom(v) == doms[v]);
  }
}

TEST_CASE("search finds the worked example optimum") {
  RoutingProblem problem = qroute::testing::fig1_problem();
  CPModel model = build_model(problem);
  EngineOutcome outcome = run_search(model, Strategy::BudgetAscent, {});
  CHECK(outcome.status == SolveStatus::Optimal);
  CHECK(outcome.lower_bound == 1);
}

TEST_CASE("already-compliant circuit solves at budget zero") {
  // Both layers executable in place with one initial assignment.
  LogicalCircuit circuit(4, {{{1, 2}, {3, 4}}, {{2, 3}}});
  RoutingProblem problem{std::move(circuit), HardwareGraph::path(4)};
  problem.variant = Variant::Linear;
  CPModel model = build_model(problem);
  EngineOutcome outcome = run_search(model, Strategy::BudgetAscent, {});
  CHECK(outcome.status == SolveStatus::Optimal);
  CHECK(outcome.lower_bound == 0);
}

TEST_CASE("deterministic statistics and incumbents") {
  RoutingProblem problem =
      qroute::testing::random_problem(4, 4, 21, Topology::LinearArray);
  CPModel model = build_model(problem);
  EngineOutcome a = run_search(model, Strategy::BudgetAscent, {});
  EngineOutcome b = run_search(model, Strategy::BudgetAscent, {});
  CHECK(a.status == SolveStatus::Optimal);
  CHECK(a.stats.nodes == b.stats.nodes);
  CHECK(a.stats.propagations == b.stats.propagations);
  CHECK(a.assignment == b.assignment);
}

TEST_CASE("budget ascent and branch-and-bound agree") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    int q = 3 + static_cast<int>(rng() % 2);
    int L = 2 + static_cast<int>(rng() % 3);
    auto topology = (q == 4 && rng() % 2) ? Topology::Lattice : Topology::LinearArray;
    RoutingProblem problem = qroute::testing::random_problem(q, L, rng(), topology);
    CPModel model = build_model(problem);
    EngineOutcome ascent = run_search(model, Strategy::BudgetAscent, {});
    EngineOutcome bnb = run_search(model, Strategy::BranchAndBound, {});
    REQUIRE(ascent.status == SolveStatus::Optimal);
    REQUIRE(bnb.status == SolveStatus::Optimal);
    CHECK(ascent.lower_bound == bnb.lower_bound);
  }
}

TEST_CASE("node cap stops the search with Unknown") {
  RoutingProblem problem =
      qroute::testing::random_problem(5, 5, 3, Topology::LinearArray);
  CPModel model = build_model(problem);
  Limits limits;
  limits.node_cap = 5;
  EngineOutcome outcome = run_search(model, Strategy::BudgetAscent, limits);
  CHECK(outcome.status == SolveStatus::Unknown);
  CHECK(outcome.assignment.empty());
}

TEST_CASE("strategy names round trip") {
  CHECK(strategy_from_string("budget-ascent") == Strategy::BudgetAscent);
  CHECK(strategy_from_string("branch-and-bound") == Strategy::BranchAndBound);
  CHECK_THROWS_AS(strategy_from_string("dfs"), qroute::Error);
}
