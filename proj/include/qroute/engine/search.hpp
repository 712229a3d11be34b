#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qroute/compiled.hpp"
#include "qroute/model.hpp"

namespace qroute::engine {

/// BudgetAscent proves the optimum bottom-up: feasibility at objective
/// bounds 0,1,2,... until the first success. BranchAndBound finds an
/// incumbent and tightens the bound until infeasibility.
enum class Strategy { BudgetAscent, BranchAndBound };

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);

struct Limits {
  double time_limit_ms = 0.0;  // 0 = unlimited
  long long node_cap = 0;      // 0 = unlimited
};

/// Result of a complete search over one model. assignment holds one value
/// per model variable when a solution was found.
struct EngineOutcome {
  SolveStatus status = SolveStatus::Unknown;
  std::vector<int> assignment;
  int lower_bound = 0;
  SearchStats stats;
};

/// Depth-first search with chronological backtracking. Variable order is
/// static (layer by layer, flags last); values prefer the previous layer's
/// node. Deterministic given model and strategy.
EngineOutcome run_search(const CPModel& model, Strategy strategy, const Limits& limits);

/// One feasibility run with an optional bound on the flag sum; building
/// block of both strategies, exposed for tests.
EngineOutcome solve_feasible(const CPModel& model, std::optional<int> budget,
                             const Limits& limits);

}  // namespace qroute::engine
