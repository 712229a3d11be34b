#pragma once

#include "qroute/compiled.hpp"
#include "qroute/engine/search.hpp"
#include "qroute/problem.hpp"

namespace qroute {

struct SolveOptions {
  engine::Strategy strategy = engine::Strategy::BudgetAscent;
  engine::Limits limits;
};

/// Builds the variant's model, runs the search, decodes the assignment into
/// a CompiledCircuit and verifies it before returning. A verification
/// failure of the solver's own output is a bug and throws std::logic_error.
SolveOutcome solve_problem(const RoutingProblem& problem, const SolveOptions& options = {});

struct EscalationResult {
  SolveOutcome outcome;
  int dummy_count_used = 0;
};

/// Re-solves with K+1, K+2, ... while the instance is infeasible at the
/// configured budget. Escalation stops at max_dummy_count (default: enough
/// parallel swap rounds to realize any permutation on a connected graph).
EscalationResult solve_with_escalation(const RoutingProblem& problem,
                                       const SolveOptions& options = {},
                                       int max_dummy_count = -1);

}  // namespace qroute
