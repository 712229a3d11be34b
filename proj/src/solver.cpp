#include "qroute/solver.hpp"

#include <stdexcept>

#include "qroute/model.hpp"
#include "qroute/verifier.hpp"

namespace qroute {

SolveOutcome solve_problem(const RoutingProblem& problem, const SolveOptions& options) {
  validate_problem(problem);
  const CPModel model = build_model(problem);
  engine::EngineOutcome raw = engine::run_search(model, options.strategy, options.limits);

  SolveOutcome outcome;
  outcome.status = raw.status;
  outcome.lower_bound = raw.lower_bound;
  outcome.stats = raw.stats;
  if (!raw.assignment.empty()) {
    const LayerTimeline tl = problem.timeline();
    std::vector<std::vector<int>> placements(tl.size(),
                                             std::vector<int>(problem.circuit.qubit_count()));
    for (int l = 0; l < tl.size(); ++l) {
      for (int q = 0; q < problem.circuit.qubit_count(); ++q) {
        placements[l][q] = raw.assignment[model.position_var(q, l)];
      }
    }
    outcome.best = make_compiled(problem, std::move(placements));

    auto violations = verify(problem, *outcome.best);
    if (!violations.empty()) {
      throw std::logic_error("solver produced an invalid schedule:\n" +
                             violation_report(violations));
    }
    if (outcome.status == SolveStatus::Optimal &&
        outcome.best->objective != outcome.lower_bound) {
      throw std::logic_error("optimal objective " + std::to_string(outcome.best->objective) +
                             " disagrees with the proven bound " +
                             std::to_string(outcome.lower_bound));
    }
  }
  return outcome;
}

EscalationResult solve_with_escalation(const RoutingProblem& problem,
                                       const SolveOptions& options, int max_dummy_count) {
  if (max_dummy_count < 0) {
    // Odd-even transposition sorting realizes any permutation of a path in
    // |V| rounds, and every connected graph embeds one.
    max_dummy_count = problem.graph.node_count();
  }
  RoutingProblem current = problem;
  while (true) {
    SolveOutcome outcome = solve_problem(current, options);
    if (outcome.status != SolveStatus::Infeasible || current.dummy_count >= max_dummy_count) {
      return {std::move(outcome), current.dummy_count};
    }
    ++current.dummy_count;
  }
}

}  // namespace qroute
