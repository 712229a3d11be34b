#pragma once

#include <string>
#include <vector>

#include "qroute/compiled.hpp"
#include "qroute/problem.hpp"

namespace qroute {

/// Everything the checker can reject. Every violation names the layer (or
/// the origin layer of the transition) it was found at, 1-based.
enum class ViolationKind {
  NotBijection,
  GateNotAdjacent,
  IllegalMove,
  IllegalGateTransition,
  NotInvolution,  // SwapOnly mode only
  ObjectiveMismatch,
  BudgetExceeded,
};

std::string to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  int layer;
  std::string detail;
};

/// Checks a compiled circuit against the problem semantics: per-layer
/// bijection, gate adjacency, per-transition movement legality, gate
/// persistence across gate transitions, SwapOnly involutions, objective
/// accounting, and the per-block budget. Collects every violation rather
/// than stopping at the first; an empty result means the circuit verifies.
/// Shares no code with the model or engine on purpose.
std::vector<Violation> verify(const RoutingProblem& problem, const CompiledCircuit& compiled);

std::string violation_report(const std::vector<Violation>& violations);

}  // namespace qroute
