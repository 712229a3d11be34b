#pragma once

#include <optional>
#include <vector>

#include "qroute/compiled.hpp"
#include "qroute/problem.hpp"

namespace qroute {

/// Exhaustive optimum for small instances by dynamic programming over
/// qubit->node bijections. Deliberately shares no code with the model or
/// engine so it can certify them.

/// All legal one-transition node permutations for the mode. Each entry p is
/// a node permutation with p[i-1] the destination of node i's occupant.
/// SwapOnly: products of disjoint adjacent transpositions (every matching of
/// the graph, including the empty one). Faithful: every bijection in which
/// each moved node maps to a neighbor. Throws Error above node_cap.
std::vector<std::vector<int>> enumerate_transitions(const HardwareGraph& graph, Mode mode,
                                                    int node_cap = 6);

struct OracleResult {
  bool feasible = false;
  int optimum = 0;
  /// A witness schedule over the full timeline, present when feasible.
  std::optional<std::vector<std::vector<int>>> witness;
};

/// Exact minimum of the objective over all schedules: gate layers admit
/// only placements with every gate pair adjacent; transitions out of gate
/// layers are free (gate qubits stay or swap with their partner, other
/// qubits move per the mode rules); each dummy block allows up to K counted
/// transitions drawn from enumerate_transitions, every non-identity one
/// costing 1. The initial mapping is unconstrained.
OracleResult oracle_optimal(const RoutingProblem& problem, int node_cap = 6,
                            int layer_cap = 6);

}  // namespace qroute
