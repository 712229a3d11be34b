#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qroute/problem.hpp"

namespace qroute {

/// Movement across one counted transition, keyed by the 1-based timeline
/// index of the layer it originates from. Movement that decomposes into
/// disjoint transpositions is listed as node pairs; Faithful-mode rotations
/// are listed as node cycles instead.
struct SwapRound {
  int after_layer;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> cycles;
};

/// A fully scheduled circuit: one qubit->node mapping per timeline layer.
/// placements[l][q-1] is the node of qubit q at timeline layer l (all ids
/// 1-based). Structural invariants (bijection per layer, legal moves) are
/// the verifier's business, so raw or even deliberately broken placements
/// are representable.
struct CompiledCircuit {
  std::vector<std::vector<int>> placements;
  int objective = 0;
  int depth = 0;
  std::vector<SwapRound> swap_schedule;
};

enum class SolveStatus { Optimal, Feasible, Infeasible, Unknown };

std::string to_string(SolveStatus s);
SolveStatus solve_status_from_string(const std::string& s);

struct SearchStats {
  long long nodes = 0;
  long long propagations = 0;
  double wall_ms = 0.0;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::Unknown;
  std::optional<CompiledCircuit> best;
  int lower_bound = 0;
  SearchStats stats;
};

/// Number of dummy-originating transitions whose placements differ on any
/// qubit. Transitions originating at gate layers (merged SWAPs and parallel
/// bystander movement) are never counted. Throws Error if the placements do
/// not cover the full timeline.
int objective_of(const RoutingProblem& problem, const CompiledCircuit& compiled);

/// L + objective_of(problem, compiled).
int depth_of(const RoutingProblem& problem, const CompiledCircuit& compiled);

/// Builds a CompiledCircuit from raw placements: recomputes the objective
/// and depth and derives the swap schedule from the counted transitions.
CompiledCircuit make_compiled(const RoutingProblem& problem,
                              std::vector<std::vector<int>> placements);

}  // namespace qroute
