#include "qroute/compiled.hpp"

#include <string>

#include "qroute/error.hpp"

namespace qroute {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Feasible: return "feasible";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unknown: return "unknown";
  }
  return "unknown";
}

SolveStatus solve_status_from_string(const std::string& s) {
  if (s == "optimal") return SolveStatus::Optimal;
  if (s == "feasible") return SolveStatus::Feasible;
  if (s == "infeasible") return SolveStatus::Infeasible;
  if (s == "unknown") return SolveStatus::Unknown;
  throw Error("unknown solve status '" + s + "'");
}

namespace {

void check_shape(const RoutingProblem& problem, const CompiledCircuit& compiled,
                 const LayerTimeline& tl) {
  if (static_cast<int>(compiled.placements.size()) != tl.size()) {
    throw Error("placements cover " + std::to_string(compiled.placements.size()) +
                " layers, timeline has " + std::to_string(tl.size()));
  }
  for (const auto& layer : compiled.placements) {
    if (static_cast<int>(layer.size()) != problem.circuit.qubit_count()) {
      throw Error("placement layer width does not match the qubit count");
    }
  }
}

bool transition_moves(const std::vector<int>& from, const std::vector<int>& to) {
  return from != to;
}

}  // namespace

int objective_of(const RoutingProblem& problem, const CompiledCircuit& compiled) {
  const LayerTimeline tl = problem.timeline();
  check_shape(problem, compiled, tl);
  int used = 0;
  for (int t = 0; t < tl.transition_count(); ++t) {
    if (tl.dummy_origin(t) &&
        transition_moves(compiled.placements[t], compiled.placements[t + 1])) {
      ++used;
    }
  }
  return used;
}

int depth_of(const RoutingProblem& problem, const CompiledCircuit& compiled) {
  return problem.circuit.layer_count() + objective_of(problem, compiled);
}

CompiledCircuit make_compiled(const RoutingProblem& problem,
                              std::vector<std::vector<int>> placements) {
  CompiledCircuit out;
  out.placements = std::move(placements);
  const LayerTimeline tl = problem.timeline();
  check_shape(problem, out, tl);

  const int n = problem.graph.node_count();
  for (int t = 0; t < tl.transition_count(); ++t) {
    if (!tl.dummy_origin(t)) continue;
    const auto& from = out.placements[t];
    const auto& to = out.placements[t + 1];
    if (!transition_moves(from, to)) continue;

    // Node movement permutation: where the occupant of each node travels.
    std::vector<int> image(n + 1, 0);
    for (std::size_t q = 0; q < from.size(); ++q) image[from[q]] = to[q];

    SwapRound round;
    round.after_layer = t + 1;  // 1-based timeline index of the origin layer
    std::vector<bool> visited(n + 1, false);
    for (int i = 1; i <= n; ++i) {
      if (visited[i] || image[i] == i || image[i] == 0) continue;
      std::vector<int> cycle;
      int cur = i;
      while (!visited[cur]) {
        visited[cur] = true;
        cycle.push_back(cur);
        cur = image[cur];
      }
      if (cycle.size() == 2) {
        round.pairs.push_back({cycle[0], cycle[1]});
      } else {
        round.cycles.push_back(std::move(cycle));
      }
    }
    out.swap_schedule.push_back(std::move(round));
  }

  out.objective = objective_of(problem, out);
  out.depth = problem.circuit.layer_count() + out.objective;
  return out;
}

}  // namespace qroute
