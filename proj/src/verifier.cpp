#include "qroute/verifier.hpp"

#include <algorithm>
#include <sstream>

#include "qroute/error.hpp"

namespace qroute {

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::NotBijection: return "NotBijection";
    case ViolationKind::GateNotAdjacent: return "GateNotAdjacent";
    case ViolationKind::IllegalMove: return "IllegalMove";
    case ViolationKind::IllegalGateTransition: return "IllegalGateTransition";
    case ViolationKind::NotInvolution: return "NotInvolution";
    case ViolationKind::ObjectiveMismatch: return "ObjectiveMismatch";
    case ViolationKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

std::vector<Violation> verify(const RoutingProblem& problem, const CompiledCircuit& compiled) {
  validate_problem(problem);
  const auto& graph = problem.graph;
  const auto& circuit = problem.circuit;
  const LayerTimeline tl = problem.timeline();
  const int n = graph.node_count();
  const int q_count = circuit.qubit_count();

  if (static_cast<int>(compiled.placements.size()) != tl.size()) {
    throw Error("solution covers " + std::to_string(compiled.placements.size()) +
                " layers, timeline has " + std::to_string(tl.size()));
  }
  for (const auto& layer : compiled.placements) {
    if (static_cast<int>(layer.size()) != q_count) {
      throw Error("solution layer width does not match the qubit count");
    }
  }

  std::vector<Violation> out;
  auto flag = [&](ViolationKind kind, int layer0, std::string detail) {
    out.push_back({kind, layer0 + 1, std::move(detail)});
  };

  // Per-layer bijection onto 1..n.
  std::vector<bool> layer_ok(tl.size(), true);
  for (int l = 0; l < tl.size(); ++l) {
    std::vector<int> seen(n + 1, 0);
    for (int q = 0; q < q_count; ++q) {
      int node = compiled.placements[l][q];
      if (node < 1 || node > n) {
        layer_ok[l] = false;
        flag(ViolationKind::NotBijection, l,
             "qubit " + std::to_string(q + 1) + " on node " + std::to_string(node) +
                 " outside 1.." + std::to_string(n));
      } else if (seen[node]++) {
        layer_ok[l] = false;
        flag(ViolationKind::NotBijection, l,
             "node " + std::to_string(node) + " hosts more than one qubit");
      }
    }
  }

  // Gate endpoints on adjacent nodes.
  for (int l = 0; l < tl.size(); ++l) {
    const auto& e = tl.entry(l);
    if (e.kind != TimelineEntry::Kind::Gate || !layer_ok[l]) continue;
    for (const auto& g : circuit.layer(e.gate_index)) {
      int na = compiled.placements[l][g.a - 1];
      int nb = compiled.placements[l][g.b - 1];
      if (!graph.adjacent(na, nb)) {
        flag(ViolationKind::GateNotAdjacent, l,
             "gate {" + std::to_string(g.a) + "," + std::to_string(g.b) + "} on nodes " +
                 std::to_string(na) + "," + std::to_string(nb));
      }
    }
  }

  // Each qubit stays or steps to a neighbor across every transition.
  for (int t = 0; t < tl.transition_count(); ++t) {
    if (!layer_ok[t] || !layer_ok[t + 1]) continue;
    for (int q = 0; q < q_count; ++q) {
      int from = compiled.placements[t][q];
      int to = compiled.placements[t + 1][q];
      if (from != to && !graph.adjacent(from, to)) {
        flag(ViolationKind::IllegalMove, t,
             "qubit " + std::to_string(q + 1) + " jumps " + std::to_string(from) + " -> " +
                 std::to_string(to));
      }
    }
  }

  // Across a gate transition, each gate qubit stays or takes its partner's
  // node (the merged SWAP).
  for (int t = 0; t < tl.transition_count(); ++t) {
    const auto& e = tl.entry(t);
    if (e.kind != TimelineEntry::Kind::Gate || !layer_ok[t] || !layer_ok[t + 1]) continue;
    for (const auto& g : circuit.layer(e.gate_index)) {
      int pa = compiled.placements[t][g.a - 1], pb = compiled.placements[t][g.b - 1];
      int na = compiled.placements[t + 1][g.a - 1], nb = compiled.placements[t + 1][g.b - 1];
      bool stays = na == pa && nb == pb;
      bool swaps = na == pb && nb == pa;
      if (!stays && !swaps) {
        flag(ViolationKind::IllegalGateTransition, t,
             "gate {" + std::to_string(g.a) + "," + std::to_string(g.b) +
                 "} neither stays nor swaps");
      }
    }
  }

  // SwapOnly: the node movement of every transition is an involution; with
  // neighbor-legal moves that is exactly a set of disjoint adjacent swaps.
  if (problem.mode == Mode::SwapOnly) {
    for (int t = 0; t < tl.transition_count(); ++t) {
      if (!layer_ok[t] || !layer_ok[t + 1]) continue;
      std::vector<int> image(n + 1, 0);
      for (int q = 0; q < q_count; ++q) {
        image[compiled.placements[t][q]] = compiled.placements[t + 1][q];
      }
      for (int node = 1; node <= n; ++node) {
        int to = image[node];
        if (to != node && image[to] != node) {
          flag(ViolationKind::NotInvolution, t,
               "movement " + std::to_string(node) + " -> " + std::to_string(to) +
                   " is not returned");
          break;
        }
      }
    }
  }

  // Objective accounting and per-block budget.
  int recomputed = 0;
  std::vector<int> per_block(std::max(0, circuit.layer_count() - 1), 0);
  for (int t = 0; t < tl.transition_count(); ++t) {
    if (!tl.dummy_origin(t)) continue;
    if (compiled.placements[t] != compiled.placements[t + 1]) {
      ++recomputed;
      ++per_block[tl.entry(t).block];
    }
  }
  if (recomputed != compiled.objective) {
    flag(ViolationKind::ObjectiveMismatch, tl.size() - 1,
         "reported " + std::to_string(compiled.objective) + ", recomputed " +
             std::to_string(recomputed));
  }
  for (std::size_t b = 0; b < per_block.size(); ++b) {
    if (per_block[b] > problem.dummy_count) {
      flag(ViolationKind::BudgetExceeded, static_cast<int>(b),
           "block " + std::to_string(b + 1) + " uses " + std::to_string(per_block[b]) +
               " > K = " + std::to_string(problem.dummy_count));
    }
  }

  return out;
}

std::string violation_report(const std::vector<Violation>& violations) {
  std::ostringstream os;
  for (const auto& v : violations) {
    os << to_string(v.kind) << " at layer " << v.layer << ": " << v.detail << "\n";
  }
  return os.str();
}

}  // namespace qroute
