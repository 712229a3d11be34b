#pragma once

#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qroute/compiled.hpp"
#include "qroute/problem.hpp"

namespace qroute {

/// Problem files:
///   {"qubits": n, "layers": [[[p,q],...],...],
///    "graph": {"nodes": n, "edges": [[i,j],...]},
///    "dummy_count": K, "variant": "linear"|"general",
///    "mode": "faithful"|"swap_only"}
/// Solution files:
///   {"status", "objective", "depth",
///    "placements": [[node per qubit] per timeline layer],
///    "swaps": [{"after_layer": l, "pairs": [[i,j],...]}, ...]}
/// All ids are 1-based. dummy_count, variant and mode carry the defaults
/// 4 / "general" / "faithful" when absent.

nlohmann::json problem_to_json(const RoutingProblem& problem);
RoutingProblem problem_from_json(const nlohmann::json& j);

nlohmann::json solution_to_json(const RoutingProblem& problem, const SolveOutcome& outcome);
/// Reads placements/objective/depth back; the swap schedule is re-derived
/// by the verifier from placements, so it is not parsed.
CompiledCircuit solution_from_json(const nlohmann::json& j);
/// Solutions record the dummy count they were compiled at (an instance
/// solved with an escalated K has a longer timeline than its problem file
/// says). Absent in hand-written files.
std::optional<int> solution_dummy_count(const nlohmann::json& j);

nlohmann::json load_json(const std::string& path);
RoutingProblem load_problem(const std::string& path);
CompiledCircuit load_solution(const std::string& path);
void save_json(const nlohmann::json& j, const std::string& path);

}  // namespace qroute
