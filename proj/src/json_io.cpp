#include "qroute/json_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "qroute/error.hpp"

namespace qroute {

using nlohmann::json;

nlohmann::json problem_to_json(const RoutingProblem& problem) {
  json j;
  j["qubits"] = problem.circuit.qubit_count();
  json layers = json::array();
  for (const auto& layer : problem.circuit.layers()) {
    json gates = json::array();
    for (const auto& g : layer) gates.push_back({g.a, g.b});
    layers.push_back(std::move(gates));
  }
  j["layers"] = std::move(layers);
  j["graph"]["nodes"] = problem.graph.node_count();
  json edges = json::array();
  for (auto [a, b] : problem.graph.edges()) edges.push_back({a, b});
  j["graph"]["edges"] = std::move(edges);
  j["dummy_count"] = problem.dummy_count;
  j["variant"] = to_string(problem.variant);
  j["mode"] = to_string(problem.mode);
  return j;
}

RoutingProblem problem_from_json(const nlohmann::json& j) {
  try {
    const int qubits = j.at("qubits").get<int>();
    std::vector<std::vector<Gate>> layers;
    for (const auto& jl : j.at("layers")) {
      std::vector<Gate> layer;
      for (const auto& jg : jl) {
        if (!jg.is_array() || jg.size() != 2) throw Error("gates must be [p,q] pairs");
        layer.push_back({jg[0].get<int>(), jg[1].get<int>()});
      }
      layers.push_back(std::move(layer));
    }
    LogicalCircuit circuit(qubits, std::move(layers));

    const auto& jg = j.at("graph");
    std::vector<std::pair<int, int>> edges;
    for (const auto& je : jg.at("edges")) {
      if (!je.is_array() || je.size() != 2) throw Error("edges must be [i,j] pairs");
      edges.push_back({je[0].get<int>(), je[1].get<int>()});
    }
    HardwareGraph graph(jg.at("nodes").get<int>(), std::move(edges));

    RoutingProblem problem{std::move(circuit), std::move(graph)};
    problem.dummy_count = j.value("dummy_count", 4);
    problem.variant = variant_from_string(j.value("variant", "general"));
    problem.mode = mode_from_string(j.value("mode", "faithful"));
    validate_problem(problem);
    return problem;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed problem JSON: ") + e.what());
  }
}

nlohmann::json solution_to_json(const RoutingProblem& problem, const SolveOutcome& outcome) {
  json j;
  j["status"] = to_string(outcome.status);
  j["dummy_count"] = problem.dummy_count;
  if (!outcome.best) {
    j["lower_bound"] = outcome.lower_bound;
    return j;
  }
  const CompiledCircuit& best = *outcome.best;
  j["objective"] = best.objective;
  j["depth"] = best.depth;
  json placements = json::array();
  for (const auto& layer : best.placements) placements.push_back(layer);
  j["placements"] = std::move(placements);
  json swaps = json::array();
  for (const auto& round : best.swap_schedule) {
    json r;
    r["after_layer"] = round.after_layer;
    json pairs = json::array();
    for (auto [a, b] : round.pairs) pairs.push_back({a, b});
    r["pairs"] = std::move(pairs);
    if (!round.cycles.empty()) r["cycles"] = round.cycles;
    swaps.push_back(std::move(r));
  }
  j["swaps"] = std::move(swaps);
  return j;
}

std::optional<int> solution_dummy_count(const nlohmann::json& j) {
  if (auto it = j.find("dummy_count"); it != j.end()) return it->get<int>();
  return std::nullopt;
}

CompiledCircuit solution_from_json(const nlohmann::json& j) {
  try {
    CompiledCircuit out;
    out.objective = j.at("objective").get<int>();
    out.depth = j.at("depth").get<int>();
    for (const auto& jl : j.at("placements")) {
      out.placements.push_back(jl.get<std::vector<int>>());
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed solution JSON: ") + e.what());
  }
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

RoutingProblem load_problem(const std::string& path) {
  return problem_from_json(load_json(path));
}

CompiledCircuit load_solution(const std::string& path) {
  return solution_from_json(load_json(path));
}

void save_json(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace qroute
