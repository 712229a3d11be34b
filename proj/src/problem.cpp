#include "qroute/problem.hpp"

#include "qroute/error.hpp"

namespace qroute {

std::string to_string(Variant v) {
  return v == Variant::Linear ? "linear" : "general";
}

std::string to_string(Mode m) {
  return m == Mode::Faithful ? "faithful" : "swap_only";
}

Variant variant_from_string(const std::string& s) {
  if (s == "linear") return Variant::Linear;
  if (s == "general") return Variant::General;
  throw Error("unknown variant '" + s + "' (expected 'linear' or 'general')");
}

Mode mode_from_string(const std::string& s) {
  if (s == "faithful") return Mode::Faithful;
  if (s == "swap_only") return Mode::SwapOnly;
  throw Error("unknown mode '" + s + "' (expected 'faithful' or 'swap_only')");
}

void validate_problem(const RoutingProblem& problem) {
  if (problem.circuit.qubit_count() != problem.graph.node_count()) {
    throw Error("qubit count (" + std::to_string(problem.circuit.qubit_count()) +
                ") must equal node count (" + std::to_string(problem.graph.node_count()) + ")");
  }
  if (problem.dummy_count < 0) {
    throw Error("dummy layer count must be non-negative");
  }
  if (problem.variant == Variant::Linear && !problem.graph.is_path()) {
    throw Error("linear variant requires the path graph with edges {i,i+1}");
  }
}

}  // namespace qroute
