#pragma once

#include <string>

#include "qroute/circuit.hpp"
#include "qroute/hardware_graph.hpp"
#include "qroute/timeline.hpp"

namespace qroute {

/// Which constraint formulation to build. Linear uses absolute-value
/// constraints over node indices and requires the canonical path graph;
/// General uses allowed-tuple constraints over the arc set and works on any
/// connected graph.
enum class Variant { Linear, General };

/// Transition semantics. Faithful admits every bijective step in which each
/// moved qubit lands on a neighboring node, which on graphs with cycles
/// includes cyclic rotations. SwapOnly restricts every transition to a set
/// of disjoint adjacent transpositions, i.e. one physically realizable
/// parallel SWAP round.
enum class Mode { Faithful, SwapOnly };

std::string to_string(Variant v);
std::string to_string(Mode m);
Variant variant_from_string(const std::string& s);
Mode mode_from_string(const std::string& s);

/// A routing instance: the circuit, the device, the dummy-layer budget per
/// gap, plus model and search toggles. Immutable by convention once built;
/// validate_problem enforces the cross-field invariants.
struct RoutingProblem {
  LogicalCircuit circuit;
  HardwareGraph graph;
  int dummy_count = 4;
  Variant variant = Variant::General;
  Mode mode = Mode::Faithful;
  bool symmetry_breaking = true;
  bool frontload_dominance = true;

  LayerTimeline timeline() const { return expand_timeline(circuit, dummy_count); }
};

/// Throws Error unless |Q| = |V|, K >= 0, and the Linear variant is paired
/// with the canonical path graph.
void validate_problem(const RoutingProblem& problem);

}  // namespace qroute
