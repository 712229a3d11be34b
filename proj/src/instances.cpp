#include "qroute/instances.hpp"

#include <limits>
#include <random>
#include <vector>

#include "qroute/error.hpp"

namespace qroute {

std::string to_string(Topology t) {
  return t == Topology::LinearArray ? "linear" : "lattice";
}

Topology topology_from_string(const std::string& s) {
  if (s == "linear") return Topology::LinearArray;
  if (s == "lattice") return Topology::Lattice;
  throw Error("unknown topology '" + s + "' (expected 'linear' or 'lattice')");
}

HardwareGraph gen_linear_topology(int n) { return HardwareGraph::path(n); }

HardwareGraph gen_lattice_topology(int rows, int cols) {
  return HardwareGraph::lattice(rows, cols);
}

std::pair<int, int> default_lattice_dims(int q) {
  int best = 0;
  for (int r = 2; r * r <= q; ++r) {
    if (q % r == 0) best = r;
  }
  if (best < 2) {
    throw Error("no lattice dimensions for " + std::to_string(q) + " qubits");
  }
  return {best, q / best};
}

namespace {

// Rejection-sampled uniform draw from [0, bound); avoids the modulo bias
// and any library-specific distribution internals.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

}  // namespace

std::vector<Gate> pair_permutation(const std::vector<int>& perm) {
  std::vector<Gate> gates;
  gates.reserve(perm.size() / 2);
  for (std::size_t i = 0; i + 1 < perm.size(); i += 2) {
    gates.push_back({perm[i], perm[i + 1]});
  }
  return gates;
}

LogicalCircuit gen_square_circuit(int q, int layers, std::uint64_t seed) {
  if (q < 2) throw Error("square circuits need at least two qubits");
  if (layers < 1) throw Error("square circuits need at least one layer");

  std::mt19937_64 rng(seed);
  std::vector<std::vector<Gate>> gate_layers;
  gate_layers.reserve(layers);
  std::vector<int> perm(q);
  for (int l = 0; l < layers; ++l) {
    for (int i = 0; i < q; ++i) perm[i] = i + 1;
    // Fisher-Yates
    for (int i = q - 1; i > 0; --i) {
      int j = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(i) + 1));
      std::swap(perm[i], perm[j]);
    }
    gate_layers.push_back(pair_permutation(perm));
  }
  return LogicalCircuit(q, std::move(gate_layers));
}

std::string instance_name(const InstanceSpec& spec) {
  return "q" + std::to_string(spec.qubit_count) + "_L" + std::to_string(spec.layer_count) +
         "_" + to_string(spec.topology) + "_s" + std::to_string(spec.seed);
}

}  // namespace qroute
