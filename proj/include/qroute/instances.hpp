#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "qroute/circuit.hpp"
#include "qroute/hardware_graph.hpp"

namespace qroute {

enum class Topology { LinearArray, Lattice };

std::string to_string(Topology t);
Topology topology_from_string(const std::string& s);

/// Parameters for one generated benchmark instance. Square circuits have
/// layer_count = qubit_count. rows/cols of 0 mean "use default_lattice_dims".
struct InstanceSpec {
  int qubit_count = 0;
  int layer_count = 0;
  Topology topology = Topology::LinearArray;
  int rows = 0;
  int cols = 0;
  std::uint64_t seed = 1;
};

/// Path graph on n nodes, edges {i,i+1}.
HardwareGraph gen_linear_topology(int n);

/// rows x cols grid graph in row-major labeling.
HardwareGraph gen_lattice_topology(int rows, int cols);

/// rows x cols with rows the largest divisor of q not exceeding sqrt(q):
/// 4 -> 2x2, 6 -> 2x3, 8 -> 2x4, 9 -> 3x3, 10 -> 2x5. Throws if q is prime
/// (no grid with cols >= 2 exists).
std::pair<int, int> default_lattice_dims(int q);

/// Pairs consecutive permutation entries into floor(q/2) gates; for odd q
/// the last entry idles. Permutation 3-1-2-4 yields gates {3,1} and {2,4}.
std::vector<Gate> pair_permutation(const std::vector<int>& perm);

/// Random circuit built layer by layer: draw a uniform permutation of
/// 1..q and pair consecutive entries into floor(q/2) gates (for odd q the
/// last element idles). Layers are independent draws from one stream.
///
/// Reproducibility contract: permutations come from a Fisher-Yates shuffle
/// driven by std::mt19937_64 with rejection-sampled bounded draws, so a
/// given seed yields the identical circuit on every conforming platform.
LogicalCircuit gen_square_circuit(int q, int layers, std::uint64_t seed);

/// Canonical file stem, e.g. "q4_L4_linear_s7".
std::string instance_name(const InstanceSpec& spec);

}  // namespace qroute
