#include "qroute/circuit.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "qroute/error.hpp"

namespace qroute {

LogicalCircuit::LogicalCircuit(int qubit_count, std::vector<std::vector<Gate>> layers)
    : qubit_count_(qubit_count), layers_(std::move(layers)) {
  if (qubit_count < 2) {
    throw Error("circuit needs at least two qubits");
  }
  if (layers_.empty()) {
    throw Error("circuit needs at least one layer");
  }
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    auto& layer = layers_[l];
    if (layer.empty()) {
      throw Error("layer " + std::to_string(l + 1) + " is empty");
    }
    std::vector<bool> used(qubit_count_ + 1, false);
    for (auto& g : layer) {
      if (g.a == g.b) {
        throw Error("layer " + std::to_string(l + 1) + " has a gate on a single qubit");
      }
      if (g.a > g.b) std::swap(g.a, g.b);
      if (g.a < 1 || g.b > qubit_count_) {
        throw Error("layer " + std::to_string(l + 1) + " references a qubit outside 1.." +
                    std::to_string(qubit_count_));
      }
      if (used[g.a] || used[g.b]) {
        throw Error("layer " + std::to_string(l + 1) + " has overlapping gate qubits");
      }
      used[g.a] = used[g.b] = true;
    }
  }
}

int LogicalCircuit::gate_count() const {
  int n = 0;
  for (const auto& layer : layers_) n += static_cast<int>(layer.size());
  return n;
}

}  // namespace qroute
