#pragma once

#include <vector>

namespace qroute {

/// Two-qubit gate on an unordered qubit pair; normalized so a < b.
struct Gate {
  int a;
  int b;
  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered layers of two-qubit gates. Gates within a layer act on pairwise
/// disjoint qubits and execute in parallel; single-qubit gates are assumed
/// merged away upstream.
class LogicalCircuit {
 public:
  LogicalCircuit(int qubit_count, std::vector<std::vector<Gate>> layers);

  int qubit_count() const { return qubit_count_; }
  int layer_count() const { return static_cast<int>(layers_.size()); }
  const std::vector<std::vector<Gate>>& layers() const { return layers_; }
  const std::vector<Gate>& layer(int idx) const { return layers_[idx]; }

  /// Total number of gates across all layers.
  int gate_count() const;

 private:
  int qubit_count_;
  std::vector<std::vector<Gate>> layers_;
};

}  // namespace qroute
