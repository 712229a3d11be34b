#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace qroute {

/// Physical qubit connectivity. Nodes are numbered 1..n; edges are unordered
/// node pairs. The graph must be connected with no self-loops or duplicate
/// edges. Two-qubit gates execute only across edges; the derived arc set
/// contains both orientations of every edge.
class HardwareGraph {
 public:
  HardwareGraph(int node_count, std::vector<std::pair<int, int>> edges);

  /// Path 1-2-...-n.
  static HardwareGraph path(int n);
  /// rows x cols grid, node (r,c) -> (r-1)*cols + c, row-major.
  static HardwareGraph lattice(int rows, int cols);

  int node_count() const { return node_count_; }

  /// Normalized (i < j), sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Both orientations of every edge, sorted.
  std::vector<std::pair<int, int>> arcs() const;

  bool adjacent(int i, int j) const;

  /// Bit j set iff {i,j} is an edge. Node ids double as bit positions.
  std::uint64_t neighbor_mask(int i) const { return neighbor_mask_[i]; }

  /// Hop distance; the graph is connected so this is always defined.
  int distance(int i, int j) const { return dist_[i][j]; }

  /// True iff the edge set is exactly {i,i+1} for i = 1..n-1.
  bool is_path() const;

  /// Detects a row-major grid labeling; returns (rows, cols) with
  /// rows <= cols if the edge set matches one, nullopt otherwise.
  std::optional<std::pair<int, int>> lattice_dims() const;

 private:
  int node_count_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> neighbor_mask_;  // indexed 1..n
  std::vector<std::vector<int>> dist_;        // indexed 1..n
};

}  // namespace qroute
