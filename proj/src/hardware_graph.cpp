#include "qroute/hardware_graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "qroute/error.hpp"

namespace qroute {

namespace {
constexpr int kMaxNodes = 63;  // node ids are used as bit positions in uint64_t masks
}

HardwareGraph::HardwareGraph(int node_count, std::vector<std::pair<int, int>> edges)
    : node_count_(node_count) {
  if (node_count < 1) {
    throw Error("hardware graph needs at least one node");
  }
  if (node_count > kMaxNodes) {
    throw Error("hardware graph exceeds the supported node count (" +
                std::to_string(kMaxNodes) + ")");
  }
  std::set<std::pair<int, int>> seen;
  for (auto& [i, j] : edges) {
    if (i < 1 || i > node_count || j < 1 || j > node_count) {
      throw Error("edge {" + std::to_string(i) + "," + std::to_string(j) +
                  "} references a node outside 1.." + std::to_string(node_count));
    }
    if (i == j) {
      throw Error("self-loop on node " + std::to_string(i));
    }
    if (i > j) std::swap(i, j);
    if (!seen.insert({i, j}).second) {
      throw Error("duplicate edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
    }
  }
  edges_.assign(seen.begin(), seen.end());

  neighbor_mask_.assign(node_count_ + 1, 0);
  for (auto [i, j] : edges_) {
    neighbor_mask_[i] |= std::uint64_t{1} << j;
    neighbor_mask_[j] |= std::uint64_t{1} << i;
  }

  // All-pairs hop distances by BFS; also the connectivity check.
  dist_.assign(node_count_ + 1, std::vector<int>(node_count_ + 1, -1));
  for (int s = 1; s <= node_count_; ++s) {
    auto& d = dist_[s];
    d[s] = 0;
    std::queue<int> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int v = 1; v <= node_count_; ++v) {
        if ((neighbor_mask_[u] >> v & 1) && d[v] < 0) {
          d[v] = d[u] + 1;
          bfs.push(v);
        }
      }
    }
    for (int v = 1; v <= node_count_; ++v) {
      if (d[v] < 0) throw Error("hardware graph is not connected");
    }
  }
}

HardwareGraph HardwareGraph::path(int n) {
  if (n < 2) throw Error("path topology needs at least two nodes");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return HardwareGraph(n, std::move(edges));
}

HardwareGraph HardwareGraph::lattice(int rows, int cols) {
  if (rows < 1 || cols < 2 || rows * cols < 2) {
    throw Error("lattice topology needs rows >= 1 and cols >= 2");
  }
  auto id = [cols](int r, int c) { return (r - 1) * cols + c; };
  std::vector<std::pair<int, int>> edges;
  for (int r = 1; r <= rows; ++r) {
    for (int c = 1; c <= cols; ++c) {
      if (c < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return HardwareGraph(rows * cols, std::move(edges));
}

std::vector<std::pair<int, int>> HardwareGraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(2 * edges_.size());
  for (auto [i, j] : edges_) {
    out.push_back({i, j});
    out.push_back({j, i});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool HardwareGraph::adjacent(int i, int j) const {
  if (i < 1 || i > node_count_ || j < 1 || j > node_count_) return false;
  return (neighbor_mask_[i] >> j) & 1;
}

bool HardwareGraph::is_path() const {
  if (static_cast<int>(edges_.size()) != node_count_ - 1) return false;
  for (int i = 1; i < node_count_; ++i) {
    if (!adjacent(i, i + 1)) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> HardwareGraph::lattice_dims() const {
  int n = node_count_;
  for (int rows = 1; rows * rows <= n; ++rows) {
    if (n % rows != 0) continue;
    int cols = n / rows;
    if (cols < 2) continue;
    std::size_t expected = static_cast<std::size_t>(rows) * (cols - 1) +
                           static_cast<std::size_t>(cols) * (rows - 1);
    if (edges_.size() != expected) continue;
    auto id = [cols](int r, int c) { return (r - 1) * cols + c; };
    bool match = true;
    for (int r = 1; r <= rows && match; ++r) {
      for (int c = 1; c <= cols && match; ++c) {
        if (c < cols && !adjacent(id(r, c), id(r, c + 1))) match = false;
        if (r < rows && !adjacent(id(r, c), id(r + 1, c))) match = false;
      }
    }
    if (match) return std::make_pair(rows, cols);
  }
  return std::nullopt;
}

}  // namespace qroute
