#include "qroute/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "qroute/error.hpp"

namespace qroute {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 2;

// Permutations are encoded 4 bits per slot; fine for n <= 8 which is far
// beyond the enumeration cap anyway.
std::uint64_t encode(const std::vector<int>& p) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    code |= static_cast<std::uint64_t>(p[i]) << (4 * i);
  }
  return code;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// outer is a node permutation; inner maps (qubit or node) -> node.
std::vector<int> compose(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> out(inner.size());
  for (std::size_t k = 0; k < inner.size(); ++k) out[k] = outer[inner[k] - 1];
  return out;
}

// inv[node-1] = 0-based qubit index occupying that node.
std::vector<int> occupant_of_node(const std::vector<int>& mapping) {
  std::vector<int> inv(mapping.size());
  for (std::size_t q = 0; q < mapping.size(); ++q) inv[mapping[q] - 1] = static_cast<int>(q);
  return inv;
}

void enumerate_matchings(const std::vector<std::pair<int, int>>& edges, std::size_t next,
                         std::uint64_t used, std::vector<int>& perm,
                         std::vector<std::vector<int>>& out) {
  out.push_back(perm);
  for (std::size_t e = next; e < edges.size(); ++e) {
    auto [i, j] = edges[e];
    std::uint64_t bits = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
    if (used & bits) continue;
    std::swap(perm[i - 1], perm[j - 1]);
    enumerate_matchings(edges, e + 1, used | bits, perm, out);
    std::swap(perm[i - 1], perm[j - 1]);
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_transitions(const HardwareGraph& graph, Mode mode,
                                                    int node_cap) {
  const int n = graph.node_count();
  if (n > node_cap) {
    throw Error("transition enumeration capped at " + std::to_string(node_cap) + " nodes");
  }
  std::vector<std::vector<int>> out;
  if (mode == Mode::SwapOnly) {
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 1);
    enumerate_matchings(graph.edges(), 0, 0, identity, out);
    std::sort(out.begin(), out.end());
  } else {
    for (auto& p : all_permutations(n)) {
      bool ok = true;
      for (int i = 1; i <= n && ok; ++i) {
        if (p[i - 1] != i && !graph.adjacent(i, p[i - 1])) ok = false;
      }
      if (ok) out.push_back(std::move(p));
    }
  }
  return out;
}

namespace {

struct GapParent {
  int prev_mapping = -1;   // mapping index at the previous gate layer
  int gate_move = -1;      // transition index applied out of that layer
  int mid_mapping = -1;    // mapping index entering the dummy block
};

struct OracleSpace {
  int n;
  std::vector<std::vector<int>> mappings;  // all |V|! bijections, lexicographic
  std::unordered_map<std::uint64_t, int> index;
  std::vector<std::vector<int>> transitions;
  std::vector<int> dist;                    // Cayley distance from identity per mapping index
  std::vector<std::pair<int, int>> parent;  // BFS tree: (predecessor index, transition index)

  int idx(const std::vector<int>& p) const { return index.at(encode(p)); }
};

OracleSpace build_space(const HardwareGraph& graph, Mode mode, int node_cap) {
  OracleSpace s;
  s.n = graph.node_count();
  s.mappings = all_permutations(s.n);
  s.index.reserve(s.mappings.size() * 2);
  for (std::size_t i = 0; i < s.mappings.size(); ++i) {
    s.index.emplace(encode(s.mappings[i]), static_cast<int>(i));
  }
  s.transitions = enumerate_transitions(graph, mode, node_cap);

  // Distances in the Cayley graph generated by the non-identity transitions,
  // acting by left composition. dist(sigma) is the minimum number of counted
  // steps turning a mapping m into sigma composed with m.
  s.dist.assign(s.mappings.size(), kInf);
  s.parent.assign(s.mappings.size(), {-1, -1});
  std::vector<int> identity(s.n);
  std::iota(identity.begin(), identity.end(), 1);
  const int start = s.idx(identity);
  s.dist[start] = 0;
  std::queue<int> bfs;
  bfs.push(start);
  while (!bfs.empty()) {
    int cur = bfs.front();
    bfs.pop();
    for (std::size_t t = 0; t < s.transitions.size(); ++t) {
      int next = s.idx(compose(s.transitions[t], s.mappings[cur]));
      if (s.dist[next] == kInf) {
        s.dist[next] = s.dist[cur] + 1;
        s.parent[next] = {cur, static_cast<int>(t)};
        bfs.push(next);
      }
    }
  }
  return s;
}

// Generator sequence composing to the permutation at sigma_idx, in
// application order.
std::vector<int> generator_path(const OracleSpace& s, int sigma_idx) {
  std::vector<int> steps;
  while (s.parent[sigma_idx].first >= 0) {
    steps.push_back(s.parent[sigma_idx].second);
    sigma_idx = s.parent[sigma_idx].first;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

bool gates_adjacent(const HardwareGraph& graph, const std::vector<Gate>& gates,
                    const std::vector<int>& mapping) {
  for (const auto& g : gates) {
    if (!graph.adjacent(mapping[g.a - 1], mapping[g.b - 1])) return false;
  }
  return true;
}

// A transition out of a gate layer must fix or swap every gate's node pair.
bool gate_move_ok(const std::vector<Gate>& gates, const std::vector<int>& mapping,
                  const std::vector<int>& transition) {
  for (const auto& g : gates) {
    int na = mapping[g.a - 1];
    int nb = mapping[g.b - 1];
    int ia = transition[na - 1];
    int ib = transition[nb - 1];
    bool stays = ia == na && ib == nb;
    bool swaps = ia == nb && ib == na;
    if (!stays && !swaps) return false;
  }
  return true;
}

}  // namespace

OracleResult oracle_optimal(const RoutingProblem& problem, int node_cap, int layer_cap) {
  validate_problem(problem);
  const auto& graph = problem.graph;
  const auto& circuit = problem.circuit;
  const int L = circuit.layer_count();
  if (graph.node_count() > node_cap) {
    throw Error("oracle capped at " + std::to_string(node_cap) + " nodes");
  }
  if (L > layer_cap) {
    throw Error("oracle capped at " + std::to_string(layer_cap) + " layers");
  }
  const int K = problem.dummy_count;

  OracleSpace s = build_space(graph, problem.mode, node_cap);
  const int M = static_cast<int>(s.mappings.size());

  std::vector<std::vector<char>> feasible(L, std::vector<char>(M, 0));
  for (int l = 0; l < L; ++l) {
    for (int m = 0; m < M; ++m) {
      feasible[l][m] = gates_adjacent(graph, circuit.layer(l), s.mappings[m]);
    }
  }

  std::vector<int> dp(M, kInf);
  for (int m = 0; m < M; ++m) {
    if (feasible[0][m]) dp[m] = 0;
  }
  std::vector<std::vector<GapParent>> parents(L);  // parents[l] explains gate layer l

  for (int l = 0; l + 1 < L; ++l) {
    // Free transition out of gate layer l.
    std::vector<int> mid(M, kInf);
    std::vector<std::pair<int, int>> mid_parent(M, {-1, -1});
    for (int m = 0; m < M; ++m) {
      if (dp[m] >= kInf || !feasible[l][m]) continue;
      for (std::size_t t = 0; t < s.transitions.size(); ++t) {
        if (!gate_move_ok(circuit.layer(l), s.mappings[m], s.transitions[t])) continue;
        int next = s.idx(compose(s.transitions[t], s.mappings[m]));
        if (dp[m] < mid[next]) {
          mid[next] = dp[m];
          mid_parent[next] = {m, static_cast<int>(t)};
        }
      }
    }

    // Up to K counted transitions through the dummy block.
    std::vector<int> dp_next(M, kInf);
    parents[l + 1].assign(M, GapParent{});
    for (int a = 0; a < M; ++a) {
      if (mid[a] >= kInf) continue;
      const auto occupant = occupant_of_node(s.mappings[a]);
      for (int b = 0; b < M; ++b) {
        if (!feasible[l + 1][b]) continue;
        // sigma = mapping_b composed with mapping_a^-1
        std::vector<int> sigma(s.n);
        for (int node = 1; node <= s.n; ++node) {
          sigma[node - 1] = s.mappings[b][occupant[node - 1]];
        }
        int d = s.dist[s.idx(sigma)];
        if (d > K) continue;
        int cost = mid[a] + d;
        if (cost < dp_next[b]) {
          dp_next[b] = cost;
          parents[l + 1][b] = {mid_parent[a].first, mid_parent[a].second, a};
        }
      }
    }
    dp = std::move(dp_next);
  }

  int best = kInf, best_m = -1;
  for (int m = 0; m < M; ++m) {
    if (feasible[L - 1][m] && dp[m] < best) {
      best = dp[m];
      best_m = m;
    }
  }
  if (best >= kInf) return {};

  // Walk parents back to gate-layer mappings, then fill each block with the
  // BFS path steps frontloaded and identity padding behind them.
  std::vector<int> gate_mapping(L), block_entry(L);  // block_entry[l+1]: mapping entering block l
  gate_mapping[L - 1] = best_m;
  for (int l = L - 1; l > 0; --l) {
    const GapParent& gp = parents[l][gate_mapping[l]];
    gate_mapping[l - 1] = gp.prev_mapping;
    block_entry[l] = gp.mid_mapping;
  }

  const LayerTimeline tl = problem.timeline();
  std::vector<std::vector<int>> placements;
  placements.reserve(tl.size());
  for (int l = 0; l < L; ++l) {
    placements.push_back(s.mappings[gate_mapping[l]]);
    if (l + 1 == L) break;
    std::vector<int> cur = s.mappings[block_entry[l + 1]];
    const auto occupant = occupant_of_node(cur);
    std::vector<int> sigma(s.n);
    for (int node = 1; node <= s.n; ++node) {
      sigma[node - 1] = s.mappings[gate_mapping[l + 1]][occupant[node - 1]];
    }
    const auto steps = generator_path(s, s.idx(sigma));
    for (int k = 0; k < K; ++k) {
      placements.push_back(cur);  // entering dummy slot k
      if (k < static_cast<int>(steps.size())) {
        cur = compose(s.transitions[steps[k]], cur);
      }
    }
    // cur now equals the next gate layer's mapping.
  }

  OracleResult res;
  res.feasible = true;
  res.optimum = best;
  res.witness = std::move(placements);
  return res;
}

}  // namespace qroute
