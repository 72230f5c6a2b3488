#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace porient {

// Undirected multigraph. Vertices are 0..n-1, edges keep their input order
// and that order doubles as the default total order on edge ids. The stored
// (tail, head) of an edge is its default reference direction. Loops and
// parallel edges are allowed.
struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  int m() const { return static_cast<int>(edges.size()); }
  int tail(int e) const { return edges[e].first; }
  int head(int e) const { return edges[e].second; }
  bool is_loop(int e) const { return edges[e].first == edges[e].second; }

  bool operator==(const Multigraph&) const = default;
};

enum class EdgeClass { Bridge, Loop, Ordinary };

// Minor operation result: the new graph plus a stable old-id -> new-id map
// (-1 for the removed edge). Orientations are transported across minors
// through this map.
struct MinorResult {
  Multigraph graph;
  std::vector<int> edge_map;
};

inline Multigraph build(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw std::invalid_argument("multigraph: vertex count must be >= 1");
  for (const auto& [t, h] : edges) {
    if (t < 0 || t >= n || h < 0 || h >= n)
      throw std::invalid_argument("multigraph: edge endpoint out of range");
  }
  return Multigraph{n, std::move(edges)};
}

inline void check_edge_id(const Multigraph& g, int e) {
  if (e < 0 || e >= g.m()) throw std::invalid_argument("multigraph: invalid edge id");
}

inline bool is_connected(const Multigraph& g) {
  if (g.n <= 1) return true;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& [t, h] : g.edges) {
    adj[t].push_back(h);
    adj[h].push_back(t);
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.n;
}

inline MinorResult delete_edge(const Multigraph& g, int e) {
  check_edge_id(g, e);
  MinorResult r;
  r.graph.n = g.n;
  r.edge_map.assign(g.m(), -1);
  for (int i = 0; i < g.m(); ++i) {
    if (i == e) continue;
    r.edge_map[i] = r.graph.m();
    r.graph.edges.push_back(g.edges[i]);
  }
  return r;
}

// Contracts a non-loop edge. The smaller endpoint identifier survives;
// vertices above the larger one shift down by one.
inline MinorResult contract_edge(const Multigraph& g, int e) {
  check_edge_id(g, e);
  if (g.is_loop(e)) throw std::invalid_argument("multigraph: cannot contract a loop");
  int a = std::min(g.tail(e), g.head(e));
  int b = std::max(g.tail(e), g.head(e));
  auto relabel = [&](int v) {
    if (v == b) return a;
    return v > b ? v - 1 : v;
  };
  MinorResult r;
  r.graph.n = g.n - 1;
  r.edge_map.assign(g.m(), -1);
  for (int i = 0; i < g.m(); ++i) {
    if (i == e) continue;
    r.edge_map[i] = r.graph.m();
    r.graph.edges.emplace_back(relabel(g.edges[i].first), relabel(g.edges[i].second));
  }
  return r;
}

inline EdgeClass classify_edge(const Multigraph& g, int e) {
  check_edge_id(g, e);
  if (g.is_loop(e)) return EdgeClass::Loop;
  // bridge iff deletion disconnects
  return is_connected(delete_edge(g, e).graph) ? EdgeClass::Ordinary : EdgeClass::Bridge;
}

// Cycle rank m - n + 1 of a connected graph.
inline int genus(const Multigraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("multigraph: genus requires a connected graph");
  return g.m() - g.n + 1;
}

}  // namespace porient
