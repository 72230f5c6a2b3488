#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "multigraph.hpp"

namespace porient {

enum class EdgeState : std::uint8_t { Unoriented = 0, Forward = 1, Backward = 2 };

// Per-edge orientation state, indexed by edge id. Forward means oriented
// tail -> head as stored in the Multigraph.
using PartialOrientation = std::vector<EdgeState>;

enum class OrientationClass {
  Acyclic,
  StronglyConnected,
  CutMinimal,
  CycleMinimal,
  CycleCutMinimal,
  CyclePathMinimal,
  All,
};

inline EdgeState reversed(EdgeState s) {
  if (s == EdgeState::Forward) return EdgeState::Backward;
  if (s == EdgeState::Backward) return EdgeState::Forward;
  return EdgeState::Unoriented;
}

// Tail/head of edge e under orientation state s (requires s oriented).
inline int oriented_tail(const Multigraph& g, int e, EdgeState s) {
  return s == EdgeState::Forward ? g.tail(e) : g.head(e);
}
inline int oriented_head(const Multigraph& g, int e, EdgeState s) {
  return s == EdgeState::Forward ? g.head(e) : g.tail(e);
}

inline int oriented_count(const PartialOrientation& o) {
  int c = 0;
  for (EdgeState s : o)
    if (s != EdgeState::Unoriented) ++c;
  return c;
}

// --- enumeration: base-3 counter over edge ids, digit 0 = Unoriented ---

inline std::uint64_t state_count(const Multigraph& g) {
  std::uint64_t c = 1;
  for (int i = 0; i < g.m(); ++i) c *= 3;
  return c;
}

inline PartialOrientation orientation_from_index(const Multigraph& g, std::uint64_t idx) {
  PartialOrientation o(g.m(), EdgeState::Unoriented);
  for (int e = 0; e < g.m(); ++e) {
    o[e] = static_cast<EdgeState>(idx % 3);
    idx /= 3;
  }
  return o;
}

inline std::uint64_t orientation_index(const PartialOrientation& o) {
  std::uint64_t idx = 0;
  for (int e = static_cast<int>(o.size()) - 1; e >= 0; --e)
    idx = idx * 3 + static_cast<std::uint64_t>(o[e]);
  return idx;
}

// Deterministic stream of all 3^m partial orientations in counter order,
// partitionable by index range.
template <typename F>
void enumerate_partial_orientations(const Multigraph& g, F&& f, std::uint64_t begin = 0,
                                    std::uint64_t end = UINT64_MAX) {
  std::uint64_t total = state_count(g);
  if (end > total) end = total;
  for (std::uint64_t i = begin; i < end; ++i) f(orientation_from_index(g, i));
}

// D_O: per-vertex count of inbound oriented edges. An oriented loop
// contributes exactly 1 to its vertex.
inline std::vector<int> indegree_sequence(const Multigraph& g, const PartialOrientation& o) {
  std::vector<int> d(g.n, 0);
  for (int e = 0; e < g.m(); ++e)
    if (o[e] != EdgeState::Unoriented) ++d[oriented_head(g, e, o[e])];
  return d;
}

// --- directed cycle detection ---

// A consistently oriented simple closed walk; an oriented loop is a valid
// cycle of length 1. Edges listed in traversal order.
struct DirectedCycleWitness {
  std::vector<int> edges;
};

namespace detail {

struct Arc {
  int to;
  int edge;
};

inline std::vector<std::vector<Arc>> oriented_adjacency(const Multigraph& g,
                                                        const PartialOrientation& o) {
  std::vector<std::vector<Arc>> adj(g.n);
  for (int e = 0; e < g.m(); ++e) {
    if (o[e] == EdgeState::Unoriented || g.is_loop(e)) continue;
    adj[oriented_tail(g, e, o[e])].push_back({oriented_head(g, e, o[e]), e});
  }
  return adj;
}

}  // namespace detail

inline std::optional<DirectedCycleWitness> find_directed_cycle(const Multigraph& g,
                                                               const PartialOrientation& o) {
  for (int e = 0; e < g.m(); ++e)
    if (g.is_loop(e) && o[e] != EdgeState::Unoriented) return DirectedCycleWitness{{e}};

  auto adj = detail::oriented_adjacency(g, o);
  // iterative DFS with colors; recover the cycle from the arc stack
  std::vector<int> color(g.n, 0);  // 0 white, 1 gray, 2 black
  for (int root = 0; root < g.n; ++root) {
    if (color[root] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack;  // (vertex, next arc index)
    std::vector<int> arc_stack;                      // edge used to enter stack[i+1]
    stack.emplace_back(root, 0);
    color[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        auto [w, e] = adj[v][next++];
        if (color[w] == 1) {
          // back arc: unwind the stack to w
          DirectedCycleWitness wit;
          std::size_t j = stack.size();
          while (j > 0 && stack[j - 1].first != w) --j;
          for (std::size_t i = j; i < stack.size(); ++i) wit.edges.push_back(arc_stack[i - 1]);
          wit.edges.push_back(e);
          return wit;
        }
        if (color[w] == 0) {
          color[w] = 1;
          stack.emplace_back(w, 0);
          arc_stack.push_back(e);
        }
      } else {
        color[v] = 2;
        stack.pop_back();
        if (!arc_stack.empty()) arc_stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

inline bool is_acyclic(const Multigraph& g, const PartialOrientation& o) {
  return !find_directed_cycle(g, o).has_value();
}

// --- directed cut detection via mixed-graph condensation ---

// A vertex bipartition (X, X^c) with every crossing edge oriented X -> X^c.
struct DirectedCutWitness {
  std::vector<int> side;      // X
  std::vector<int> crossing;  // edge ids, all oriented X -> X^c
};

namespace detail {

// Strongly connected components of the mixed digraph (oriented edge -> one
// arc, unoriented edge -> two arcs). Returns component id per vertex.
inline std::vector<int> mixed_scc(const Multigraph& g, const PartialOrientation& o,
                                  int& comp_count) {
  std::vector<std::vector<int>> adj(g.n);
  for (int e = 0; e < g.m(); ++e) {
    if (g.is_loop(e)) continue;
    if (o[e] == EdgeState::Unoriented) {
      adj[g.tail(e)].push_back(g.head(e));
      adj[g.head(e)].push_back(g.tail(e));
    } else {
      adj[oriented_tail(g, e, o[e])].push_back(oriented_head(g, e, o[e]));
    }
  }
  // iterative Tarjan
  std::vector<int> comp(g.n, -1), low(g.n), num(g.n, -1), on_stack(g.n, 0), scc_stack;
  comp_count = 0;
  int counter = 0;
  for (int root = 0; root < g.n; ++root) {
    if (num[root] != -1) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    num[root] = low[root] = counter++;
    scc_stack.push_back(root);
    on_stack[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        int w = adj[v][next++];
        if (num[w] == -1) {
          num[w] = low[w] = counter++;
          scc_stack.push_back(w);
          on_stack[w] = 1;
          stack.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        if (low[v] == num[v]) {
          while (true) {
            int w = scc_stack.back();
            scc_stack.pop_back();
            on_stack[w] = 0;
            comp[w] = comp_count;
            if (w == v) break;
          }
          ++comp_count;
        }
        stack.pop_back();
        if (!stack.empty()) {
          int parent = stack.back().first;
          low[parent] = std::min(low[parent], low[v]);
        }
      }
    }
  }
  return comp;
}

}  // namespace detail

inline std::optional<DirectedCutWitness> find_directed_cut(const Multigraph& g,
                                                           const PartialOrientation& o) {
  if (!is_connected(g))
    throw std::invalid_argument("find_directed_cut: graph must be connected");
  int comp_count = 0;
  auto comp = detail::mixed_scc(g, o, comp_count);
  if (comp_count <= 1) return std::nullopt;
  // find a sink component of the condensation; X = its complement
  std::vector<char> has_out(comp_count, 0);
  for (int e = 0; e < g.m(); ++e) {
    if (g.is_loop(e) || o[e] == EdgeState::Unoriented) continue;
    int ct = comp[oriented_tail(g, e, o[e])], ch = comp[oriented_head(g, e, o[e])];
    if (ct != ch) has_out[ct] = 1;
  }
  // unoriented crossing edges give arcs both ways, so SCCs they join are merged;
  // a sink exists since the condensation is a nonempty DAG
  int sink = -1;
  for (int c = 0; c < comp_count; ++c)
    if (!has_out[c]) {
      sink = c;
      break;
    }
  DirectedCutWitness w;
  for (int v = 0; v < g.n; ++v)
    if (comp[v] != sink) w.side.push_back(v);
  for (int e = 0; e < g.m(); ++e) {
    if (g.is_loop(e)) continue;
    bool ta = comp[g.tail(e)] != sink, ha = comp[g.head(e)] != sink;
    if (ta != ha) w.crossing.push_back(e);
  }
  return w;
}

inline bool is_strongly_connected(const Multigraph& g, const PartialOrientation& o) {
  return !find_directed_cut(g, o).has_value();
}

// --- extension to full orientations ---

// Orients every unoriented edge of an acyclic partial orientation so that
// the result stays acyclic. Uses the lowest-vertex-id linear extension of
// the reachability order of the oriented arcs.
inline PartialOrientation extend_to_full_acyclic(const Multigraph& g,
                                                 const PartialOrientation& o) {
  for (int e = 0; e < g.m(); ++e)
    if (g.is_loop(e)) throw std::invalid_argument("extend_to_full_acyclic: graph has a loop");
  if (!is_acyclic(g, o))
    throw std::invalid_argument("extend_to_full_acyclic: input is not acyclic");
  auto adj = detail::oriented_adjacency(g, o);
  std::vector<int> indeg(g.n, 0);
  for (const auto& arcs : adj)
    for (const auto& a : arcs) ++indeg[a.to];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < g.n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> pos(g.n, -1);
  int next = 0;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    pos[v] = next++;
    for (const auto& a : adj[v])
      if (--indeg[a.to] == 0) ready.push(a.to);
  }
  PartialOrientation full = o;
  for (int e = 0; e < g.m(); ++e) {
    if (full[e] != EdgeState::Unoriented) continue;
    full[e] = pos[g.tail(e)] < pos[g.head(e)] ? EdgeState::Forward : EdgeState::Backward;
  }
  return full;
}

namespace detail {

inline bool extend_strong_rec(const Multigraph& g, PartialOrientation& o, int e) {
  while (e < g.m() && o[e] != EdgeState::Unoriented) ++e;
  if (e == g.m()) return is_strongly_connected(g, o);
  for (EdgeState s : {EdgeState::Forward, EdgeState::Backward}) {
    o[e] = s;
    if (is_strongly_connected(g, o) && extend_strong_rec(g, o, e + 1)) return true;
    o[e] = EdgeState::Unoriented;
  }
  return false;
}

}  // namespace detail

// Orients every unoriented edge of a strongly connected (no directed cut)
// partial orientation of a bridgeless graph so that the full orientation
// has no directed cut. Backtracking with strong-connectedness pruning.
inline PartialOrientation extend_to_full_strong(const Multigraph& g,
                                                const PartialOrientation& o) {
  for (int e = 0; e < g.m(); ++e)
    if (classify_edge(g, e) == EdgeClass::Bridge)
      throw std::invalid_argument("extend_to_full_strong: graph has a bridge");
  if (!is_strongly_connected(g, o))
    throw std::invalid_argument("extend_to_full_strong: input has a directed cut");
  PartialOrientation full = o;
  if (!detail::extend_strong_rec(g, full, 0))
    throw std::logic_error("extend_to_full_strong: no extension found");
  return full;
}

}  // namespace porient
