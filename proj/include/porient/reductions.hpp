#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "multigraph.hpp"
#include "orientation.hpp"

namespace porient {

// The (<, A) calculus: a total order on edge ids plus a reference direction
// per edge. Minimality of cuts, cycles and half-open paths is judged
// against this pair.
struct ReferencePair {
  std::vector<int> order;          // position = rank, value = edge id
  std::vector<EdgeState> reference;  // A: Forward (as stored) or Backward per edge
  std::vector<int> rank;           // derived: rank[edge id]

  static ReferencePair make(std::vector<int> order, std::vector<EdgeState> reference) {
    ReferencePair p;
    p.order = std::move(order);
    p.reference = std::move(reference);
    p.rank.assign(p.order.size(), -1);
    for (int pos = 0; pos < static_cast<int>(p.order.size()); ++pos) {
      int e = p.order[pos];
      if (e < 0 || e >= static_cast<int>(p.order.size()) || p.rank[e] != -1)
        throw std::invalid_argument("reference pair: order is not a permutation");
      p.rank[e] = pos;
    }
    for (EdgeState s : p.reference)
      if (s == EdgeState::Unoriented)
        throw std::invalid_argument("reference pair: reference must orient every edge");
    return p;
  }
};

inline ReferencePair default_pair(const Multigraph& g) {
  std::vector<int> order(g.m());
  for (int e = 0; e < g.m(); ++e) order[e] = e;
  return ReferencePair::make(std::move(order),
                             std::vector<EdgeState>(g.m(), EdgeState::Forward));
}

inline ReferencePair random_pair(const Multigraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> order(g.m());
  for (int e = 0; e < g.m(); ++e) order[e] = e;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<EdgeState> ref(g.m());
  for (int e = 0; e < g.m(); ++e)
    ref[e] = (rng() & 1) ? EdgeState::Forward : EdgeState::Backward;
  return ReferencePair::make(std::move(order), std::move(ref));
}

// BFS spanning tree rooted at q: tree edges get the smallest ranks in
// discovery order, reference-directed away from q; non-tree edges follow in
// edge-id order, reference as stored. For full orientations under this
// pair, cut-minimal is equivalent to every vertex being reachable from q.
inline ReferencePair q_connected_pair(const Multigraph& g, int q) {
  if (q < 0 || q >= g.n) throw std::invalid_argument("q_connected_pair: invalid root");
  if (!is_connected(g)) throw std::invalid_argument("q_connected_pair: disconnected graph");
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (neighbor, edge)
  for (int e = 0; e < g.m(); ++e) {
    if (g.is_loop(e)) continue;
    adj[g.tail(e)].emplace_back(g.head(e), e);
    adj[g.head(e)].emplace_back(g.tail(e), e);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());  // BFS by vertex id
  std::vector<int> order;
  std::vector<EdgeState> ref(g.m(), EdgeState::Forward);
  std::vector<char> seen(g.n, 0), in_tree(g.m(), 0);
  std::vector<int> queue{q};
  seen[q] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    for (auto [w, e] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      in_tree[e] = 1;
      order.push_back(e);
      // away from q: v is the parent, so direction is v -> w
      ref[e] = (g.tail(e) == v) ? EdgeState::Forward : EdgeState::Backward;
      queue.push_back(w);
    }
  }
  for (int e = 0; e < g.m(); ++e)
    if (!in_tree[e]) order.push_back(e);
  return ReferencePair::make(std::move(order), std::move(ref));
}

// --- move witnesses ---

// A directed simple path a1..ak (a1 may be a loop) followed by an
// unoriented edge at the terminal vertex, imagined oriented so as to
// extend the path. imagined is the EdgeState the terminal edge would take.
struct HalfOpenPath {
  std::vector<int> path_edges;  // oriented along the path, in order
  int terminal_edge = -1;       // unoriented in O
  EdgeState imagined = EdgeState::Forward;
};

struct Witness {
  enum class Kind { Cut, Cycle, Path } kind;
  DirectedCutWitness cut;
  DirectedCycleWitness cycle;
  HalfOpenPath path;

  std::vector<int> sorted_edges() const {
    std::vector<int> es;
    switch (kind) {
      case Kind::Cut: es = cut.crossing; break;
      case Kind::Cycle: es = cycle.edges; break;
      case Kind::Path:
        es = path.path_edges;
        es.push_back(path.terminal_edge);
        break;
    }
    std::sort(es.begin(), es.end());
    return es;
  }
};

struct MoveTrace {
  std::vector<Witness> moves;
};

// --- applying moves ---

inline PartialOrientation apply_cut_reversal(const Multigraph& g, const PartialOrientation& o,
                                             const std::vector<int>& side) {
  std::vector<char> in_x(g.n, 0);
  for (int v : side) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("cut reversal: bad vertex");
    in_x[v] = 1;
  }
  bool proper = false, nonempty_cross = false;
  for (int v = 0; v < g.n; ++v)
    if (!in_x[v]) proper = true;
  if (side.empty() || !proper) throw std::invalid_argument("cut reversal: X must be proper and nonempty");
  PartialOrientation r = o;
  for (int e = 0; e < g.m(); ++e) {
    if (g.is_loop(e)) continue;
    if (in_x[g.tail(e)] == in_x[g.head(e)]) continue;
    nonempty_cross = true;
    if (o[e] == EdgeState::Unoriented || !in_x[oriented_tail(g, e, o[e])])
      throw std::invalid_argument("cut reversal: (X, X^c) is not a directed cut");
    r[e] = reversed(o[e]);
  }
  if (!nonempty_cross) throw std::invalid_argument("cut reversal: no crossing edges");
  return r;
}

inline PartialOrientation apply_cycle_reversal(const Multigraph& g, const PartialOrientation& o,
                                               const DirectedCycleWitness& c) {
  if (c.edges.empty()) throw std::invalid_argument("cycle reversal: empty cycle");
  // validate consistency: walk the cycle
  PartialOrientation r = o;
  if (c.edges.size() == 1) {
    int e = c.edges[0];
    check_edge_id(g, e);
    if (!g.is_loop(e) || o[e] == EdgeState::Unoriented)
      throw std::invalid_argument("cycle reversal: length-1 cycle must be an oriented loop");
    r[e] = reversed(o[e]);
    return r;
  }
  for (int e : c.edges) {
    check_edge_id(g, e);
    if (o[e] == EdgeState::Unoriented)
      throw std::invalid_argument("cycle reversal: unoriented edge in cycle");
  }
  // the edge list must trace a closed directed walk in one of the two
  // traversal orders (so the witness survives its own reversal)
  auto closed_walk = [&](const std::vector<int>& es) {
    int start = oriented_tail(g, es[0], o[es[0]]), cur = start;
    for (int e : es) {
      if (oriented_tail(g, e, o[e]) != cur) return false;
      cur = oriented_head(g, e, o[e]);
    }
    return cur == start;
  };
  std::vector<int> rev(c.edges.rbegin(), c.edges.rend());
  if (!closed_walk(c.edges) && !closed_walk(rev))
    throw std::invalid_argument("cycle reversal: edges do not form a directed closed walk");
  for (int e : c.edges) r[e] = reversed(o[e]);
  return r;
}

// Unorient e_in (oriented with head v) and orient e_out toward v.
inline PartialOrientation apply_edge_pivot(const Multigraph& g, const PartialOrientation& o,
                                           int e_out, int e_in, int v) {
  check_edge_id(g, e_out);
  check_edge_id(g, e_in);
  if (o[e_out] != EdgeState::Unoriented)
    throw std::invalid_argument("edge pivot: e must be unoriented");
  if (o[e_in] == EdgeState::Unoriented || oriented_head(g, e_in, o[e_in]) != v)
    throw std::invalid_argument("edge pivot: e' must be oriented with head v");
  if (g.tail(e_out) != v && g.head(e_out) != v)
    throw std::invalid_argument("edge pivot: e must be incident to v");
  PartialOrientation r = o;
  r[e_in] = EdgeState::Unoriented;
  r[e_out] = (g.head(e_out) == v) ? EdgeState::Forward : EdgeState::Backward;
  return r;
}

namespace detail {

inline void validate_half_open_path(const Multigraph& g, const PartialOrientation& o,
                                    const HalfOpenPath& p) {
  if (p.path_edges.empty()) throw std::invalid_argument("half-open path: needs k >= 1");
  check_edge_id(g, p.terminal_edge);
  if (o[p.terminal_edge] != EdgeState::Unoriented)
    throw std::invalid_argument("half-open path: terminal edge must be unoriented");
  int cur = -1;
  std::vector<char> used(g.m(), 0);
  for (std::size_t i = 0; i < p.path_edges.size(); ++i) {
    int e = p.path_edges[i];
    check_edge_id(g, e);
    if (used[e]) throw std::invalid_argument("half-open path: repeated edge");
    used[e] = 1;
    if (o[e] == EdgeState::Unoriented)
      throw std::invalid_argument("half-open path: path edge not oriented");
    if (g.is_loop(e) && i != 0)
      throw std::invalid_argument("half-open path: loop allowed only as first edge");
    if (i > 0 && oriented_tail(g, e, o[e]) != cur)
      throw std::invalid_argument("half-open path: edges not consecutive");
    cur = oriented_head(g, e, o[e]);
  }
  if (used[p.terminal_edge]) throw std::invalid_argument("half-open path: terminal edge on path");
  int te = p.terminal_edge;
  // imagined orientation must leave the terminal vertex of the path
  if (oriented_tail(g, te, p.imagined) != cur)
    throw std::invalid_argument("half-open path: imagined orientation does not extend path");
}

}  // namespace detail

// Jacob's ladder cascade: the pivot sequence that reverses a half-open
// path. Net effect: terminal edge oriented opposite its imagined
// direction, interior edges reversed, first edge unoriented. Preserves the
// indegree sequence.
inline PartialOrientation apply_cascade(const Multigraph& g, const PartialOrientation& o,
                                        const HalfOpenPath& p) {
  detail::validate_half_open_path(g, o, p);
  // net effect of the pivot chain from the terminal end backward: the
  // terminal edge takes the reverse of its imagined direction (for a loop
  // terminal, the two imagined directions give the two loop states),
  // interior edges reverse, the first path edge becomes unoriented
  PartialOrientation r = o;
  r[p.terminal_edge] = reversed(p.imagined);
  r[p.path_edges[0]] = EdgeState::Unoriented;
  for (std::size_t i = 1; i < p.path_edges.size(); ++i)
    r[p.path_edges[i]] = reversed(o[p.path_edges[i]]);
  return r;
}

// --- enumeration of structures ---

// All directed bonds of O: vertex bipartitions with nonempty all-oriented
// crossing set X -> X^c and both sides connected in the underlying graph.
// Desk scale: enumerates vertex subsets.
inline std::vector<DirectedCutWitness> enumerate_directed_bonds(const Multigraph& g,
                                                                const PartialOrientation& o) {
  std::vector<DirectedCutWitness> out;
  if (g.n > 20) throw std::invalid_argument("enumerate_directed_bonds: graph too large");
  std::vector<std::vector<int>> adj(g.n);
  for (int e = 0; e < g.m(); ++e) {
    if (g.is_loop(e)) continue;
    adj[g.tail(e)].push_back(g.head(e));
    adj[g.head(e)].push_back(g.tail(e));
  }
  auto side_connected = [&](std::uint32_t mask) {
    int first = -1;
    for (int v = 0; v < g.n; ++v)
      if (mask >> v & 1) {
        first = v;
        break;
      }
    if (first < 0) return false;
    std::uint32_t seen = 1u << first;
    std::vector<int> stack{first};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if ((mask >> w & 1) && !(seen >> w & 1)) {
          seen |= 1u << w;
          stack.push_back(w);
        }
    }
    return seen == mask;
  };
  std::uint32_t full = (g.n == 32) ? ~0u : ((1u << g.n) - 1);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    bool ok = true, any = false;
    for (int e = 0; e < g.m() && ok; ++e) {
      if (g.is_loop(e)) continue;
      bool ta = mask >> g.tail(e) & 1, ha = mask >> g.head(e) & 1;
      if (ta == ha) continue;
      any = true;
      if (o[e] == EdgeState::Unoriented || !(mask >> oriented_tail(g, e, o[e]) & 1)) ok = false;
    }
    if (!ok || !any) continue;
    if (!side_connected(mask) || !side_connected(full & ~mask)) continue;
    DirectedCutWitness w;
    for (int v = 0; v < g.n; ++v)
      if (mask >> v & 1) w.side.push_back(v);
    for (int e = 0; e < g.m(); ++e) {
      if (g.is_loop(e)) continue;
      if ((mask >> g.tail(e) & 1) != (mask >> g.head(e) & 1)) w.crossing.push_back(e);
    }
    out.push_back(std::move(w));
  }
  return out;
}

// All directed cuts (not just bonds), same subset scan.
inline std::vector<DirectedCutWitness> enumerate_directed_cuts(const Multigraph& g,
                                                               const PartialOrientation& o) {
  std::vector<DirectedCutWitness> out;
  if (g.n > 20) throw std::invalid_argument("enumerate_directed_cuts: graph too large");
  std::uint32_t full = (1u << g.n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    bool ok = true, any = false;
    DirectedCutWitness w;
    for (int e = 0; e < g.m() && ok; ++e) {
      if (g.is_loop(e)) continue;
      bool ta = mask >> g.tail(e) & 1, ha = mask >> g.head(e) & 1;
      if (ta == ha) continue;
      any = true;
      if (o[e] == EdgeState::Unoriented || !(mask >> oriented_tail(g, e, o[e]) & 1))
        ok = false;
      else
        w.crossing.push_back(e);
    }
    if (!ok || !any) continue;
    for (int v = 0; v < g.n; ++v)
      if (mask >> v & 1) w.side.push_back(v);
    out.push_back(std::move(w));
  }
  return out;
}

// All simple directed cycles of O, oriented loops included as length-1
// cycles. Each cycle appears once, edges in traversal order.
inline std::vector<DirectedCycleWitness> enumerate_directed_cycles(const Multigraph& g,
                                                                   const PartialOrientation& o) {
  std::vector<DirectedCycleWitness> out;
  for (int e = 0; e < g.m(); ++e)
    if (g.is_loop(e) && o[e] != EdgeState::Unoriented) out.push_back({{e}});
  auto adj = detail::oriented_adjacency(g, o);
  // cycles rooted at their minimum vertex
  std::vector<int> path_edges;
  std::vector<char> on_path(g.n, 0);
  std::function<void(int, int)> dfs = [&](int start, int cur) {
    for (const auto& a : adj[cur]) {
      if (a.to == start && !path_edges.empty()) {
        // closing arc; require >= 2 edges total (loops handled separately)
        DirectedCycleWitness w;
        w.edges = path_edges;
        w.edges.push_back(a.edge);
        out.push_back(std::move(w));
      } else if (a.to > start && !on_path[a.to]) {
        on_path[a.to] = 1;
        path_edges.push_back(a.edge);
        dfs(start, a.to);
        path_edges.pop_back();
        on_path[a.to] = 0;
      }
    }
  };
  for (int s = 0; s < g.n; ++s) {
    on_path[s] = 1;
    dfs(s, s);
    on_path[s] = 0;
  }
  return out;
}

// All half-open paths of O. The first path edge may be an oriented loop;
// the terminal edge may be an unoriented loop, in which case both imagined
// directions are produced.
inline std::vector<HalfOpenPath> enumerate_half_open_paths(const Multigraph& g,
                                                           const PartialOrientation& o) {
  std::vector<HalfOpenPath> out;
  auto adj = detail::oriented_adjacency(g, o);
  std::vector<std::vector<int>> incident(g.n);  // unoriented edges per vertex
  for (int e = 0; e < g.m(); ++e) {
    if (o[e] != EdgeState::Unoriented) continue;
    incident[g.tail(e)].push_back(e);
    if (!g.is_loop(e)) incident[g.head(e)].push_back(e);
  }
  std::vector<int> path_edges;
  std::vector<char> on_path(g.n, 0), used(g.m(), 0);
  auto emit = [&](int vk) {
    for (int e : incident[vk]) {
      if (used[e]) continue;
      if (g.is_loop(e)) {
        out.push_back({path_edges, e, EdgeState::Forward});
        out.push_back({path_edges, e, EdgeState::Backward});
      } else {
        out.push_back(
            {path_edges, e, g.tail(e) == vk ? EdgeState::Forward : EdgeState::Backward});
      }
    }
  };
  std::function<void(int)> dfs = [&](int cur) {
    if (!path_edges.empty()) emit(cur);
    for (const auto& a : adj[cur]) {
      if (used[a.edge] || on_path[a.to]) continue;
      on_path[a.to] = 1;
      used[a.edge] = 1;
      path_edges.push_back(a.edge);
      dfs(a.to);
      path_edges.pop_back();
      used[a.edge] = 0;
      on_path[a.to] = 0;
    }
  };
  for (int v0 = 0; v0 < g.n; ++v0) {
    on_path[v0] = 1;
    dfs(v0);
    on_path[v0] = 0;
  }
  // paths starting with an oriented loop
  for (int e = 0; e < g.m(); ++e) {
    if (!g.is_loop(e) || o[e] == EdgeState::Unoriented) continue;
    int v = g.tail(e);
    on_path[v] = 1;
    used[e] = 1;
    path_edges.push_back(e);
    dfs(v);
    path_edges.pop_back();
    used[e] = 0;
    on_path[v] = 0;
  }
  return out;
}

// --- minimality ---

enum class MinimalityKind : unsigned { Cut = 1, Cycle = 2, Path = 4 };

inline unsigned operator|(MinimalityKind a, MinimalityKind b) {
  return static_cast<unsigned>(a) | static_cast<unsigned>(b);
}

namespace detail {

inline bool cut_nonminimal(const PartialOrientation& o, const ReferencePair& pair,
                           const DirectedCutWitness& w) {
  int me = *std::min_element(w.crossing.begin(), w.crossing.end(),
                             [&](int a, int b) { return pair.rank[a] < pair.rank[b]; });
  return o[me] != pair.reference[me];
}

inline bool cycle_nonminimal(const PartialOrientation& o, const ReferencePair& pair,
                             const DirectedCycleWitness& w) {
  int me = *std::min_element(w.edges.begin(), w.edges.end(),
                             [&](int a, int b) { return pair.rank[a] < pair.rank[b]; });
  return o[me] != pair.reference[me];
}

inline bool path_nonminimal(const PartialOrientation& o, const ReferencePair& pair,
                            const HalfOpenPath& p) {
  int me = p.terminal_edge;
  for (int e : p.path_edges)
    if (pair.rank[e] < pair.rank[me]) me = e;
  EdgeState s = (me == p.terminal_edge) ? p.imagined : o[me];
  return s != pair.reference[me];
}

}  // namespace detail

inline std::vector<Witness> find_all_nonminimal(const Multigraph& g, const PartialOrientation& o,
                                                const ReferencePair& pair, unsigned kinds) {
  std::vector<Witness> out;
  if (kinds & static_cast<unsigned>(MinimalityKind::Cut))
    for (auto& w : enumerate_directed_bonds(g, o))
      if (detail::cut_nonminimal(o, pair, w))
        out.push_back({Witness::Kind::Cut, std::move(w), {}, {}});
  if (kinds & static_cast<unsigned>(MinimalityKind::Cycle))
    for (auto& w : enumerate_directed_cycles(g, o))
      if (detail::cycle_nonminimal(o, pair, w))
        out.push_back({Witness::Kind::Cycle, {}, std::move(w), {}});
  if (kinds & static_cast<unsigned>(MinimalityKind::Path))
    for (auto& p : enumerate_half_open_paths(g, o))
      if (detail::path_nonminimal(o, pair, p))
        out.push_back({Witness::Kind::Path, {}, {}, std::move(p)});
  return out;
}

// Deterministic selection: lexicographically smallest sorted edge-id set,
// tie-broken by kind and witness layout.
inline std::optional<Witness> find_nonminimal(const Multigraph& g, const PartialOrientation& o,
                                              const ReferencePair& pair, unsigned kinds) {
  auto all = find_all_nonminimal(g, o, pair, kinds);
  if (all.empty()) return std::nullopt;
  auto key = [](const Witness& w) {
    std::vector<int> k = w.sorted_edges();
    k.push_back(static_cast<int>(w.kind));
    switch (w.kind) {
      case Witness::Kind::Cut:
        k.insert(k.end(), w.cut.side.begin(), w.cut.side.end());
        break;
      case Witness::Kind::Cycle:
        k.insert(k.end(), w.cycle.edges.begin(), w.cycle.edges.end());
        break;
      case Witness::Kind::Path:
        k.insert(k.end(), w.path.path_edges.begin(), w.path.path_edges.end());
        k.push_back(w.path.terminal_edge);
        k.push_back(static_cast<int>(w.path.imagined));
        break;
    }
    return k;
  };
  return *std::min_element(all.begin(), all.end(),
                           [&](const Witness& a, const Witness& b) { return key(a) < key(b); });
}

inline bool is_cut_minimal(const Multigraph& g, const PartialOrientation& o,
                           const ReferencePair& pair) {
  for (const auto& w : enumerate_directed_bonds(g, o))
    if (detail::cut_nonminimal(o, pair, w)) return false;
  return true;
}

inline bool is_cycle_minimal(const Multigraph& g, const PartialOrientation& o,
                             const ReferencePair& pair) {
  for (const auto& w : enumerate_directed_cycles(g, o))
    if (detail::cycle_nonminimal(o, pair, w)) return false;
  return true;
}

inline bool is_cycle_path_minimal(const Multigraph& g, const PartialOrientation& o,
                                  const ReferencePair& pair) {
  if (!is_cycle_minimal(g, o, pair)) return false;
  for (const auto& p : enumerate_half_open_paths(g, o))
    if (detail::path_nonminimal(o, pair, p)) return false;
  return true;
}

inline unsigned kinds_for_class(OrientationClass cls) {
  switch (cls) {
    case OrientationClass::CutMinimal: return static_cast<unsigned>(MinimalityKind::Cut);
    case OrientationClass::CycleMinimal: return static_cast<unsigned>(MinimalityKind::Cycle);
    case OrientationClass::CycleCutMinimal: return MinimalityKind::Cut | MinimalityKind::Cycle;
    case OrientationClass::CyclePathMinimal: return MinimalityKind::Cycle | MinimalityKind::Path;
    default: throw std::invalid_argument("no minimality kinds for this class");
  }
}

inline PartialOrientation apply_witness(const Multigraph& g, const PartialOrientation& o,
                                        const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::Cut: return apply_cut_reversal(g, o, w.cut.side);
    case Witness::Kind::Cycle: return apply_cycle_reversal(g, o, w.cycle);
    case Witness::Kind::Path: return apply_cascade(g, o, w.path);
  }
  throw std::logic_error("apply_witness: bad kind");
}

// Greedy canonicalization: repeatedly discharge the selected nonminimal
// witness until the orientation is minimal for the class. The result is
// the unique minimal element of O's orbit under the class's moves,
// independent of witness-selection order.
using WitnessSelector =
    std::function<const Witness&(const std::vector<Witness>&)>;

inline std::pair<PartialOrientation, MoveTrace> canonical_rep(
    const Multigraph& g, const PartialOrientation& o, const ReferencePair& pair,
    OrientationClass cls, const WitnessSelector& select = nullptr) {
  unsigned kinds = kinds_for_class(cls);
  PartialOrientation cur = o;
  MoveTrace trace;
  for (;;) {
    if (select) {
      auto all = find_all_nonminimal(g, cur, pair, kinds);
      if (all.empty()) break;
      const Witness& w = select(all);
      cur = apply_witness(g, cur, w);
      trace.moves.push_back(w);
    } else {
      auto w = find_nonminimal(g, cur, pair, kinds);
      if (!w) break;
      cur = apply_witness(g, cur, *w);
      trace.moves.push_back(std::move(*w));
    }
    if (trace.moves.size() > 1000000)
      throw std::logic_error("canonical_rep: greedy did not terminate");
  }
  return {std::move(cur), std::move(trace)};
}

// --- difference decomposition ---

enum class DecomposeMode { CutOnly, CyclePivot };

namespace detail {

// Solve Laplacian system Q f = d over the rationals with f[n-1] = 0, then
// shift so min(f) = 0. Throws if d is not in the image or f not integral.
std::vector<long long> solve_laplacian(const Multigraph& g, const std::vector<int>& d);

}  // namespace detail

// Edge-disjoint witnesses whose sequential application maps o1 to o2.
// CutOnly mode requires o1, o2 related by cut reversals; CyclePivot mode
// requires equal indegree sequences.
std::vector<Witness> decompose_difference(const Multigraph& g, const PartialOrientation& o1,
                                          const PartialOrientation& o2, DecomposeMode mode);

// --- monomial encoding (squarefree exponent vector of length 2m) ---

// Slot i (x) is 1 when the rank-i edge is oriented as in A, slot m+i (y)
// when oriented oppositely; unoriented edges contribute nothing.
inline std::vector<int> monomial_encoding(const Multigraph& g, const PartialOrientation& o,
                                          const ReferencePair& pair) {
  std::vector<int> expo(2 * g.m(), 0);
  for (int e = 0; e < g.m(); ++e) {
    if (o[e] == EdgeState::Unoriented) continue;
    int i = pair.rank[e];
    if (o[e] == pair.reference[e])
      expo[i] = 1;
    else
      expo[g.m() + i] = 1;
  }
  return expo;
}

// --- inline implementations for decompose ---

namespace detail {

inline std::vector<long long> solve_laplacian(const Multigraph& g, const std::vector<int>& d) {
  int n = g.n;
  long long sum = 0;
  for (int v : d) sum += v;
  if (sum != 0) throw std::invalid_argument("decompose: indegree totals differ");
  if (n == 1) return {0};
  // reduced system on vertices 0..n-2 (f[n-1] = 0), exact rational
  // Gauss-Jordan elimination
  int k = n - 1;
  std::vector<std::vector<long long>> lap(k, std::vector<long long>(k, 0));
  for (int e = 0; e < g.m(); ++e) {
    if (g.is_loop(e)) continue;
    int u = g.tail(e), v = g.head(e);
    if (u < k) lap[u][u] += 1;
    if (v < k) lap[v][v] += 1;
    if (u < k && v < k) {
      lap[u][v] -= 1;
      lap[v][u] -= 1;
    }
  }
  using Frac = std::pair<long long, long long>;  // num/den, den > 0
  auto norm = [](long long a, long long b) {
    if (b < 0) {
      a = -a;
      b = -b;
    }
    long long g2 = std::gcd(a < 0 ? -a : a, b);
    if (g2 > 1) {
      a /= g2;
      b /= g2;
    }
    return Frac{a, b};
  };
  std::vector<std::vector<Frac>> a(k, std::vector<Frac>(k + 1, {0, 1}));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) a[i][j] = {lap[i][j], 1};
    a[i][k] = {d[i], 1};
  }
  auto sub_mul = [&](Frac x, Frac factor, Frac y) {  // x - factor*y
    long long num = x.first * factor.second * y.second -
                    factor.first * y.first * x.second;
    long long den = x.second * factor.second * y.second;
    return norm(num, den);
  };
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    for (int r = col; r < k; ++r)
      if (a[r][col].first != 0) {
        piv = r;
        break;
      }
    if (piv == -1) throw std::invalid_argument("decompose: singular system (disconnected?)");
    std::swap(a[col], a[piv]);
    for (int r = 0; r < k; ++r) {
      if (r == col || a[r][col].first == 0) continue;
      Frac factor = norm(a[r][col].first * a[col][col].second,
                         a[r][col].second * a[col][col].first);
      for (int c = col; c <= k; ++c) a[r][c] = sub_mul(a[r][c], factor, a[col][c]);
    }
  }
  std::vector<long long> f(n, 0);
  for (int i = 0; i < k; ++i) {
    Frac val = norm(a[i][k].first * a[i][i].second, a[i][k].second * a[i][i].first);
    if (val.second != 1)
      throw std::invalid_argument("decompose: not related by cut reversals");
    f[i] = val.first;
  }
  long long mn = *std::min_element(f.begin(), f.end());
  for (auto& x : f) x -= mn;
  return f;
}

}  // namespace detail

inline std::vector<Witness> decompose_difference(const Multigraph& g,
                                                 const PartialOrientation& o1,
                                                 const PartialOrientation& o2,
                                                 DecomposeMode mode) {
  std::vector<Witness> out;
  if (o1 == o2) return out;
  if (mode == DecomposeMode::CutOnly) {
    for (int e = 0; e < g.m(); ++e)
      if ((o1[e] == EdgeState::Unoriented) != (o2[e] == EdgeState::Unoriented))
        throw std::invalid_argument("decompose: cut reversals preserve the unoriented set");
    auto d1 = indegree_sequence(g, o1), d2 = indegree_sequence(g, o2);
    std::vector<int> d(g.n);
    for (int v = 0; v < g.n; ++v) d[v] = d1[v] - d2[v];
    auto f = detail::solve_laplacian(g, d);
    long long top = *std::max_element(f.begin(), f.end());
    // level sets of max(f) - f, reversed in sequence; distinct levels
    // cross disjoint edge sets
    PartialOrientation cur = o1;
    for (long long lvl = 1; lvl <= top; ++lvl) {
      std::vector<int> side;
      for (int v = 0; v < g.n; ++v)
        if (top - f[v] >= lvl) side.push_back(v);
      Witness w;
      w.kind = Witness::Kind::Cut;
      w.cut.side = side;
      std::vector<char> in_x(g.n, 0);
      for (int v : side) in_x[v] = 1;
      for (int e = 0; e < g.m(); ++e) {
        if (g.is_loop(e)) continue;
        if (in_x[g.tail(e)] != in_x[g.head(e)]) w.cut.crossing.push_back(e);
      }
      cur = apply_cut_reversal(g, cur, side);  // validates directedness
      out.push_back(std::move(w));
    }
    if (cur != o2) throw std::invalid_argument("decompose: orientations not related by cut reversals");
    return out;
  }

  // CyclePivot: walk construction from the indegree lemma
  if (indegree_sequence(g, o1) != indegree_sequence(g, o2))
    throw std::invalid_argument("decompose: indegree sequences differ");
  PartialOrientation cur = o1;
  std::vector<char> edge_used(g.m(), 0);  // edge-disjointness across witnesses
  auto differs = [&](int e) { return !edge_used[e] && cur[e] != o2[e]; };
  for (;;) {
    // prefer a cascade target: edge unoriented in cur, oriented in o2
    int start_edge = -1;
    for (int e = 0; e < g.m(); ++e)
      if (differs(e) && cur[e] == EdgeState::Unoriented) {
        start_edge = e;
        break;
      }
    int any = -1;
    for (int e = 0; e < g.m(); ++e)
      if (differs(e)) {
        any = e;
        break;
      }
    if (any == -1) break;
    // walk backwards from v along edges oriented in cur and differing in o2
    int v;
    if (start_edge != -1)
      v = oriented_head(g, start_edge, o2[start_edge]);
    else
      v = oriented_head(g, any, cur[any]);
    std::vector<int> walk;           // edges walked, most recent first step order
    std::vector<int> walk_vertices;  // v, then tails as we walk back
    std::vector<char> on_walk_edge(g.m(), 0);
    walk_vertices.push_back(v);
    bool closed = false, cascade = false;
    int cascade_first = -1;
    while (true) {
      int u = walk_vertices.back();
      // candidate: edge oriented into u in cur, differing, not used
      int pick = -1;  // deterministic: smallest edge id
      for (int e = 0; e < g.m(); ++e) {
        if (!differs(e) || on_walk_edge[e]) continue;
        if (cur[e] == EdgeState::Unoriented) continue;
        if (oriented_head(g, e, cur[e]) != u) continue;
        pick = e;
        break;
      }
      if (pick == -1)
        throw std::logic_error("decompose: walk stuck (inconsistent difference)");
      walk.push_back(pick);
      on_walk_edge[pick] = 1;
      if (o2[pick] == EdgeState::Unoriented) {
        // this edge becomes a1 of a cascade
        cascade = true;
        cascade_first = pick;
        break;
      }
      int t = oriented_tail(g, pick, cur[pick]);
      auto it = std::find(walk_vertices.begin(), walk_vertices.end(), t);
      if (it != walk_vertices.end()) {
        // closed a directed cycle: edges walked since t
        std::size_t idx = static_cast<std::size_t>(it - walk_vertices.begin());
        Witness w;
        w.kind = Witness::Kind::Cycle;
        // walk[] goes backwards; cycle edges from position idx..end reversed
        for (std::size_t i = walk.size(); i-- > idx;) w.cycle.edges.push_back(walk[i]);
        cur = apply_cycle_reversal(g, cur, w.cycle);
        for (int e : w.cycle.edges) edge_used[e] = 1;
        out.push_back(std::move(w));
        closed = true;
        break;
      }
      walk_vertices.push_back(t);
    }
    if (closed) continue;
    if (cascade) {
      if (start_edge == -1 || walk.empty())
        throw std::logic_error("decompose: cascade without terminal edge");
      Witness w;
      w.kind = Witness::Kind::Path;
      // path edges in forward order: walk is backwards from v
      for (std::size_t i = walk.size(); i-- > 0;) w.path.path_edges.push_back(walk[i]);
      w.path.terminal_edge = start_edge;
      // imagined orientation: out of v, i.e. the reverse of o2's direction
      w.path.imagined = reversed(o2[start_edge]);
      cur = apply_cascade(g, cur, w.path);
      for (int e : w.path.path_edges) edge_used[e] = 1;
      edge_used[start_edge] = 1;
      out.push_back(std::move(w));
      continue;
    }
  }
  if (cur != o2) throw std::logic_error("decompose: replay mismatch");
  return out;
}

}  // namespace porient
