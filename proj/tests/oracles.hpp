#pragma once

// Independent oracles for the test suite. These deliberately avoid the
// library's deletion-contraction / condensation code paths.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include <porient/multigraph.hpp>
#include <porient/orientation.hpp>
#include <porient/rational.hpp>
#include <porient/tutte.hpp>

namespace porient::testing {

// number of connected components of the spanning subgraph on edge set S
inline int component_count(const Multigraph& g, const std::vector<int>& edge_subset) {
  std::vector<int> parent(g.n);
  for (int v = 0; v < g.n; ++v) parent[v] = v;
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  for (int e : edge_subset) {
    int a = find(g.tail(e)), b = find(g.head(e));
    if (a != b) parent[a] = b;
  }
  std::set<int> roots;
  for (int v = 0; v < g.n; ++v) roots.insert(find(v));
  return static_cast<int>(roots.size());
}

// Rank-nullity subgraph expansion:
//   T(x,y) = sum over S subset of E of (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S))
// with r(S) = n - c(S). Expands the shifted powers into monomials.
inline TuttePolynomial tutte_rank_nullity(const Multigraph& g) {
  // binomial expansion of (z-1)^k as map degree -> coefficient
  auto shifted_power = [](int k) {
    std::vector<BigInt> coeff(k + 1, 0);  // coeff[d] of z^d in (z-1)^k
    coeff[0] = 1;
    std::vector<BigInt> cur{1};
    for (int i = 0; i < k; ++i) {
      std::vector<BigInt> next(cur.size() + 1, 0);
      for (std::size_t d = 0; d < cur.size(); ++d) {
        next[d + 1] += cur[d];
        next[d] -= cur[d];
      }
      cur = std::move(next);
    }
    return cur;
  };
  int m = g.m();
  int rank_e = g.n - component_count(g, [&] {
                 std::vector<int> all(m);
                 for (int e = 0; e < m; ++e) all[e] = e;
                 return all;
               }());
  std::map<std::pair<int, int>, BigInt> acc;
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    std::vector<int> subset;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) subset.push_back(e);
    int r = g.n - component_count(g, subset);
    int xk = rank_e - r;
    int yk = static_cast<int>(subset.size()) - r;
    auto xs = shifted_power(xk), ys = shifted_power(yk);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i] == 0) continue;
      for (std::size_t j = 0; j < ys.size(); ++j) {
        if (ys[j] == 0) continue;
        acc[{static_cast<int>(i), static_cast<int>(j)}] += xs[i] * ys[j];
      }
    }
  }
  TuttePolynomial t;
  for (const auto& [k, c] : acc)
    if (c != 0) t.coeffs[k] = c;
  return t;
}

// brute-force spanning tree count: subsets of size n-1 that connect
inline BigInt spanning_tree_count(const Multigraph& g) {
  BigInt count = 0;
  int m = g.m();
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    std::vector<int> subset;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) subset.push_back(e);
    if (static_cast<int>(subset.size()) != g.n - 1) continue;
    if (component_count(g, subset) == 1) count += 1;
  }
  return count;
}

// all-subsets directed cut oracle: some nonempty proper X with nonempty
// crossing set entirely oriented X -> X^c
inline bool has_directed_cut_subsets(const Multigraph& g, const PartialOrientation& o) {
  for (std::uint32_t mask = 1; mask + 1 < (1u << g.n); ++mask) {
    bool any = false, ok = true;
    for (int e = 0; e < g.m() && ok; ++e) {
      if (g.is_loop(e)) continue;
      bool ta = mask >> g.tail(e) & 1, ha = mask >> g.head(e) & 1;
      if (ta == ha) continue;
      any = true;
      if (o[e] == EdgeState::Unoriented) {
        ok = false;
      } else {
        int tail = o[e] == EdgeState::Forward ? g.tail(e) : g.head(e);
        if (!(mask >> tail & 1)) ok = false;
      }
    }
    if (any && ok) return true;
  }
  return false;
}

// transitive-closure cycle oracle: directed cycle iff an oriented loop
// exists or some vertex reaches itself through at least one arc
inline bool has_directed_cycle_closure(const Multigraph& g, const PartialOrientation& o) {
  std::vector<std::vector<char>> reach(g.n, std::vector<char>(g.n, 0));
  for (int e = 0; e < g.m(); ++e) {
    if (o[e] == EdgeState::Unoriented) continue;
    if (g.is_loop(e)) return true;
    int t = o[e] == EdgeState::Forward ? g.tail(e) : g.head(e);
    int h = o[e] == EdgeState::Forward ? g.head(e) : g.tail(e);
    reach[t][h] = 1;
  }
  for (int k = 0; k < g.n; ++k)
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
  for (int v = 0; v < g.n; ++v)
    if (reach[v][v]) return true;
  return false;
}

// brute count of acyclic full orientations (over 2^m states)
inline BigInt full_acyclic_count(const Multigraph& g) {
  BigInt count = 0;
  for (std::uint64_t mask = 0; mask < (1ull << g.m()); ++mask) {
    PartialOrientation o(g.m());
    for (int e = 0; e < g.m(); ++e)
      o[e] = (mask >> e & 1) ? EdgeState::Backward : EdgeState::Forward;
    if (!has_directed_cycle_closure(g, o)) count += 1;
  }
  return count;
}

}  // namespace porient::testing
