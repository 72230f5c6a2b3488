#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "multigraph.hpp"
#include "orientation.hpp"
#include "rational.hpp"

namespace porient {

// Two-variable polynomial with arbitrary-precision coefficients, keyed by
// (x-degree, y-degree). Coefficients of the Tutte polynomial are strictly
// positive; T(1,1) is the spanning tree count.
struct TuttePolynomial {
  std::map<std::pair<int, int>, BigInt> coeffs;

  bool operator==(const TuttePolynomial&) const = default;

  TuttePolynomial& operator+=(const TuttePolynomial& other) {
    for (const auto& [k, c] : other.coeffs) {
      auto& dst = coeffs[k];
      dst += c;
      if (dst == 0) coeffs.erase(k);
    }
    return *this;
  }

  // multiply by x^dx * y^dy
  TuttePolynomial shifted(int dx, int dy) const {
    TuttePolynomial r;
    for (const auto& [k, c] : coeffs) r.coeffs[{k.first + dx, k.second + dy}] = c;
    return r;
  }
};

inline BigRational evaluate(const TuttePolynomial& t, const BigRational& x,
                            const BigRational& y) {
  BigRational sum = 0;
  for (const auto& [k, c] : t.coeffs)
    sum += BigRational(c) * pow_rat(x, k.first) * pow_rat(y, k.second);
  return sum;
}

namespace detail {

// Canonical cache key for a minor: degree-class-refined minimal labeling,
// falling back to the labeled edge list when the refinement leaves too many
// candidate permutations. Correctness does not depend on which branch runs;
// the canonical branch just merges isomorphic minors in the memo.
inline std::string minor_key(const Multigraph& g) {
  const std::size_t kPermutationCap = 50000;
  std::vector<int> degree(g.n, 0);
  for (int e = 0; e < g.m(); ++e) {
    degree[g.tail(e)] += 1;
    degree[g.head(e)] += 1;  // loops count twice
  }
  // group vertices by degree
  std::vector<int> verts(g.n);
  std::iota(verts.begin(), verts.end(), 0);
  std::stable_sort(verts.begin(), verts.end(),
                   [&](int a, int b) { return degree[a] < degree[b]; });
  std::size_t perms = 1;
  bool overflow = false;
  for (int i = 0; i < g.n;) {
    int j = i;
    while (j < g.n && degree[verts[j]] == degree[verts[i]]) ++j;
    for (int f = 2; f <= j - i; ++f) {
      perms *= static_cast<std::size_t>(f);
      if (perms > kPermutationCap) {
        overflow = true;
        break;
      }
    }
    if (overflow) break;
    i = j;
  }

  auto edge_key = [&](const std::vector<int>& label) {
    std::vector<std::pair<int, int>> es;
    es.reserve(g.m());
    for (const auto& [t, h] : g.edges) {
      int a = label[t], b = label[h];
      es.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(es.begin(), es.end());
    std::string s = std::to_string(g.n) + ";";
    for (const auto& [a, b] : es) s += std::to_string(a) + "," + std::to_string(b) + ";";
    return s;
  };

  if (overflow || g.n > 10) {
    std::vector<int> identity(g.n);
    std::iota(identity.begin(), identity.end(), 0);
    return "L" + edge_key(identity);
  }

  // iterate permutations within degree classes, take the minimal edge key
  std::vector<int> perm = verts;  // candidate: position in perm -> old vertex
  std::string best;
  std::vector<std::pair<int, int>> classes;
  for (int i = 0; i < g.n;) {
    int j = i;
    while (j < g.n && degree[verts[j]] == degree[verts[i]]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::vector<int> label(g.n);
  std::function<void(std::size_t)> rec = [&](std::size_t ci) {
    if (ci == classes.size()) {
      for (int pos = 0; pos < g.n; ++pos) label[perm[pos]] = pos;
      std::string k = edge_key(label);
      if (best.empty() || k < best) best = std::move(k);
      return;
    }
    auto [lo, hi] = classes[ci];
    std::sort(perm.begin() + lo, perm.begin() + hi);
    do {
      rec(ci + 1);
    } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
  };
  rec(0);
  return "C" + best;
}

struct TutteCache {
  std::mutex mu;
  std::map<std::string, TuttePolynomial> memo;
};

inline TuttePolynomial tutte_rec(const Multigraph& g, TutteCache& cache) {
  if (g.m() == 0) {
    TuttePolynomial one;
    one.coeffs[{0, 0}] = 1;
    return one;
  }
  std::string key = minor_key(g);
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.memo.find(key);
    if (it != cache.memo.end()) return it->second;
  }
  // pivot: highest-id ordinary edge; if none, the graph is bridges + loops
  int pivot = -1;
  int bridges = 0, loops = 0;
  for (int e = g.m() - 1; e >= 0; --e) {
    switch (classify_edge(g, e)) {
      case EdgeClass::Ordinary:
        if (pivot == -1) pivot = e;
        break;
      case EdgeClass::Bridge: ++bridges; break;
      case EdgeClass::Loop: ++loops; break;
    }
  }
  TuttePolynomial result;
  if (pivot == -1) {
    result.coeffs[{bridges, loops}] = 1;
  } else {
    result = tutte_rec(delete_edge(g, pivot).graph, cache);
    result += tutte_rec(contract_edge(g, pivot).graph, cache);
  }
  std::lock_guard<std::mutex> lock(cache.mu);
  cache.memo.emplace(key, result);
  return result;
}

}  // namespace detail

// Exact Tutte polynomial by deletion-contraction: T(edgeless) = 1,
// bridge e gives x*T(G/e), loop e gives y*T(G\e), ordinary e gives
// T(G\e) + T(G/e).
inline TuttePolynomial tutte_polynomial(const Multigraph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("tutte_polynomial: graph must be connected");
  detail::TutteCache cache;
  return detail::tutte_rec(g, cache);
}

// Exact (k,l)-chromatic counts for the classes with closed formulas.
// The rational arithmetic must cancel to an integer; integrality is
// asserted.
inline BigInt chromatic_count(const Multigraph& g, OrientationClass cls, unsigned k,
                              unsigned l) {
  if (k == 0) throw std::invalid_argument("chromatic_count: k must be positive");
  if (!is_connected(g))
    throw std::invalid_argument("chromatic_count: graph must be connected");
  TuttePolynomial t = tutte_polynomial(g);
  unsigned n1 = static_cast<unsigned>(g.n - 1);
  unsigned gg = static_cast<unsigned>(genus(g));
  BigRational K = k, L = l;
  BigRational hot = (2 * K + L) / K;      // (2k+l)/k
  BigRational cold = L / (K + L);         // l/(k+l)
  BigRational value;
  switch (cls) {
    case OrientationClass::Acyclic:
      value = pow_rat(K, n1) * pow_rat(K + L, gg) * evaluate(t, hot, cold);
      break;
    case OrientationClass::StronglyConnected:
      value = pow_rat(K + L, n1) * pow_rat(K, gg) * evaluate(t, cold, hot);
      break;
    case OrientationClass::CycleMinimal:
      value = pow_rat(K, n1) * pow_rat(K + L, gg) * evaluate(t, hot, BigRational(1));
      break;
    case OrientationClass::CutMinimal:
      value = pow_rat(K + L, n1) * pow_rat(K, gg) * evaluate(t, BigRational(1), hot);
      break;
    default:
      throw std::invalid_argument("chromatic_count: no formula for this class");
  }
  return to_integer(value);
}

// R(p) = (1-p)^(n-1) * p^g * T(1, 1/p), exact.
inline BigRational reliability_exact(const Multigraph& g, const BigRational& p) {
  if (p <= 0 || p >= 1) throw std::invalid_argument("reliability_exact: need 0 < p < 1");
  if (!is_connected(g))
    throw std::invalid_argument("reliability_exact: graph must be connected");
  TuttePolynomial t = tutte_polynomial(g);
  unsigned n1 = static_cast<unsigned>(g.n - 1);
  unsigned gg = static_cast<unsigned>(genus(g));
  return pow_rat(1 - p, n1) * pow_rat(p, gg) * evaluate(t, BigRational(1), 1 / p);
}

}  // namespace porient
