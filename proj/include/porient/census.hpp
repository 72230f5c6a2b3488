#pragma once

#include <chrono>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "multigraph.hpp"
#include "orientation.hpp"
#include "rational.hpp"
#include "reductions.hpp"
#include "tutte.hpp"

namespace porient {

// Brute-force ground truth over the full 3^m state space. The guard keeps
// the oracle honest about its budget.
constexpr int kEnumerationGuard = 14;

inline void check_guard(const Multigraph& g) {
  if (g.m() > kEnumerationGuard)
    throw std::invalid_argument("census: graph exceeds the enumeration guard (m <= 14)");
}

struct MoveSet {
  bool cut_reversal = false;
  bool cycle_reversal = false;
  bool edge_pivot = false;
};

inline bool in_class(const Multigraph& g, const PartialOrientation& o, OrientationClass cls,
                     const ReferencePair& pair) {
  switch (cls) {
    case OrientationClass::All: return true;
    case OrientationClass::Acyclic: return is_acyclic(g, o);
    case OrientationClass::StronglyConnected: return is_strongly_connected(g, o);
    case OrientationClass::CutMinimal: return is_cut_minimal(g, o, pair);
    case OrientationClass::CycleMinimal: return is_cycle_minimal(g, o, pair);
    case OrientationClass::CycleCutMinimal:
      return is_cut_minimal(g, o, pair) && is_cycle_minimal(g, o, pair);
    case OrientationClass::CyclePathMinimal: return is_cycle_path_minimal(g, o, pair);
  }
  throw std::logic_error("in_class: bad class");
}

// Weighted exhaustive count: sum over class members of
// k^(#oriented) * l^(#unoriented). (k,l) = (1,1) is the plain count.
inline BigInt brute_count(const Multigraph& g, OrientationClass cls, const ReferencePair& pair,
                          unsigned k, unsigned l) {
  check_guard(g);
  BigInt total = 0;
  std::vector<BigInt> kpow(g.m() + 1), lpow(g.m() + 1);
  for (int i = 0; i <= g.m(); ++i) {
    kpow[i] = pow_int(k, i);
    lpow[i] = pow_int(l, i);
  }
  enumerate_partial_orientations(g, [&](const PartialOrientation& o) {
    if (!in_class(g, o, cls, pair)) return;
    int oc = oriented_count(o);
    total += kpow[oc] * lpow[g.m() - oc];
  });
  return total;
}

struct OrbitScan {
  std::uint64_t orbit_count = 0;
  std::vector<std::uint32_t> orbit_id;  // per state index; ids ordered by smallest member
};

namespace detail {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<std::uint32_t>(i);
  }
  std::uint32_t find(std::uint32_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = a;  // smaller index wins: deterministic roots
    else parent[a] = b;
  }
};

inline std::vector<PartialOrientation> pivot_neighbors(const Multigraph& g,
                                                       const PartialOrientation& o) {
  std::vector<PartialOrientation> out;
  for (int ein = 0; ein < g.m(); ++ein) {
    if (o[ein] == EdgeState::Unoriented) continue;
    int v = oriented_head(g, ein, o[ein]);
    for (int eout = 0; eout < g.m(); ++eout) {
      if (o[eout] != EdgeState::Unoriented || eout == ein) continue;
      if (g.tail(eout) != v && g.head(eout) != v) continue;
      if (g.is_loop(eout)) {
        for (EdgeState s : {EdgeState::Forward, EdgeState::Backward}) {
          PartialOrientation r = o;
          r[ein] = EdgeState::Unoriented;
          r[eout] = s;
          out.push_back(std::move(r));
        }
      } else {
        out.push_back(apply_edge_pivot(g, o, eout, ein, v));
      }
    }
  }
  return out;
}

}  // namespace detail

// Union of orbits of all 3^m states under the generated moves.
inline OrbitScan orbit_scan(const Multigraph& g, const MoveSet& moves) {
  check_guard(g);
  if (!moves.cut_reversal && !moves.cycle_reversal && !moves.edge_pivot)
    throw std::invalid_argument("orbit_scan: empty move set");
  std::uint64_t total = state_count(g);
  detail::UnionFind uf(total);
  for (std::uint64_t i = 0; i < total; ++i) {
    PartialOrientation o = orientation_from_index(g, i);
    auto join = [&](const PartialOrientation& nb) {
      uf.unite(static_cast<std::uint32_t>(i),
               static_cast<std::uint32_t>(orientation_index(nb)));
    };
    if (moves.cut_reversal)
      for (const auto& w : enumerate_directed_cuts(g, o))
        join(apply_cut_reversal(g, o, w.side));
    if (moves.cycle_reversal)
      for (const auto& w : enumerate_directed_cycles(g, o))
        join(apply_cycle_reversal(g, o, w));
    if (moves.edge_pivot)
      for (const auto& nb : detail::pivot_neighbors(g, o)) join(nb);
  }
  OrbitScan scan;
  scan.orbit_id.assign(total, 0);
  std::uint32_t next_id = 0;
  std::vector<std::uint32_t> root_id(total, UINT32_MAX);
  for (std::uint64_t i = 0; i < total; ++i) {
    std::uint32_t r = uf.find(static_cast<std::uint32_t>(i));
    if (root_id[r] == UINT32_MAX) root_id[r] = next_id++;
    scan.orbit_id[i] = root_id[r];
  }
  scan.orbit_count = next_id;
  return scan;
}

// Number of distinct indegree sequences over all partial orientations.
inline std::uint64_t indegree_census(const Multigraph& g) {
  check_guard(g);
  std::set<std::vector<int>> seen;
  enumerate_partial_orientations(
      g, [&](const PartialOrientation& o) { seen.insert(indegree_sequence(g, o)); });
  return seen.size();
}

// --- identity-verification harness ---

struct IdentityRecord {
  std::string identity;
  std::string formula_value;  // decimal
  std::string brute_value;
  bool equal = false;
  double millis = 0;
};

struct CensusReport {
  std::string graph;
  std::vector<IdentityRecord> records;
  bool all_equal() const {
    for (const auto& r : records)
      if (!r.equal) return false;
    return true;
  }
};

namespace detail {

template <typename FormulaFn, typename BruteFn>
void run_identity(CensusReport& report, const std::string& name, FormulaFn&& formula,
                  BruteFn&& brute) {
  auto t0 = std::chrono::steady_clock::now();
  BigInt fv = formula();
  BigInt bv = brute();
  auto t1 = std::chrono::steady_clock::now();
  IdentityRecord rec;
  rec.identity = name;
  rec.formula_value = fv.str();
  rec.brute_value = bv.str();
  rec.equal = (fv == bv);
  rec.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
  report.records.push_back(std::move(rec));
}

}  // namespace detail

// Formula-vs-brute verification across classes, (k,l) values and reference
// pairs, plus the orbit/representative structure checks.
inline CensusReport verify_identities(const Multigraph& g, const std::vector<ReferencePair>& pairs,
                                      const std::vector<std::pair<unsigned, unsigned>>& kl_list,
                                      const std::string& graph_name = "") {
  check_guard(g);
  CensusReport report;
  report.graph = graph_name;
  ReferencePair dflt = default_pair(g);

  for (auto [k, l] : kl_list) {
    for (OrientationClass cls : {OrientationClass::Acyclic, OrientationClass::StronglyConnected,
                                 OrientationClass::CutMinimal, OrientationClass::CycleMinimal}) {
      std::string cname;
      switch (cls) {
        case OrientationClass::Acyclic: cname = "acyclic"; break;
        case OrientationClass::StronglyConnected: cname = "strong"; break;
        case OrientationClass::CutMinimal: cname = "cut-minimal"; break;
        default: cname = "cycle-minimal"; break;
      }
      detail::run_identity(
          report, "chromatic(" + cname + ",k=" + std::to_string(k) + ",l=" + std::to_string(l) + ")",
          [&] { return chromatic_count(g, cls, k, l); },
          [&] { return brute_count(g, cls, dflt, k, l); });
    }
  }

  // orbit counts vs minimal-state counts vs formulas, (k,l) = (1,1)
  OrbitScan cut_orbits = orbit_scan(g, {.cut_reversal = true});
  OrbitScan cycle_orbits = orbit_scan(g, {.cycle_reversal = true});
  detail::run_identity(
      report, "cut-orbits = 2^(n-1) T(1,3)",
      [&] { return chromatic_count(g, OrientationClass::CutMinimal, 1, 1); },
      [&] { return BigInt(cut_orbits.orbit_count); });
  detail::run_identity(
      report, "cycle-orbits = 2^g T(3,1)",
      [&] { return chromatic_count(g, OrientationClass::CycleMinimal, 1, 1); },
      [&] { return BigInt(cycle_orbits.orbit_count); });
  detail::run_identity(
      report, "pivot+cycle orbits = indegree census",
      [&] {
        return BigInt(orbit_scan(g, {.cycle_reversal = true, .edge_pivot = true}).orbit_count);
      },
      [&] { return BigInt(indegree_census(g)); });

  // pair independence of the minimal-state counts + one-minimal-per-orbit
  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    const ReferencePair& pair = pairs[pi];
    detail::run_identity(
        report, "cut-minimal count, pair " + std::to_string(pi),
        [&] { return chromatic_count(g, OrientationClass::CutMinimal, 1, 1); },
        [&] { return brute_count(g, OrientationClass::CutMinimal, pair, 1, 1); });
    detail::run_identity(
        report, "cycle-minimal count, pair " + std::to_string(pi),
        [&] { return chromatic_count(g, OrientationClass::CycleMinimal, 1, 1); },
        [&] { return brute_count(g, OrientationClass::CycleMinimal, pair, 1, 1); });
    // each cut orbit holds exactly one cut-minimal state and canonical_rep
    // maps every member onto it
    detail::run_identity(
        report, "canonical cut rep bijection, pair " + std::to_string(pi),
        [&] { return BigInt(cut_orbits.orbit_count); },
        [&] {
          std::set<std::uint64_t> reps;
          bool consistent = true;
          enumerate_partial_orientations(g, [&](const PartialOrientation& o) {
            auto [rep, trace] = canonical_rep(g, o, pair, OrientationClass::CutMinimal);
            std::uint64_t oi = orientation_index(o), ri = orientation_index(rep);
            if (cut_orbits.orbit_id[oi] != cut_orbits.orbit_id[ri]) consistent = false;
            reps.insert(ri);
          });
          return consistent ? BigInt(reps.size()) : BigInt(-1);
        });
  }
  return report;
}

}  // namespace porient
