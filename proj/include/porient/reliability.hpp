#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "multigraph.hpp"
#include "orientation.hpp"
#include "rational.hpp"
#include "reductions.hpp"
#include "tutte.hpp"

namespace porient {

struct McConfig {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  BigRational p = BigRational(1, 2);
};

struct McEstimate {
  double estimate = 0;
  double std_error = 0;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

namespace detail {

// Counter-based generator: each trial derives its own splitmix64 stream
// from (seed, trial index), so results do not depend on execution order.
struct TrialRng {
  std::uint64_t state;
  TrialRng(std::uint64_t seed, std::uint64_t trial)
      : state(seed ^ (trial * 0x9e3779b97f4a7c15ULL) ^ 0xd1b54a32d192ed03ULL) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// Exact rational comparison r / 2^64 < p, no floating point.
struct RationalThreshold {
  BigInt num_shifted;  // numerator(p) << 64
  BigInt den;
  explicit RationalThreshold(const BigRational& p)
      : num_shifted(boost::multiprecision::numerator(p) << 64),
        den(boost::multiprecision::denominator(p)) {}
  bool below(std::uint64_t r) const { return BigInt(r) * den < num_shifted; }
  bool below2x(std::uint64_t r) const { return BigInt(r) * den < 2 * num_shifted; }
};

inline McEstimate finish(std::uint64_t successes, const McConfig& cfg) {
  McEstimate e;
  e.successes = successes;
  e.trials = cfg.trials;
  e.seed = cfg.seed;
  e.estimate = static_cast<double>(successes) / static_cast<double>(cfg.trials);
  e.std_error = std::sqrt(e.estimate * (1.0 - e.estimate) / static_cast<double>(cfg.trials));
  return e;
}

}  // namespace detail

// Delete each edge independently with probability p; success iff the
// remaining subgraph spans and connects all vertices.
inline McEstimate mc_subgraph(const Multigraph& g, const McConfig& cfg) {
  if (cfg.p <= 0 || cfg.p >= 1)
    throw std::invalid_argument("mc_subgraph: need 0 < p < 1");
  if (cfg.trials == 0) throw std::invalid_argument("mc_subgraph: need trials > 0");
  if (!is_connected(g)) throw std::invalid_argument("mc_subgraph: graph must be connected");
  detail::RationalThreshold th(cfg.p);
  std::uint64_t successes = 0;
  std::vector<char> alive(g.m());
  std::vector<int> stack;
  std::vector<char> seen(g.n);
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    detail::TrialRng rng(cfg.seed, t);
    for (int e = 0; e < g.m(); ++e) alive[e] = !th.below(rng.next());
    // connectivity over surviving edges
    std::fill(seen.begin(), seen.end(), 0);
    stack.assign(1, 0);
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e = 0; e < g.m(); ++e) {
        if (!alive[e]) continue;
        int w = -1;
        if (g.tail(e) == v) w = g.head(e);
        else if (g.head(e) == v) w = g.tail(e);
        if (w >= 0 && !seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    if (count == g.n) ++successes;
  }
  return detail::finish(successes, cfg);
}

// Orient each edge Forward with probability p, Backward with probability p,
// Unoriented otherwise; success iff cut-minimal under the pair. Converges
// to R(p) for 0 < p <= 1/2.
inline McEstimate mc_cutminimal(const Multigraph& g, const McConfig& cfg,
                                const ReferencePair& pair) {
  if (cfg.p <= 0 || cfg.p > BigRational(1, 2))
    throw std::invalid_argument("mc_cutminimal: need 0 < p <= 1/2");
  if (cfg.trials == 0) throw std::invalid_argument("mc_cutminimal: need trials > 0");
  if (!is_connected(g)) throw std::invalid_argument("mc_cutminimal: graph must be connected");
  detail::RationalThreshold th(cfg.p);
  std::uint64_t successes = 0;
  PartialOrientation o(g.m());
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    detail::TrialRng rng(cfg.seed, t);
    for (int e = 0; e < g.m(); ++e) {
      std::uint64_t r = rng.next();
      if (th.below(r)) o[e] = EdgeState::Forward;
      else if (th.below2x(r)) o[e] = EdgeState::Backward;
      else o[e] = EdgeState::Unoriented;
    }
    if (is_cut_minimal(g, o, pair)) ++successes;
  }
  return detail::finish(successes, cfg);
}

// Exact probability that a random (k,l)-chromatic partial orientation is
// cut-minimal: chromatic_count(CutMinimal, k, l) / (2k+l)^m. Equals
// reliability_exact(G, k/(2k+l)).
inline BigRational chromatic_cutmin_probability(const Multigraph& g, unsigned k, unsigned l) {
  if (k == 0) throw std::invalid_argument("chromatic_cutmin_probability: k must be positive");
  BigInt numer = chromatic_count(g, OrientationClass::CutMinimal, k, l);
  BigInt denom = pow_int(BigInt(2 * k + l), static_cast<unsigned>(g.m()));
  return BigRational(numer, denom);
}

}  // namespace porient
