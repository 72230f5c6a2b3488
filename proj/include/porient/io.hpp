#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "multigraph.hpp"
#include "orientation.hpp"
#include "reductions.hpp"

namespace porient {

// Text graph format: first non-comment line "n m", then m lines
// "tail head" (0-based). Lines starting with '#' are ignored. Edge i is
// the i-th edge line.
inline Multigraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 1 || m < 0)
        throw std::invalid_argument("parse_graph: malformed header (expected \"n m\")");
      continue;
    }
    int t, h;
    if (!(ls >> t >> h)) throw std::invalid_argument("parse_graph: malformed edge line");
    edges.emplace_back(t, h);
  }
  if (n < 0) throw std::invalid_argument("parse_graph: missing header");
  if (static_cast<int>(edges.size()) != m)
    throw std::invalid_argument("parse_graph: edge count does not match header");
  return build(n, std::move(edges));
}

// Orientation string form: m characters over {'0','+','-'}, indexed by
// edge id.
inline std::string orientation_to_string(const PartialOrientation& o) {
  std::string s;
  for (EdgeState st : o) {
    switch (st) {
      case EdgeState::Unoriented: s += '0'; break;
      case EdgeState::Forward: s += '+'; break;
      case EdgeState::Backward: s += '-'; break;
    }
  }
  return s;
}

inline PartialOrientation orientation_from_string(const std::string& s, int m) {
  if (static_cast<int>(s.size()) != m)
    throw std::invalid_argument("orientation string: length must equal edge count");
  PartialOrientation o(m);
  for (int e = 0; e < m; ++e) {
    switch (s[e]) {
      case '0': o[e] = EdgeState::Unoriented; break;
      case '+': o[e] = EdgeState::Forward; break;
      case '-': o[e] = EdgeState::Backward; break;
      default: throw std::invalid_argument("orientation string: characters must be 0, + or -");
    }
  }
  return o;
}

// ReferencePair serialization: "order: i0,i1,..." plus per-edge reference
// flags over {a, r} (as-stored / reversed).
inline std::string pair_to_string(const ReferencePair& p) {
  std::string s = "order: ";
  for (std::size_t i = 0; i < p.order.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.order[i]);
  }
  s += " reference: ";
  for (EdgeState r : p.reference) s += (r == EdgeState::Forward) ? 'a' : 'r';
  return s;
}

}  // namespace porient
