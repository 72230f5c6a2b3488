#pragma once

#include <string>
#include <utility>
#include <vector>

#include <porient/multigraph.hpp>

namespace porient::testing {

struct NamedGraph {
  std::string name;
  Multigraph graph;
};

inline std::vector<NamedGraph> suite_graphs() {
  return {
      {"single-edge", build(2, {{0, 1}})},
      {"single-loop", build(1, {{0, 0}})},
      {"path-3", build(4, {{0, 1}, {1, 2}, {2, 3}})},
      {"star-3", build(4, {{0, 1}, {0, 2}, {0, 3}})},
      {"K3", build(3, {{0, 1}, {1, 2}, {2, 0}})},
      {"theta", build(2, {{0, 1}, {0, 1}, {0, 1}})},
      {"double-edge-loop", build(2, {{0, 1}, {0, 1}, {1, 1}})},
      {"K3-pendant", build(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})},
      {"K4", build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})},
  };
}

}  // namespace porient::testing
