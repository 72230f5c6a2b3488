#include <catch2/catch_amalgamated.hpp>

#include <porient/multigraph.hpp>

#include "oracles.hpp"
#include "suite_graphs.hpp"

using namespace porient;

TEST_CASE("build validates input") {
  auto k3 = build(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(k3.m() == 3);
  CHECK(build(1, {{0, 0}}).is_loop(0));
  CHECK(build(2, {{0, 1}, {0, 1}, {0, 1}}).m() == 3);
  CHECK_THROWS_AS(build(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(build(2, {{0, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(build(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("delete_edge keeps relative order and reports the id map") {
  auto k3 = build(3, {{0, 1}, {1, 2}, {2, 0}});
  auto r = delete_edge(k3, 0);
  CHECK(r.graph.m() == 2);
  CHECK(r.graph.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 0}});
  CHECK(r.edge_map == std::vector<int>{-1, 0, 1});
  CHECK(is_connected(r.graph));

  auto theta = build(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(genus(delete_edge(theta, 1).graph) == 1);

  auto loop = build(1, {{0, 0}});
  CHECK(delete_edge(loop, 0).graph.m() == 0);
  CHECK_THROWS_AS(delete_edge(k3, 3), std::invalid_argument);
}

TEST_CASE("contract_edge merges into the smaller endpoint") {
  auto k3 = build(3, {{0, 1}, {1, 2}, {2, 0}});
  auto r = contract_edge(k3, 0);
  CHECK(r.graph.n == 2);
  CHECK(r.graph.m() == 2);
  // double edge between the merged vertex and old vertex 2 (relabeled 1)
  CHECK(r.graph.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
  CHECK(r.edge_map == std::vector<int>{-1, 0, 1});

  auto path = build(4, {{0, 1}, {1, 2}, {2, 3}});
  auto rc = contract_edge(path, 1);
  CHECK(rc.graph.n == 3);
  CHECK(rc.graph.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  auto dbl = build(2, {{0, 1}, {0, 1}});
  auto rd = contract_edge(dbl, 0);
  CHECK(rd.graph.n == 1);
  CHECK(rd.graph.is_loop(0));

  auto loop = build(1, {{0, 0}});
  CHECK_THROWS_AS(contract_edge(loop, 0), std::invalid_argument);
}

TEST_CASE("classify_edge matches the deletion-reachability oracle") {
  for (const auto& [name, g] : porient::testing::suite_graphs()) {
    INFO(name);
    for (int e = 0; e < g.m(); ++e) {
      EdgeClass got = classify_edge(g, e);
      if (g.is_loop(e)) {
        CHECK(got == EdgeClass::Loop);
      } else {
        bool still_connected = is_connected(delete_edge(g, e).graph);
        CHECK(got == (still_connected ? EdgeClass::Ordinary : EdgeClass::Bridge));
      }
    }
  }
  auto path = build(4, {{0, 1}, {1, 2}, {2, 3}});
  for (int e = 0; e < 3; ++e) CHECK(classify_edge(path, e) == EdgeClass::Bridge);
  auto k3 = build(3, {{0, 1}, {1, 2}, {2, 0}});
  for (int e = 0; e < 3; ++e) CHECK(classify_edge(k3, e) == EdgeClass::Ordinary);
}

TEST_CASE("genus") {
  CHECK(genus(build(3, {{0, 1}, {1, 2}, {2, 0}})) == 1);
  CHECK(genus(build(4, {{0, 1}, {1, 2}, {2, 3}})) == 0);
  CHECK(genus(build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 3);
  CHECK_THROWS_AS(genus(build(2, {})), std::invalid_argument);
}

TEST_CASE("genus under minors") {
  for (const auto& [name, g] : porient::testing::suite_graphs()) {
    INFO(name);
    for (int e = 0; e < g.m(); ++e) {
      EdgeClass c = classify_edge(g, e);
      if (c != EdgeClass::Loop) CHECK(genus(contract_edge(g, e).graph) == genus(g));
      if (c == EdgeClass::Ordinary) CHECK(genus(delete_edge(g, e).graph) == genus(g) - 1);
    }
  }
}
