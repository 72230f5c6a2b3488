#include <catch2/catch_amalgamated.hpp>

#include <porient/multigraph.hpp>
#include <porient/tutte.hpp>

#include "oracles.hpp"
#include "suite_graphs.hpp"

using namespace porient;
using porient::testing::suite_graphs;

static TuttePolynomial poly(std::initializer_list<std::tuple<int, int, long>> terms) {
  TuttePolynomial t;
  for (auto [i, j, c] : terms) t.coeffs[{i, j}] = c;
  return t;
}

TEST_CASE("base cases and small graphs") {
  CHECK(tutte_polynomial(build(2, {{0, 1}})) == poly({{1, 0, 1}}));
  CHECK(tutte_polynomial(build(1, {{0, 0}})) == poly({{0, 1, 1}}));
  CHECK(tutte_polynomial(build(4, {{0, 1}, {1, 2}, {2, 3}})) == poly({{3, 0, 1}}));
  // K3: x^2 + x + y
  CHECK(tutte_polynomial(build(3, {{0, 1}, {1, 2}, {2, 0}})) ==
        poly({{2, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
  // theta: x + y + y^2
  CHECK(tutte_polynomial(build(2, {{0, 1}, {0, 1}, {0, 1}})) ==
        poly({{1, 0, 1}, {0, 1, 1}, {0, 2, 1}}));
  CHECK_THROWS_AS(tutte_polynomial(build(2, {})), std::invalid_argument);
}

TEST_CASE("agrees with the rank-nullity expansion on every suite graph") {
  for (const auto& [name, g] : suite_graphs()) {
    INFO(name);
    CHECK(tutte_polynomial(g) == porient::testing::tutte_rank_nullity(g));
  }
}

TEST_CASE("deletion-contraction identity holds post hoc") {
  for (const auto& [name, g] : suite_graphs()) {
    INFO(name);
    TuttePolynomial t = tutte_polynomial(g);
    for (int e = 0; e < g.m(); ++e) {
      if (classify_edge(g, e) != EdgeClass::Ordinary) continue;
      TuttePolynomial sum = tutte_polynomial(delete_edge(g, e).graph);
      sum += tutte_polynomial(contract_edge(g, e).graph);
      CHECK(t == sum);
    }
  }
}

TEST_CASE("evaluate is exact rational") {
  TuttePolynomial k3 = tutte_polynomial(build(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(evaluate(k3, BigRational(3), BigRational(1, 2)) == BigRational(25, 2));
  CHECK(evaluate(k3, BigRational(2), BigRational(0)) == 6);
}

TEST_CASE("T(1,1) counts spanning trees") {
  for (const auto& [name, g] : suite_graphs()) {
    INFO(name);
    CHECK(evaluate(tutte_polynomial(g), BigRational(1), BigRational(1)) ==
          BigRational(porient::testing::spanning_tree_count(g)));
  }
}

TEST_CASE("T(2,0) counts acyclic full orientations") {
  for (const auto& [name, g] : suite_graphs()) {
    INFO(name);
    CHECK(evaluate(tutte_polynomial(g), BigRational(2), BigRational(0)) ==
          BigRational(porient::testing::full_acyclic_count(g)));
  }
}

TEST_CASE("chromatic_count spot values") {
  auto k3 = build(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(chromatic_count(k3, OrientationClass::Acyclic, 1, 1) == 25);
  CHECK(chromatic_count(k3, OrientationClass::Acyclic, 1, 0) == 6);
  CHECK(chromatic_count(k3, OrientationClass::Acyclic, 2, 1) == 109);
  CHECK(chromatic_count(k3, OrientationClass::StronglyConnected, 1, 1) == 15);
  CHECK(chromatic_count(k3, OrientationClass::CutMinimal, 1, 1) == 20);
  CHECK(chromatic_count(k3, OrientationClass::CycleMinimal, 1, 1) == 26);
  auto path = build(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(chromatic_count(path, OrientationClass::CutMinimal, 1, 1) == 8);
  CHECK_THROWS_AS(chromatic_count(k3, OrientationClass::Acyclic, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(chromatic_count(k3, OrientationClass::All, 1, 1), std::invalid_argument);
}

TEST_CASE("reliability_exact spot values") {
  auto k3 = build(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(reliability_exact(k3, BigRational(1, 3)) == BigRational(20, 27));
  CHECK(reliability_exact(k3, BigRational(1, 2)) == BigRational(1, 2));
  auto path = build(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(reliability_exact(path, BigRational(1, 4)) == BigRational(27, 64));
  CHECK_THROWS_AS(reliability_exact(k3, BigRational(0)), std::invalid_argument);
  CHECK_THROWS_AS(reliability_exact(k3, BigRational(1)), std::invalid_argument);
}

TEST_CASE("memo key is label-invariant at desk scale") {
  // same graph under a vertex relabeling produces the same canonical key
  auto a = build(4, {{0, 1}, {1, 2}, {2, 3}});
  auto b = build(4, {{3, 2}, {2, 0}, {0, 1}});
  CHECK(tutte_polynomial(a) == tutte_polynomial(b));
}
