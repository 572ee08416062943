#include "test_support.hpp"

#include <cliquepf/errors.hpp>
#include <cliquepf/model.hpp>

#include <doctest.h>

#include <cmath>

using namespace cliquepf;
using cliquepf::testing::pascal;

namespace {

Graph triangle_plus_isolated() {
  const Edge e[] = {{0, 1}, {0, 2}, {1, 2}};
  return Graph(4, e);
}

}  // namespace

TEST_CASE("weights_from_graph: closed-form entries") {
  SUBCASE("triangle, m = 2") {
    const AlgorithmParams p(2, 3);
    const WeightMatrix w = weights_from_graph(Graph::complete(3), p);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) CHECK(w.exact(i, j) == Rational(53, 50));
  }
  SUBCASE("empty graph, m = 2") {
    const AlgorithmParams p(2, 3);
    const WeightMatrix w = weights_from_graph(Graph::empty(3), p);
    CHECK(w.exact(0, 1) == Rational(47, 50));
    CHECK(w.exact(2, 1) == Rational(47, 50));
  }
  SUBCASE("triangle plus isolated vertex, m = 3") {
    const AlgorithmParams p(3, 4);
    const WeightMatrix w = weights_from_graph(triangle_plus_isolated(), p);
    CHECK(w.exact(0, 1) == Rational(103, 100));
    CHECK(w.exact(0, 2) == Rational(103, 100));
    CHECK(w.exact(1, 2) == Rational(103, 100));
    for (std::size_t i = 0; i < 3; ++i) CHECK(w.exact(i, 3) == Rational(97, 100));
    CHECK(w.exact(3, 3) == 1);
    CHECK(w.approx(0, 1) == doctest::Approx(1.03));
  }
}

TEST_CASE("weights_from_graph: every entry sits on the boundary of the allowed band") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = cliquepf::testing::random_graph(7, 0.4, rng);
    const AlgorithmParams p(4, 7);
    const WeightMatrix w = weights_from_graph(g, p);
    for (Vertex i = 0; i < 7; ++i)
      for (Vertex j = 0; j < 7; ++j) {
        if (i == j) continue;
        CHECK(abs(w.exact(i, j) - 1) == p.delta());
        CHECK((w.exact(i, j) > 1) == g.has_edge(i, j));
      }
  }
}

TEST_CASE("weights_from_graph commutes with vertex relabeling") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 25; ++rep) {
    const Graph g = cliquepf::testing::random_graph(8, 0.5, rng);
    const auto perm = cliquepf::testing::random_permutation(8, rng);
    const AlgorithmParams p(3, 8);
    const WeightMatrix w = weights_from_graph(g, p);
    const WeightMatrix wp = weights_from_graph(g.relabeled(perm), p);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) CHECK(wp.exact(perm[i], perm[j]) == w.exact(i, j));
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(AlgorithmParams(1, 5), ParameterError);
  CHECK_THROWS_AS(AlgorithmParams(6, 5), ParameterError);
  CHECK_THROWS_AS(AlgorithmParams(10, 39, Regime::large_gap), ParameterError);
  CHECK_THROWS_AS(AlgorithmParams(9, 40, Regime::large_gap), ParameterError);
  CHECK_NOTHROW(AlgorithmParams(10, 40, Regime::large_gap));
  CHECK_THROWS_AS(AlgorithmParams(3, 5, Regime::standard, Rational(7, 100)), ParameterError);
  CHECK_THROWS_AS(AlgorithmParams(3, 5, Regime::standard, Rational(0)), ParameterError);

  const AlgorithmParams p(3, 5, Regime::standard, Rational(1, 25));
  CHECK(p.beta() == Rational(61, 40));
  const AlgorithmParams big(10, 40, Regime::large_gap);
  CHECK(big.gamma() == Rational(9, 50));
  CHECK(big.beta() == Rational(181, 180));
  CHECK(AlgorithmParams(3, 5).beta() == Rational(61, 60));
}

TEST_CASE("WeightMatrix rejects entries outside the band and asymmetry") {
  std::vector<Rational> e(4, Rational(1));
  e[1] = Rational(11, 10);
  e[2] = Rational(11, 10);
  CHECK_THROWS_AS(WeightMatrix(2, e, Rational(1, 20)), ParameterError);
  CHECK_NOTHROW(WeightMatrix(2, e, Rational(1, 10)));
  e[2] = Rational(21, 20);
  CHECK_THROWS_AS(WeightMatrix(2, e, Rational(1, 10)), ParameterError);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("0.06") == Rational(3, 50));
  CHECK(parse_rational("3/50") == Rational(3, 50));
  CHECK(parse_rational("6/100") == Rational(3, 50));
  CHECK(parse_rational("2") == Rational(2));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("abc"), ParameterError);
  CHECK_THROWS_AS(parse_rational("0.0.1"), ParameterError);
  CHECK_THROWS_AS(parse_rational(""), ParameterError);
}

TEST_CASE("weight_curve: endpoints and closed form") {
  const AlgorithmParams p(2, 3);
  CHECK(weight_curve(1.0, p) == doctest::Approx(std::exp(0.12)).epsilon(1e-14));
  const double w0 = std::exp(0.12) * 0.94 / 1.06;
  CHECK(weight_curve(0.0, p) == doctest::Approx(w0).epsilon(1e-14));
  CHECK(weight_curve(0.0, p) == doctest::Approx(0.99985).epsilon(1e-5));
  CHECK(weight_curve(0.5, p) == doctest::Approx(std::sqrt(weight_curve(0.0, p) * weight_curve(1.0, p))).epsilon(1e-14));
  CHECK_THROWS_AS(weight_curve(-0.01, p), DomainError);
  CHECK_THROWS_AS(weight_curve(1.01, p), DomainError);
  CHECK_THROWS_AS(weight_curve(std::nan(""), p), DomainError);
}

TEST_CASE("weight_curve is strictly increasing and log-affine") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick_m(2, 40);
  for (int rep = 0; rep < 1000; ++rep) {
    const std::size_t m = pick_m(rng);
    const double g = 0.058 * unit(rng) + 1e-3;
    const AlgorithmParams p(m, 2 * m, Regime::standard, parse_rational(std::to_string(g).substr(0, 8)));
    double a = unit(rng), b = unit(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    CHECK(weight_curve(a, p) < weight_curve(b, p));

    const double h = 0.1 * unit(rng) + 1e-3;
    const double t = h + (1.0 - 2.0 * h) * unit(rng);
    const double second = log_weight_curve(t + h, p) - 2.0 * log_weight_curve(t, p) + log_weight_curve(t - h, p);
    CHECK(std::fabs(second) < 1e-12);
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  const auto tri = pascal(64);
  CHECK(binomial(50, 25) == tri[50][25]);
  CHECK(tri[50][25] == BigInt("126410606437752"));
  for (long a = 0; a <= 64; ++a) {
    CHECK(binomial(a, 0) == 1);
    CHECK(binomial(a, a) == 1);
    for (long b = 0; b <= a; ++b) REQUIRE(binomial(a, b) == tri[a][b]);
  }
}

TEST_CASE("Graph invariants") {
  const Edge loop[] = {{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), ParseError);
  const Edge dup[] = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph(3, dup), ParseError);
  const Edge out[] = {{0, 3}};
  CHECK_THROWS_AS(Graph(3, out), ParseError);
  const Graph g = triangle_plus_isolated();
  const Vertex s[] = {0, 1, 3};
  CHECK(g.edges_within(s) == 1);
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(2, 3));
}

TEST_CASE("AnchorSet validation") {
  CHECK_THROWS_AS(AnchorSet({0, 0}, 4, 3), ParameterError);
  CHECK_THROWS_AS(AnchorSet({0, 1, 2, 3}, 4, 3), ParameterError);
  CHECK_THROWS_AS(AnchorSet({4}, 4, 3), ParameterError);
  const AnchorSet a({2, 0}, 4, 3);
  CHECK(a.vertices() == std::vector<Vertex>{0, 2});
  CHECK(a.mask() == 0b101u);
}

TEST_CASE("Accumulator<double> compensates cancellation") {
  Accumulator<double> acc;
  acc.add(1.0);
  for (int i = 0; i < 1000; ++i) acc.add(1e-16);
  acc.add(-1.0);
  CHECK(acc.value() == doctest::Approx(1e-13).epsilon(1e-6));
}
