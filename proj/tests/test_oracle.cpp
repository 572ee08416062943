#include "test_support.hpp"

#include <cliquepf/errors.hpp>
#include <cliquepf/oracle.hpp>

#include <doctest.h>

#include <cmath>

using namespace cliquepf;
namespace t = cliquepf::testing;

namespace {

Graph triangle_plus_isolated() {
  const Edge e[] = {{0, 1}, {0, 2}, {1, 2}};
  return Graph(4, e);
}

// Value at x of the polynomial through (xs[i], ys[i]).
Rational lagrange_at(const std::vector<Rational>& xs, const std::vector<Rational>& ys, const Rational& x) {
  Rational total = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Rational term = ys[i];
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) term *= (x - xs[j]) / (xs[i] - xs[j]);
    total += term;
  }
  return total;
}

}  // namespace

TEST_CASE("exact_partition_function: hand enumerations") {
  const Edge one[] = {{0, 1}};
  const AlgorithmParams p2(2, 3);
  CHECK(exact_partition_function(weights_from_graph(Graph(3, one), p2), 2) == Rational(147, 50));

  const AlgorithmParams p3(3, 4);
  const Rational up(103, 100), down(97, 100);
  const Rational expected = up * up * up + 3 * up * down * down;
  const Rational got = exact_partition_function(weights_from_graph(triangle_plus_isolated(), p3), 3);
  CHECK(got == expected);
  CHECK(got.get_d() == doctest::Approx(4.000108));

  std::mt19937_64 rng(1);
  const WeightMatrix w = t::random_weights(5, Rational(1, 10), rng);
  Rational prod = 1;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) prod *= w.exact(i, j);
  CHECK(exact_partition_function(w, 5) == prod);
  CHECK(exact_partition_function(WeightMatrix::ones(9), 4) == 126);
}

TEST_CASE("exact_restricted_pf") {
  std::mt19937_64 rng(2);
  const WeightMatrix w = t::random_weights(6, Rational(1, 10), rng);
  const AnchorSet full({1, 3, 4}, 6, 3);
  CHECK(exact_restricted_pf(w, 3, full) == w.exact(1, 3) * w.exact(1, 4) * w.exact(3, 4));
  CHECK(exact_restricted_pf(w, 3, AnchorSet{}) == exact_partition_function(w, 3));
  CHECK(exact_restricted_pf(WeightMatrix::ones(7), 3, AnchorSet({0}, 7, 3)) == Rational(binomial(6, 2)));
}

TEST_CASE("restricted partition functions satisfy the conditioning identity") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 5; ++rep) {
    const Graph g = t::random_graph(5, 0.5, rng);
    const AlgorithmParams p(3, 5);
    const WeightMatrix w = weights_from_graph(g, p);
    for (std::uint32_t bits = 0; bits < 32; ++bits) {
      std::vector<Vertex> omega;
      for (Vertex v = 0; v < 5; ++v)
        if ((bits >> v) & 1u) omega.push_back(v);
      if (omega.size() >= 3) continue;
      const AnchorSet a(omega, 5, 3);
      Rational rhs = 0;
      for (Vertex i = 0; i < 5; ++i)
        if (!a.contains(i)) rhs += exact_restricted_pf(w, 3, a.with(i, 5, 3));
      CHECK(Rational(static_cast<long>(3 - omega.size())) * exact_restricted_pf(w, 3, a) == rhs);
    }
  }
}

TEST_CASE("exact_g_of_t endpoints, degree and finite differences") {
  std::mt19937_64 rng(4);
  const WeightMatrix w = t::random_weights(6, Rational(1, 50), rng);
  const std::size_t m = 3;
  CHECK(exact_g_of_t(w, m, 0) == Rational(binomial(6, 3)));
  CHECK(exact_g_of_t(w, m, 1) == exact_partition_function(w, m));
  const AnchorSet a({2}, 6, m);
  CHECK(exact_g_of_t(w, m, 0, a) == Rational(binomial(5, 2)));
  CHECK(exact_g_of_t(w, m, 1, a) == exact_restricted_pf(w, m, a));

  // Degree <= M = 3: M + 2 = 5 samples determine it and predict fresh points.
  std::vector<Rational> xs, ys;
  for (long i = -2; i <= 2; ++i) {
    xs.emplace_back(i);
    ys.push_back(exact_g_of_t(w, m, xs.back()));
  }
  for (const Rational x : {Rational(7, 3), Rational(-11, 2), Rational(40)})
    CHECK(lagrange_at(xs, ys, x) == exact_g_of_t(w, m, x));

  // Central difference at h = 1/1000 against the closed-form first derivative.
  const Rational h(1, 1000);
  const Rational fd = (exact_g_of_t(w, m, h) - exact_g_of_t(w, m, -h)) / (2 * h);
  Rational g1 = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) g1 += w.exact(i, j) - 1;
  g1 *= Rational(binomial(4, 1));
  CHECK(Rational(abs(fd - g1)).get_d() < 1e-5);
}

TEST_CASE("density_histogram") {
  const Graph k4 = Graph::complete(4);
  const auto hk = density_histogram(k4, 3);
  CHECK(hk.counts == std::vector<std::uint64_t>{0, 0, 0, 4});
  CHECK(density_histogram(Graph::empty(4), 3).counts == std::vector<std::uint64_t>{4, 0, 0, 0});
  CHECK(density_histogram(triangle_plus_isolated(), 3).counts == std::vector<std::uint64_t>{0, 3, 0, 1});

  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t n = 4 + rep % 6;
    const std::size_t m = 2 + rep % 4;
    if (m > n) continue;
    const Graph g = t::random_graph(n, 0.4, rng);
    const AlgorithmParams p(m, n);
    const auto h = density_histogram(g, m);
    CHECK(h.total() == binomial(n, m).get_ui());
    CHECK(h.partition_function(p.delta()) == exact_partition_function(weights_from_graph(g, p), m));
    CHECK(h.log_density(p) == doctest::Approx(exact_log_density(g, p)).epsilon(1e-13));
  }
  CHECK(density_histogram(Graph::complete(7), 4).counts.back() == 35);
}

TEST_CASE("adding an edge never decreases the density functional") {
  std::mt19937_64 rng(6);
  for (int chain = 0; chain < 10; ++chain) {
    const std::size_t n = 7;
    const AlgorithmParams p(3 + chain % 3, n);
    Graph g = Graph::empty(n);
    std::vector<Edge> order;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) order.emplace_back(u, v);
    std::shuffle(order.begin(), order.end(), rng);
    Rational prev = exact_partition_function(weights_from_graph(g, p), p.m());
    for (auto [u, v] : order) {
      g = g.with_edge(u, v);
      const Rational next = exact_partition_function(weights_from_graph(g, p), p.m());
      CHECK(next >= prev);
      prev = next;
    }
  }
}

TEST_CASE("oracle cap") {
  CHECK_THROWS_AS(exact_partition_function(WeightMatrix::ones(21), 3), CapExceeded);
  CHECK_THROWS_AS(density_histogram(Graph::empty(21), 3), CapExceeded);
  CHECK_NOTHROW(exact_partition_function(WeightMatrix::ones(21), 2, 21));
}
