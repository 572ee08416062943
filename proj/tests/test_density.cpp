#include "test_support.hpp"

#include <cliquepf/density.hpp>
#include <cliquepf/errors.hpp>
#include <cliquepf/oracle.hpp>

#include <doctest.h>

#include <cmath>

using namespace cliquepf;
namespace t = cliquepf::testing;

namespace {

constexpr double kBeta = 61.0 / 60.0;

TruncationPlan decide_plan(std::size_t m) { return TruncationPlan::rigorous(m, kBeta, std::log(1.1)); }

}  // namespace

TEST_CASE("density_functional_estimate: complete and empty graphs") {
  const AlgorithmParams p(2, 3);
  const TruncationPlan plan = TruncationPlan::budgeted(2, kBeta, 2);
  const ApproxLog full = density_functional_estimate(Graph::complete(3), p, plan);
  CHECK(std::exp(full.value) == doctest::Approx(3.0 * std::exp(0.12 + 0.0582) / 1.06).epsilon(1e-12));
  CHECK(std::exp(full.value) == doctest::Approx(3.38226).epsilon(1e-5));
  const ApproxLog none = density_functional_estimate(Graph::empty(3), p, plan);
  CHECK(std::exp(none.value) == doctest::Approx(3.0 * std::exp(0.12 - 0.0618) / 1.06).epsilon(1e-12));
  CHECK(std::exp(none.value) == doctest::Approx(2.99979).epsilon(1e-5));

  // Complete graph: every subset has weight e^{gamma m}.
  const AlgorithmParams q(4, 8);
  const ApproxLog k8 = density_functional_estimate(Graph::complete(8), q, TruncationPlan::budgeted(4, kBeta, 6));
  CHECK(k8.value == doctest::Approx(std::log(70.0) + 0.24).epsilon(1e-12));
  CHECK(k8.additive_bound == doctest::Approx(truncation_error_bound(4, kBeta, 6)));
}

TEST_CASE("density_functional_estimate agrees with the oracle in both modes") {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 10; ++rep) {
    const Graph g = t::random_graph(8, 0.5, rng);
    const AlgorithmParams p(3, 8);
    const double truth = exact_log_density(g, p);
    for (ScalarMode mode : {ScalarMode::exact, ScalarMode::floating}) {
      const ApproxLog a = density_functional_estimate(g, p, decide_plan(3), {mode, 0});
      CHECK(std::fabs(a.value - truth) <= a.additive_bound);
      CHECK(a.value == doctest::Approx(truth).epsilon(1e-12));
    }
  }
}

TEST_CASE("decide_density verdicts") {
  SUBCASE("empty graph on 8 vertices is not dense") {
    const AlgorithmParams p(4, 8);
    const DensityVerdict v = decide_density(Graph::empty(8), p, 0.5, 0.25, decide_plan(4));
    CHECK(v.verdict == Verdict::not_many_dense);
    CHECK(v.decision_factor == 1.45);
    CHECK(v.log_t_no == doctest::Approx(std::log(70.0) + log_weight_curve(0.5, p)));
    CHECK(v.estimate.additive_bound <= std::log(1.1));
  }
  SUBCASE("at m = 4 the tilt e^{gamma m} is below the separation factor") {
    // Density(K_8) / (C(8,4) w(0.5)) = e^{0.12}-ish < 1.45, so even the
    // complete graph answers NOT_MANY_DENSE; that answer is vacuously sound
    // because 2 e^{-gamma eps m} C(8,4) exceeds the number of 4-subsets.
    const AlgorithmParams p(4, 8);
    const DensityVerdict v = decide_density(Graph::complete(8), p, 0.5, 0.5, decide_plan(4), {ScalarMode::floating, 0});
    CHECK(v.verdict == Verdict::not_many_dense);
    CHECK(2.0 * std::exp(-0.06 * 0.5 * 4) > 1.0);
  }
  SUBCASE("m = 7 separates: complete graph is dense at sigma = 0") {
    const AlgorithmParams p(7, 8);
    const DensityVerdict v = decide_density(Graph::complete(8), p, 0.0, 0.5, decide_plan(7), {ScalarMode::floating, 0});
    CHECK(v.verdict == Verdict::exists_dense);
    const DensityVerdict e = decide_density(Graph::empty(8), p, 0.0, 0.5, decide_plan(7), {ScalarMode::floating, 0});
    CHECK(e.verdict == Verdict::not_many_dense);
  }
  SUBCASE("refusal and parameter errors") {
    const AlgorithmParams p(3, 6);
    CHECK_THROWS_AS(decide_density(Graph::empty(6), p, 0.5, 0.25, TruncationPlan::budgeted(3, kBeta, 6)), DecideRefused);
    CHECK_THROWS_AS(decide_density(Graph::empty(6), p, 0.5, 0.0, decide_plan(3)), ParameterError);
    CHECK_THROWS_AS(decide_density(Graph::empty(6), p, -0.1, 0.25, decide_plan(3)), ParameterError);
    CHECK_THROWS_AS(decide_density(Graph::empty(6), p, 0.8, 0.25, decide_plan(3)), ParameterError);
  }
}

TEST_CASE("extract_dense_subset") {
  const TruncationPlan plan = TruncationPlan::rigorous(4, kBeta, 0.05);
  SUBCASE("K_4 plus four isolated vertices") {
    std::vector<Edge> e;
    for (Vertex u = 4; u < 8; ++u)
      for (Vertex v = u + 1; v < 8; ++v) e.emplace_back(u, v);
    const Graph g(8, e);
    const AlgorithmParams p(4, 8);
    for (ScalarMode mode : {ScalarMode::exact, ScalarMode::floating}) {
      const ExtractionResult r = extract_dense_subset(g, p, plan, {mode, 0});
      CHECK(r.subset == std::vector<Vertex>{4, 5, 6, 7});
      CHECK(g.edges_within(r.subset) == 6);
      // Final certificate estimates ln prod w over the clique = 6 ln(1.02).
      CHECK(r.certificate.value == doctest::Approx(6.0 * std::log(1.02)).epsilon(1e-12));
    }
  }
  SUBCASE("complete and empty graphs tie-break to the smallest indices") {
    const AlgorithmParams p(4, 7);
    for (ScalarMode mode : {ScalarMode::exact, ScalarMode::floating}) {
      CHECK(extract_dense_subset(Graph::complete(7), p, plan, {mode, 0}).subset == std::vector<Vertex>{0, 1, 2, 3});
      CHECK(extract_dense_subset(Graph::empty(7), p, plan, {mode, 0}).subset == std::vector<Vertex>{0, 1, 2, 3});
    }
  }
  SUBCASE("subset is nearly as dense as the tilted average") {
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 15; ++rep) {
      const std::size_t n = 6 + rep % 3;
      const std::size_t m = 2 + rep % 3;
      const Graph g = t::random_graph(n, 0.4, rng);
      const AlgorithmParams p(m, n);
      const auto r = extract_dense_subset(g, p, TruncationPlan::rigorous(m, kBeta, std::log(2.0) / (2.0 * m)));
      const double sigma = static_cast<double>(g.edges_within(r.subset)) / static_cast<double>(p.pair_count());
      const double lhs = 0.06 * static_cast<double>(m) * sigma;
      const double rhs = std::log(0.5) - std::log(binomial(n, m).get_d()) + exact_log_density(g, p);
      CHECK(lhs >= rhs);
    }
  }
}
