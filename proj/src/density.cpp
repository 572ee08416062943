#include <cliquepf/density.hpp>
#include <cliquepf/errors.hpp>

#include <cmath>
#include <optional>
#include <string>

namespace cliquepf {

std::string_view to_string(Verdict v) { return v == Verdict::exists_dense ? "EXISTS_DENSE" : "NOT_MANY_DENSE"; }

double decide_certificate_limit() { return std::log(1.1); }

ApproxLog density_functional_estimate(const Graph& g, const AlgorithmParams& p, const TruncationPlan& plan,
                                      const EngineOptions& opts) {
  const WeightMatrix w = weights_from_graph(g, p);
  ApproxLog pf = estimate_log_restricted_pf(w, p.m(), plan, opts.mode, {}, opts.workers);
  const double prefactor = p.gamma().get_d() * static_cast<double>(p.m()) -
                           static_cast<double>(p.pair_count()) * std::log1p(p.delta().get_d());
  pf.value += prefactor;
  return pf;
}

DensityVerdict decide_from_estimate(const Graph& g, const AlgorithmParams& p, double sigma, double eps,
                                    const ApproxLog& estimate) {
  if (!(sigma >= 0.0)) throw ParameterError("sigma must be non-negative");
  if (!(eps > 0.0)) throw ParameterError("eps must be positive");
  if (!(sigma + eps <= 1.0)) throw ParameterError("sigma + eps must not exceed 1");
  if (estimate.additive_bound > decide_certificate_limit())
    throw DecideRefused("certificate " + std::to_string(estimate.additive_bound) +
                        " exceeds ln 1.1; raise the order or use --target-eps");
  DensityVerdict v;
  v.sigma = sigma;
  v.eps = eps;
  v.estimate = estimate;
  v.decision_factor = kDecisionFactor;
  v.log_t_no = log_rational(Rational(binomial(static_cast<long>(g.vertex_count()), static_cast<long>(p.m())))) +
               log_weight_curve(sigma, p);
  v.verdict = estimate.value > v.log_t_no + std::log(kDecisionFactor) ? Verdict::exists_dense : Verdict::not_many_dense;
  return v;
}

DensityVerdict decide_density(const Graph& g, const AlgorithmParams& p, double sigma, double eps,
                              const TruncationPlan& plan, const EngineOptions& opts) {
  if (!(sigma >= 0.0) || !(eps > 0.0) || !(sigma + eps <= 1.0))
    throw ParameterError("need sigma >= 0, eps > 0 and sigma + eps <= 1");
  if (plan.additive_bound > decide_certificate_limit())
    throw DecideRefused("order " + std::to_string(plan.order) + " certifies only " +
                        std::to_string(plan.additive_bound) + " > ln 1.1");
  return decide_from_estimate(g, p, sigma, eps, density_functional_estimate(g, p, plan, opts));
}

namespace {

struct Candidate {
  Vertex vertex;
  ApproxLog estimate;
  std::optional<Rational> exact_sum;
};

// Exact mode compares the rational Taylor sums (all candidates share the
// same ln C(n - r, m - r) term); float mode treats near-equal values as ties.
bool better(const Candidate& challenger, const Candidate& incumbent) {
  if (challenger.exact_sum && incumbent.exact_sum) return *challenger.exact_sum > *incumbent.exact_sum;
  const double a = challenger.estimate.value;
  const double b = incumbent.estimate.value;
  return a - b > 1e-12 * std::max(1.0, std::fabs(b));
}

}  // namespace

ExtractionResult extract_dense_subset(const Graph& g, const AlgorithmParams& p, const TruncationPlan& plan,
                                      const EngineOptions& opts) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = p.m();
  const WeightMatrix w = weights_from_graph(g, p);
  AnchorSet anchor;
  ApproxLog last;
  for (std::size_t step = 0; step < m; ++step) {
    std::vector<Candidate> candidates;
    for (Vertex v = 0; v < n; ++v) {
      if (anchor.contains(v)) continue;
      const AnchorSet next = anchor.with(v, n, m);
      Candidate c{v, {}, std::nullopt};
      if (opts.mode == ScalarMode::exact) {
        const auto d = f_from_g(g_derivatives<Rational>(w, m, plan.order, next, opts.workers));
        c.exact_sum = taylor_sum(d, plan.order);
        c.estimate = taylor_log_estimate(d, plan);
      } else {
        const auto d = f_from_g(g_derivatives<double>(w, m, plan.order, next, opts.workers));
        c.estimate = taylor_log_estimate(d, plan);
      }
      candidates.push_back(std::move(c));
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i)
      if (better(candidates[i], candidates[best])) best = i;
    anchor = anchor.with(candidates[best].vertex, n, m);
    last = candidates[best].estimate;
  }
  return {anchor.vertices(), last};
}

}  // namespace cliquepf
