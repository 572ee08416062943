#pragma once

#include <cliquepf/graph.hpp>
#include <cliquepf/model.hpp>
#include <cliquepf/taylor.hpp>

#include <cstddef>
#include <string_view>
#include <vector>

namespace cliquepf {

struct EngineOptions {
  ScalarMode mode = ScalarMode::exact;
  int workers = 0;
};

/// ln Density_m(G) = gamma m - M ln(1 + delta) + ln P_m(W), with ln P_m(W)
/// estimated by the Taylor method at `plan.order`. The prefactor is exact,
/// so the additive bound is the plan's.
ApproxLog density_functional_estimate(const Graph& g, const AlgorithmParams& p, const TruncationPlan& plan,
                                      const EngineOptions& opts = {});

/// Separation multiplier between the two promise thresholds.
inline constexpr double kDecisionFactor = 1.45;
/// Certificate required before decide_density will answer: additive bound <= ln 1.1.
double decide_certificate_limit();

enum class Verdict { exists_dense, not_many_dense };
std::string_view to_string(Verdict v);

struct DensityVerdict {
  Verdict verdict = Verdict::not_many_dense;
  double sigma = 0.0;
  double eps = 0.0;
  /// ln(C(n,m) w(sigma)).
  double log_t_no = 0.0;
  ApproxLog estimate;
  double decision_factor = kDecisionFactor;
};

/// EXISTS_DENSE iff the estimated ln Density exceeds ln t_no + ln 1.45.
///
/// With a certificate of at most ln 1.1 both answers are sound:
/// EXISTS_DENSE means some m-subset has density >= sigma, and NOT_MANY_DENSE
/// means fewer than 2 e^{-gamma eps m} C(n,m) subsets reach density sigma + eps.
/// Throws ParameterError unless sigma >= 0, eps > 0, sigma + eps <= 1, and
/// DecideRefused if the plan's bound exceeds ln 1.1.
DensityVerdict decide_density(const Graph& g, const AlgorithmParams& p, double sigma, double eps,
                              const TruncationPlan& plan, const EngineOptions& opts = {});

/// Verdict rule applied to an already computed estimate.
DensityVerdict decide_from_estimate(const Graph& g, const AlgorithmParams& p, double sigma, double eps,
                                    const ApproxLog& estimate);

struct ExtractionResult {
  std::vector<Vertex> subset;
  /// Estimated ln P_S(W) for the final subset, with its bound.
  ApproxLog certificate;
};

/// Greedy conditioning: grow an anchor from the empty set, each step adding
/// the vertex whose restricted partition function has the largest estimate
/// (ties to the smallest index), until it has m vertices.
ExtractionResult extract_dense_subset(const Graph& g, const AlgorithmParams& p, const TruncationPlan& plan,
                                      const EngineOptions& opts = {});

}  // namespace cliquepf
