#pragma once

#include <cliquepf/graph.hpp>
#include <cliquepf/scalar.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cliquepf {

enum class Regime { standard, large_gap };

std::string_view to_string(Regime regime);
Regime regime_from_string(std::string_view s);

/// Largest admissible gamma for a regime: 3/50 or 9/50.
Rational regime_gamma(Regime regime);
/// Zero-free radius constant omega: 61/1000 or 181/1000.
Rational regime_omega(Regime regime);

/// Parameters shared by every algorithm: subset size m, weight scale gamma
/// and the zero-free constant omega of the chosen regime.
class AlgorithmParams {
 public:
  /// Throws ParameterError unless 1 < m <= n, 0 < gamma <= regime max, and
  /// (for the large-gap regime) m >= 10 and n >= 4m.
  AlgorithmParams(std::size_t m, std::size_t n, Regime regime = Regime::standard,
                  std::optional<Rational> gamma = std::nullopt);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  Regime regime() const { return regime_; }
  const Rational& gamma() const { return gamma_; }
  const Rational& omega() const { return omega_; }
  /// beta = omega / gamma, the root-exclusion radius along the segment from J.
  Rational beta() const { return omega_ / gamma_; }
  /// delta = gamma / (m - 1).
  Rational delta() const;
  /// M = m(m-1)/2.
  std::size_t pair_count() const { return m_ * (m_ - 1) / 2; }

 private:
  std::size_t m_;
  std::size_t n_;
  Regime regime_;
  Rational gamma_;
  Rational omega_;
};

/// Symmetric weights w_ij on the pairs of {0..n-1} with |w_ij - 1| <= delta.
/// Entries are held exactly; a double copy is kept for float-mode kernels.
/// The diagonal is stored as 1 and never read by any algorithm.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  /// Row-major n*n entries. Throws ParameterError if not symmetric or if an
  /// off-diagonal entry violates |w - 1| <= delta.
  WeightMatrix(std::size_t n, std::vector<Rational> entries, Rational delta);

  static WeightMatrix ones(std::size_t n);

  std::size_t size() const { return n_; }
  const Rational& delta() const { return delta_; }
  const Rational& exact(std::size_t i, std::size_t j) const { return exact_[i * n_ + j]; }
  double approx(std::size_t i, std::size_t j) const { return approx_[i * n_ + j]; }

  template <class T>
  const T& at(std::size_t i, std::size_t j) const;

  bool operator==(const WeightMatrix& other) const { return n_ == other.n_ && exact_ == other.exact_; }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> exact_;
  std::vector<double> approx_;
  Rational delta_;
};

template <>
inline const Rational& WeightMatrix::at<Rational>(std::size_t i, std::size_t j) const {
  return exact_[i * n_ + j];
}
template <>
inline const double& WeightMatrix::at<double>(std::size_t i, std::size_t j) const {
  return approx_[i * n_ + j];
}

/// w_ij = 1 + delta on edges and 1 - delta on non-edges, delta = gamma/(m-1).
WeightMatrix weights_from_graph(const Graph& g, const AlgorithmParams& p);

/// Exact weight of an m-subset of density t:
///   w(t) = e^{gamma m} (1+delta)^{(t-1)M} (1-delta)^{(1-t)M}.
/// Throws DomainError for t outside [0,1].
double weight_curve(double t, const AlgorithmParams& p);
/// ln w(t); same contract as weight_curve.
double log_weight_curve(double t, const AlgorithmParams& p);

/// Exact binomial coefficient; 0 when b < 0 or b > a.
BigInt binomial(long a, long b);

/// Estimated natural log together with an additive error bound:
/// value - additive_bound <= ln(true) <= value + additive_bound.
struct ApproxLog {
  double value = 0.0;
  double additive_bound = 0.0;
  /// Exact Taylor sum as "p/q" when computed in exact mode.
  std::optional<std::string> exact_taylor_sum;

  double relative_certificate() const;
};

/// Set of anchored vertices (0-based, sorted, distinct).
class AnchorSet {
 public:
  AnchorSet() = default;
  AnchorSet(std::vector<Vertex> vertices, std::size_t n, std::size_t m);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool contains(Vertex v) const;
  std::uint64_t mask() const;
  AnchorSet with(Vertex v, std::size_t n, std::size_t m) const;

 private:
  std::vector<Vertex> vertices_;
};

}  // namespace cliquepf
