#pragma once

#include <cliquepf/model.hpp>
#include <cliquepf/scalar.hpp>

#include <cstddef>
#include <vector>

namespace cliquepf {

/// Taylor data of g(t) = P_Omega(J + t(W - J)) and f(t) = ln g(t) at t = 0.
///
/// Stored as Taylor coefficients (derivative / k!) so that float mode does
/// not overflow at the large orders the rigorous bound asks for; the
/// derivative accessors multiply k! back in.
template <class T>
struct DerivativeVector {
  /// g^{(k)}(0) / k! for k = 0..order.
  std::vector<T> g_coeffs;
  /// f^{(k)}(0) / k! for k = 0..order; entry 0 is unused (left at 0).
  /// Empty until f_from_g has run.
  std::vector<T> f_coeffs;

  std::size_t order() const { return g_coeffs.empty() ? 0 : g_coeffs.size() - 1; }
  bool has_f() const { return !f_coeffs.empty(); }
  T g_derivative(std::size_t k) const;
  T f_derivative(std::size_t k) const;

  static DerivativeVector from_derivatives(const std::vector<T>& g_derivs);
};

/// Truncation order plus the additive error bound it certifies.
struct TruncationPlan {
  std::size_t order = 0;
  double beta = 0.0;
  double additive_bound = 0.0;

  /// Caller-chosen order; the bound is attached as-is.
  static TruncationPlan budgeted(std::size_t m, double beta, std::size_t order);
  /// Smallest order whose bound is <= eps_add.
  static TruncationPlan rigorous(std::size_t m, double beta, double eps_add);
};

/// Taylor coefficients of g at 0 up to `order`, by enumerating sets of
/// distinct vertex pairs whose vertices (together with the anchor) fit in an
/// m-subset. Each set of k pairs spanning rho vertices contributes
/// C(n - rho, m - rho) * prod(w - 1); the k! orderings are folded into the
/// coefficient normalization.
///
/// The pair space is partitioned by first pair and processed with OpenMP;
/// partial sums are reduced in partition order, so float results do not
/// depend on the worker count. `workers` <= 0 keeps the OpenMP default.
/// Throws ParameterError if the anchor is larger than m or n > 64.
template <class T>
DerivativeVector<T> g_derivatives(const WeightMatrix& w, std::size_t m, std::size_t order,
                                  const AnchorSet& anchor = {}, int workers = 0);

/// Serial reference: literal sum over ordered k-tuples of distinct pairs,
/// sum_I C(n - rho(I), m - rho(I)) prod (w - 1). O(C(n,2)^k); for tests and
/// benchmarks only.
template <class T>
DerivativeVector<T> g_derivatives_reference(const WeightMatrix& w, std::size_t m, std::size_t order,
                                            const AnchorSet& anchor = {});

/// Solves g^{(k)} = sum_{j<k} C(k-1, j) g^{(j)} f^{(k-j)} forward for the
/// log-derivatives. Throws DegenerateSystem if g(0) = 0.
template <class T>
DerivativeVector<T> f_from_g(DerivativeVector<T> d);

/// sum_{k=1}^{order} f^{(k)}(0) / k!.
template <class T>
T taylor_sum(const DerivativeVector<T>& d, std::size_t order);

/// ln g(0) + sum_{k=1}^{l} f^{(k)}(0)/k!, with the plan's bound attached.
template <class T>
ApproxLog taylor_log_estimate(const DerivativeVector<T>& d, const TruncationPlan& plan);

/// m(m-1) / (2 (l+1) beta^l (beta - 1)). Throws DomainError if beta <= 1.
double truncation_error_bound(std::size_t m, double beta, std::size_t order);

/// Smallest l with truncation_error_bound(m, beta, l) <= eps_add.
std::size_t order_for_target(std::size_t m, double beta, double eps_add);

/// g_derivatives + f_from_g + taylor_log_estimate in the requested mode.
ApproxLog estimate_log_restricted_pf(const WeightMatrix& w, std::size_t m, const TruncationPlan& plan,
                                     ScalarMode mode, const AnchorSet& anchor = {}, int workers = 0);

extern template struct DerivativeVector<Rational>;
extern template struct DerivativeVector<double>;

}  // namespace cliquepf
