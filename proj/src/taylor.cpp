#include <cliquepf/errors.hpp>
#include <cliquepf/taylor.hpp>

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

namespace cliquepf {
namespace {

template <class T>
bool is_zero(const T& x) {
  if constexpr (std::is_same_v<T, Rational>) {
    return sgn(x) == 0;
  } else {
    return x == 0.0;
  }
}

template <class T>
T factorial(std::size_t k) {
  if constexpr (std::is_same_v<T, Rational>) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(f);
  } else {
    double f = 1.0;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
    return f;
  }
}

template <class T>
double log_of(const T& x) {
  if constexpr (std::is_same_v<T, Rational>) {
    return log_rational(x);
  } else {
    if (!(x > 0.0)) throw DomainError("log of a non-positive value");
    return std::log(x);
  }
}

// Per-partition partial sums, indexed [k][rho].
template <class T>
using PartialSums = std::vector<std::vector<Accumulator<T>>>;

template <class T>
class SetEnumerator {
 public:
  SetEnumerator(const std::vector<std::uint64_t>& masks, const std::vector<T>& values, std::size_t m,
                std::size_t max_k)
      : masks_(masks), values_(values), m_(m), max_k_(max_k) {}

  void run_partition(std::size_t first, std::uint64_t anchor, PartialSums<T>& out) const {
    const std::uint64_t support = anchor | masks_[first];
    const auto rho = static_cast<std::size_t>(std::popcount(support));
    if (rho > m_) return;
    out[1][rho].add(values_[first]);
    if (max_k_ > 1) extend(first + 1, support, values_[first], 1, out);
  }

 private:
  void extend(std::size_t start, std::uint64_t support, const T& product, std::size_t k,
              PartialSums<T>& out) const {
    const bool saturated = static_cast<std::size_t>(std::popcount(support)) == m_;
    for (std::size_t q = start; q < masks_.size(); ++q) {
      const std::uint64_t next = support | masks_[q];
      if (saturated ? next != support : static_cast<std::size_t>(std::popcount(next)) > m_) continue;
      T p = product * values_[q];
      out[k + 1][static_cast<std::size_t>(std::popcount(next))].add(p);
      if (k + 1 < max_k_) extend(q + 1, next, p, k + 1, out);
    }
  }

  const std::vector<std::uint64_t>& masks_;
  const std::vector<T>& values_;
  std::size_t m_;
  std::size_t max_k_;
};

void check_kernel_inputs(const WeightMatrix& w, std::size_t m, const AnchorSet& anchor) {
  const std::size_t n = w.size();
  if (n > 64) throw ParameterError("derivative enumeration supports n <= 64");
  if (m < 2 || m > n) throw ParameterError("need 1 < m <= n");
  if (anchor.size() > m) throw ParameterError("anchor larger than m");
  for (Vertex v : anchor.vertices())
    if (v >= n) throw ParameterError("anchor vertex outside the matrix");
}

}  // namespace

template <class T>
T DerivativeVector<T>::g_derivative(std::size_t k) const {
  return g_coeffs.at(k) * factorial<T>(k);
}

template <class T>
T DerivativeVector<T>::f_derivative(std::size_t k) const {
  if (!has_f()) throw ParameterError("f part has not been computed");
  return f_coeffs.at(k) * factorial<T>(k);
}

template <class T>
DerivativeVector<T> DerivativeVector<T>::from_derivatives(const std::vector<T>& g_derivs) {
  DerivativeVector d;
  d.g_coeffs.reserve(g_derivs.size());
  for (std::size_t k = 0; k < g_derivs.size(); ++k) d.g_coeffs.push_back(g_derivs[k] / factorial<T>(k));
  return d;
}

template struct DerivativeVector<Rational>;
template struct DerivativeVector<double>;

template <class T>
DerivativeVector<T> g_derivatives(const WeightMatrix& w, std::size_t m, std::size_t order, const AnchorSet& anchor,
                                  int workers) {
  check_kernel_inputs(w, m, anchor);
  const std::size_t n = w.size();
  const std::size_t r = anchor.size();
  const std::uint64_t anchor_mask = anchor.mask();

  std::vector<T> binom(m + 1, T(0));
  for (std::size_t rho = 0; rho <= m; ++rho)
    binom[rho] = from_rational<T>(Rational(binomial(static_cast<long>(n - rho), static_cast<long>(m - rho))));

  std::vector<std::uint64_t> masks;
  std::vector<T> values;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      T a = w.at<T>(i, j) - T(1);
      if (is_zero(a)) continue;
      masks.push_back((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
      values.push_back(std::move(a));
    }
  }

  // k distinct pairs span at least ceil((1 + sqrt(1 + 8k)) / 2) vertices, so
  // nothing survives beyond C(m, 2).
  const std::size_t max_k = std::min(order, m * (m - 1) / 2);

  DerivativeVector<T> d;
  d.g_coeffs.assign(order + 1, T(0));
  d.g_coeffs[0] = binom[r];
  if (max_k == 0 || masks.empty()) return d;

  const SetEnumerator<T> walker(masks, values, m, max_k);
  const std::size_t parts = masks.size();
  std::vector<PartialSums<T>> partial(parts, PartialSums<T>(max_k + 1, std::vector<Accumulator<T>>(m + 1)));
  const int threads = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t p = 0; p < parts; ++p) walker.run_partition(p, anchor_mask, partial[p]);

  for (std::size_t k = 1; k <= max_k; ++k) {
    Accumulator<T> coeff;
    for (std::size_t rho = r; rho <= m; ++rho) {
      Accumulator<T> s;
      for (std::size_t p = 0; p < parts; ++p) s.merge(partial[p][k][rho]);
      if (!is_zero(binom[rho])) coeff.add(binom[rho] * s.value());
    }
    d.g_coeffs[k] = coeff.value();
  }
  return d;
}

template DerivativeVector<Rational> g_derivatives(const WeightMatrix&, std::size_t, std::size_t, const AnchorSet&, int);
template DerivativeVector<double> g_derivatives(const WeightMatrix&, std::size_t, std::size_t, const AnchorSet&, int);

template <class T>
DerivativeVector<T> f_from_g(DerivativeVector<T> d) {
  const std::size_t l = d.order();
  if (d.g_coeffs.empty() || is_zero(d.g_coeffs[0])) throw DegenerateSystem("g(0) = 0: triangular system is singular");
  const T& g0 = d.g_coeffs[0];
  // Dividing g^{(k)} = sum_j C(k-1, j) g^{(j)} f^{(k-j)} by k! gives
  //   k a_k = sum_{j<k} (k - j) a_j b_{k-j}
  // for a_k = g^{(k)}/k! and b_k = f^{(k)}/k!.
  std::vector<std::size_t> nonzero;
  for (std::size_t j = 1; j <= l; ++j)
    if (!is_zero(d.g_coeffs[j])) nonzero.push_back(j);
  d.f_coeffs.assign(l + 1, T(0));
  for (std::size_t k = 1; k <= l; ++k) {
    Accumulator<T> rhs;
    rhs.add(T(static_cast<long>(k)) * d.g_coeffs[k]);
    for (std::size_t j : nonzero) {
      if (j >= k) break;
      rhs.add(-(T(static_cast<long>(k - j)) * d.g_coeffs[j] * d.f_coeffs[k - j]));
    }
    d.f_coeffs[k] = rhs.value() / (T(static_cast<long>(k)) * g0);
  }
  return d;
}

template DerivativeVector<Rational> f_from_g(DerivativeVector<Rational>);
template DerivativeVector<double> f_from_g(DerivativeVector<double>);

template <class T>
T taylor_sum(const DerivativeVector<T>& d, std::size_t order) {
  if (!d.has_f()) throw ParameterError("f part has not been computed");
  if (order > d.order()) throw ParameterError("truncation order exceeds the computed derivatives");
  Accumulator<T> s;
  for (std::size_t k = 1; k <= order; ++k) s.add(d.f_coeffs[k]);
  return s.value();
}

template Rational taylor_sum(const DerivativeVector<Rational>&, std::size_t);
template double taylor_sum(const DerivativeVector<double>&, std::size_t);

template <class T>
ApproxLog taylor_log_estimate(const DerivativeVector<T>& d, const TruncationPlan& plan) {
  const T sum = taylor_sum(d, plan.order);
  ApproxLog out;
  out.value = log_of(d.g_coeffs[0]) + to_double(sum);
  out.additive_bound = plan.additive_bound;
  if constexpr (std::is_same_v<T, Rational>) out.exact_taylor_sum = sum.get_str();
  return out;
}

template ApproxLog taylor_log_estimate(const DerivativeVector<Rational>&, const TruncationPlan&);
template ApproxLog taylor_log_estimate(const DerivativeVector<double>&, const TruncationPlan&);

double truncation_error_bound(std::size_t m, double beta, std::size_t order) {
  if (!(beta > 1.0)) throw DomainError("truncation bound needs beta > 1");
  const double l = static_cast<double>(order);
  const double pairs = static_cast<double>(m) * static_cast<double>(m - 1);
  return pairs / (2.0 * (l + 1.0) * std::pow(beta, l) * (beta - 1.0));
}

std::size_t order_for_target(std::size_t m, double beta, double eps_add) {
  if (!(eps_add > 0.0)) throw ParameterError("target additive error must be positive");
  constexpr std::size_t kScanLimit = 100'000'000;
  for (std::size_t l = 0; l < kScanLimit; ++l)
    if (truncation_error_bound(m, beta, l) <= eps_add) return l;
  throw ParameterError("target additive error unreachable within the scan limit");
}

TruncationPlan TruncationPlan::budgeted(std::size_t m, double beta, std::size_t order) {
  return {order, beta, truncation_error_bound(m, beta, order)};
}

TruncationPlan TruncationPlan::rigorous(std::size_t m, double beta, double eps_add) {
  return budgeted(m, beta, order_for_target(m, beta, eps_add));
}

ApproxLog estimate_log_restricted_pf(const WeightMatrix& w, std::size_t m, const TruncationPlan& plan,
                                     ScalarMode mode, const AnchorSet& anchor, int workers) {
  if (mode == ScalarMode::exact)
    return taylor_log_estimate(f_from_g(g_derivatives<Rational>(w, m, plan.order, anchor, workers)), plan);
  return taylor_log_estimate(f_from_g(g_derivatives<double>(w, m, plan.order, anchor, workers)), plan);
}

}  // namespace cliquepf
