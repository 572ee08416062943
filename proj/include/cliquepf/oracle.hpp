#pragma once

#include <cliquepf/errors.hpp>
#include <cliquepf/graph.hpp>
#include <cliquepf/model.hpp>
#include <cliquepf/scalar.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cliquepf {

inline constexpr std::size_t kDefaultOracleCap = 20;

void check_oracle_cap(std::size_t n, std::size_t cap);

namespace detail {

template <class T, class WeightFn>
void subset_walk(const std::vector<Vertex>& free, std::size_t start, std::size_t need,
                 std::vector<Vertex>& chosen, const T& prefix, WeightFn& weight, T& total) {
  if (need == 0) {
    total += prefix;
    return;
  }
  for (std::size_t i = start; i + need <= free.size(); ++i) {
    T p = prefix;
    for (Vertex u : chosen) p *= weight(u, free[i]);
    chosen.push_back(free[i]);
    subset_walk(free, i + 1, need - 1, chosen, p, weight, total);
    chosen.pop_back();
  }
}

}  // namespace detail

/// Sum over all m-subsets S containing `anchor` of prod_{i<j in S} weight(i, j).
///
/// Subsets are visited in lexicographic order with the product of the
/// current prefix carried down, so adding a vertex costs one multiplication
/// per vertex already chosen. The top level (first free vertex) is split
/// across OpenMP threads and reduced in index order.
template <class T, class WeightFn>
T enumerate_subset_products(std::size_t n, std::size_t m, const std::vector<Vertex>& anchor,
                            WeightFn weight) {
  if (anchor.size() > m) return T(0);
  std::vector<std::uint8_t> fixed(n, 0);
  for (Vertex v : anchor) fixed[v] = 1;
  T base(1);
  for (std::size_t a = 0; a < anchor.size(); ++a)
    for (std::size_t b = a + 1; b < anchor.size(); ++b) base *= weight(anchor[a], anchor[b]);
  const std::size_t need = m - anchor.size();
  if (need == 0) return base;

  std::vector<Vertex> free;
  for (Vertex v = 0; v < n; ++v)
    if (!fixed[v]) free.push_back(v);
  if (free.size() < need) return T(0);

  const std::size_t tops = free.size() - need + 1;
  std::vector<T> partial(tops, T(0));
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < tops; ++i) {
    std::vector<Vertex> chosen(anchor.begin(), anchor.end());
    T p = base;
    for (Vertex u : chosen) p *= weight(u, free[i]);
    chosen.push_back(free[i]);
    detail::subset_walk(free, i + 1, need - 1, chosen, p, weight, partial[i]);
  }
  T total(0);
  for (const T& x : partial) total += x;
  return total;
}

/// Exact P_m(W). Throws CapExceeded if n > cap.
Rational exact_partition_function(const WeightMatrix& w, std::size_t m, std::size_t cap = kDefaultOracleCap);

/// Exact P_Omega(W): the same sum restricted to subsets containing the anchor.
Rational exact_restricted_pf(const WeightMatrix& w, std::size_t m, const AnchorSet& anchor,
                             std::size_t cap = kDefaultOracleCap);

/// Exact g(t) = P_Omega(J + t(W - J)) at rational t.
Rational exact_g_of_t(const WeightMatrix& w, std::size_t m, const Rational& t, const AnchorSet& anchor = {},
                      std::size_t cap = kDefaultOracleCap);

/// Number of m-subsets spanning exactly e edges, e = 0..m(m-1)/2.
struct DensityHistogram {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
  /// Exact P_m(W) recovered from the histogram: sum_e count(e)(1+delta)^e (1-delta)^{M-e}.
  Rational partition_function(const Rational& delta) const;
  /// ln Density_m(G) = ln sum_e count(e) w(e/M).
  double log_density(const AlgorithmParams& p) const;
  /// Number of subsets with density >= sigma (compared exactly as e >= sigma*M).
  std::uint64_t count_at_least(const Rational& sigma) const;
};

DensityHistogram density_histogram(const Graph& g, std::size_t m, std::size_t cap = kDefaultOracleCap);

/// Exact ln Density_m(G) via the prefactor formula e^{gamma m}(1+delta)^{-M} P_m(W).
double exact_log_density(const Graph& g, const AlgorithmParams& p, std::size_t cap = kDefaultOracleCap);

}  // namespace cliquepf
