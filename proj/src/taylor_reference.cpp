#include <cliquepf/errors.hpp>
#include <cliquepf/taylor.hpp>

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace cliquepf {
namespace {

template <class T>
struct TupleWalk {
  std::size_t n;
  std::size_t m;
  std::size_t k;
  std::uint64_t anchor;
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs;
  const std::vector<T>& excess;  // w_ij - 1 per pair
  const std::vector<T>& binom;   // C(n - rho, m - rho), zero past m
  std::vector<std::uint8_t> used;
  T total = T(0);

  void step(std::size_t depth, std::uint64_t support, const T& product) {
    if (depth == k) {
      total += binom[static_cast<std::size_t>(std::popcount(support))] * product;
      return;
    }
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      if (used[q]) continue;
      used[q] = 1;
      const auto [i, j] = pairs[q];
      step(depth + 1, support | (std::uint64_t{1} << i) | (std::uint64_t{1} << j), product * excess[q]);
      used[q] = 0;
    }
  }
};

}  // namespace

template <class T>
DerivativeVector<T> g_derivatives_reference(const WeightMatrix& w, std::size_t m, std::size_t order,
                                            const AnchorSet& anchor) {
  const std::size_t n = w.size();
  if (n > 64) throw ParameterError("reference enumeration supports n <= 64");
  if (m < 2 || m > n) throw ParameterError("need 1 < m <= n");
  if (anchor.size() > m) throw ParameterError("anchor larger than m");

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<T> excess;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      pairs.emplace_back(i, j);
      excess.push_back(w.at<T>(i, j) - T(1));
    }
  std::vector<T> binom(n + 1, T(0));
  for (std::size_t rho = 0; rho <= n; ++rho)
    binom[rho] = from_rational<T>(Rational(binomial(static_cast<long>(n - rho), static_cast<long>(m) - static_cast<long>(rho))));

  std::vector<T> derivs(order + 1, T(0));
  derivs[0] = binom[anchor.size()];
  for (std::size_t k = 1; k <= order && k <= pairs.size(); ++k) {
    TupleWalk<T> walk{n, m, k, anchor.mask(), pairs, excess, binom, std::vector<std::uint8_t>(pairs.size(), 0)};
    walk.step(0, anchor.mask(), T(1));
    derivs[k] = walk.total;
  }
  return DerivativeVector<T>::from_derivatives(derivs);
}

template DerivativeVector<Rational> g_derivatives_reference(const WeightMatrix&, std::size_t, std::size_t,
                                                            const AnchorSet&);
template DerivativeVector<double> g_derivatives_reference(const WeightMatrix&, std::size_t, std::size_t,
                                                          const AnchorSet&);

}  // namespace cliquepf
