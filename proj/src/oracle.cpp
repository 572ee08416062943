#include <cliquepf/errors.hpp>
#include <cliquepf/oracle.hpp>

#include <cmath>
#include <string>

namespace cliquepf {

void check_oracle_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw CapExceeded("exhaustive enumeration capped at n = " + std::to_string(cap) + " (got n = " +
                      std::to_string(n) + ")");
}

Rational exact_restricted_pf(const WeightMatrix& w, std::size_t m, const AnchorSet& anchor, std::size_t cap) {
  check_oracle_cap(w.size(), cap);
  if (anchor.size() > m) throw ParameterError("anchor larger than m");
  return enumerate_subset_products<Rational>(w.size(), m, anchor.vertices(),
                                             [&w](Vertex i, Vertex j) -> const Rational& { return w.exact(i, j); });
}

Rational exact_partition_function(const WeightMatrix& w, std::size_t m, std::size_t cap) {
  return exact_restricted_pf(w, m, AnchorSet{}, cap);
}

Rational exact_g_of_t(const WeightMatrix& w, std::size_t m, const Rational& t, const AnchorSet& anchor,
                      std::size_t cap) {
  check_oracle_cap(w.size(), cap);
  if (anchor.size() > m) throw ParameterError("anchor larger than m");
  const std::size_t n = w.size();
  std::vector<Rational> line(n * n, Rational(1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) line[i * n + j] = 1 + t * (w.exact(i, j) - 1);
  return enumerate_subset_products<Rational>(n, m, anchor.vertices(),
                                             [&line, n](Vertex i, Vertex j) -> const Rational& { return line[i * n + j]; });
}

std::uint64_t DensityHistogram::total() const {
  std::uint64_t s = 0;
  for (auto c : counts) s += c;
  return s;
}

Rational DensityHistogram::partition_function(const Rational& delta) const {
  const std::size_t pairs = m * (m - 1) / 2;
  const Rational up = 1 + delta;
  const Rational down = 1 - delta;
  Rational total = 0;
  for (std::size_t e = 0; e <= pairs; ++e) {
    if (counts[e] == 0) continue;
    Rational term(static_cast<unsigned long>(counts[e]));
    Rational pu, pd;
    mpz_pow_ui(pu.get_num_mpz_t(), up.get_num_mpz_t(), e);
    mpz_pow_ui(pu.get_den_mpz_t(), up.get_den_mpz_t(), e);
    mpz_pow_ui(pd.get_num_mpz_t(), down.get_num_mpz_t(), pairs - e);
    mpz_pow_ui(pd.get_den_mpz_t(), down.get_den_mpz_t(), pairs - e);
    total += term * pu * pd;
  }
  return total;
}

double DensityHistogram::log_density(const AlgorithmParams& p) const {
  const std::size_t pairs = m * (m - 1) / 2;
  // log-sum-exp over the occupied bins.
  double peak = -INFINITY;
  std::vector<double> logs;
  for (std::size_t e = 0; e <= pairs; ++e) {
    if (counts[e] == 0) continue;
    const double t = static_cast<double>(e) / static_cast<double>(pairs);
    logs.push_back(std::log(static_cast<double>(counts[e])) + log_weight_curve(t, p));
    peak = std::max(peak, logs.back());
  }
  double s = 0.0;
  for (double x : logs) s += std::exp(x - peak);
  return peak + std::log(s);
}

std::uint64_t DensityHistogram::count_at_least(const Rational& sigma) const {
  const std::size_t pairs = m * (m - 1) / 2;
  std::uint64_t c = 0;
  for (std::size_t e = 0; e <= pairs; ++e)
    if (Rational(static_cast<long>(e)) >= sigma * Rational(static_cast<long>(pairs))) c += counts[e];
  return c;
}

DensityHistogram density_histogram(const Graph& g, std::size_t m, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  check_oracle_cap(n, cap);
  if (m < 2 || m > n) throw ParameterError("need 1 < m <= n");
  DensityHistogram h{n, m, std::vector<std::uint64_t>(m * (m - 1) / 2 + 1, 0)};
  // Lexicographic walk carrying the running edge count.
  std::vector<Vertex> chosen;
  auto walk = [&](auto&& self, Vertex start, std::size_t edges) -> void {
    if (chosen.size() == m) {
      ++h.counts[edges];
      return;
    }
    for (Vertex v = start; v + (m - chosen.size()) <= n; ++v) {
      std::size_t added = 0;
      for (Vertex u : chosen) added += g.has_edge(u, v) ? 1 : 0;
      chosen.push_back(v);
      self(self, v + 1, edges + added);
      chosen.pop_back();
    }
  };
  walk(walk, 0, 0);
  return h;
}

double exact_log_density(const Graph& g, const AlgorithmParams& p, std::size_t cap) {
  const Rational pf = exact_partition_function(weights_from_graph(g, p), p.m(), cap);
  const double gamma = p.gamma().get_d();
  return gamma * static_cast<double>(p.m()) - static_cast<double>(p.pair_count()) * std::log1p(p.delta().get_d()) +
         log_rational(pf);
}

}  // namespace cliquepf
