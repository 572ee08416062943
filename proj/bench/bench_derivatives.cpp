// Compares the serial ordered-tuple reference against the parallel
// set-enumeration kernel for g^{(k)}(0), and times the kernel across orders.
#include <cliquepf/graph.hpp>
#include <cliquepf/model.hpp>
#include <cliquepf/taylor.hpp>

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

using namespace cliquepf;

namespace {

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph(n, e);
}

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  std::printf("%-4s %-3s %-3s %-12s %-12s %-12s\n", "n", "m", "l", "reference_s", "kernel_1t_s", "kernel_mt_s");
  for (std::size_t n : {6, 8, 10, 12}) {
    for (std::size_t m : {3, 4}) {
      const Graph g = random_graph(n, 0.5, 42 + n);
      const AlgorithmParams p(m, n);
      const WeightMatrix w = weights_from_graph(g, p);
      for (std::size_t l : {1, 2, 3}) {
        char ref[16] = "skipped";
        if (n <= 10)
          std::snprintf(ref, sizeof ref, "%.6f", seconds([&] { (void)g_derivatives_reference<double>(w, m, l); }));
        const double one = seconds([&] { (void)g_derivatives<double>(w, m, l, {}, 1); });
        const double many = seconds([&] { (void)g_derivatives<double>(w, m, l, {}, omp_get_max_threads()); });
        std::printf("%-4zu %-3zu %-3zu %-12s %-12.6f %-12.6f\n", n, m, l, ref, one, many);
      }
    }
  }
  // Full-degree enumeration, where the n^{O(l)} growth shows.
  std::printf("\nfull degree (l = C(m,2)), float mode, 1 thread\n");
  for (std::size_t n : {8, 10, 12, 14}) {
    const std::size_t m = 5;
    const Graph g = random_graph(n, 0.5, 7 + n);
    const AlgorithmParams p(m, n);
    const WeightMatrix w = weights_from_graph(g, p);
    const double t = seconds([&] { (void)g_derivatives<double>(w, m, p.pair_count(), {}, 1); });
    std::printf("n=%-3zu m=%zu l=%zu  %.4f s\n", n, m, p.pair_count(), t);
  }
}
