#include <cliquepf/errors.hpp>
#include <cliquepf/graph.hpp>

#include <algorithm>
#include <string>

namespace cliquepf {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n), adjacency_(n * n, 0) {
  if (n == 0) throw ParseError("graph must have at least one vertex");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw ParseError("edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "} has an endpoint outside [1," +
                       std::to_string(n) + "]");
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u + 1));
    if (u > v) std::swap(u, v);
    if (adjacency_[u * n + v])
      throw ParseError("duplicate edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "}");
    adjacency_[u * n + v] = adjacency_[v * n + u] = 1;
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph Graph::empty(std::size_t n) { return Graph(n, std::span<const Edge>{}); }

bool Graph::has_edge(Vertex u, Vertex v) const { return u < n_ && v < n_ && adjacency_[u * n_ + v] != 0; }

std::size_t Graph::edges_within(std::span<const Vertex> subset) const {
  std::size_t count = 0;
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b) count += adjacency_[subset[a] * n_ + subset[b]];
  return count;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (auto [u, v] : edges_) e.emplace_back(perm[u], perm[v]);
  return Graph(n_, e);
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  std::vector<Edge> e = edges_;
  e.emplace_back(u, v);
  return Graph(n_, e);
}

}  // namespace cliquepf
