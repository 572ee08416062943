#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cliquepf {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) and sorted. The constructor rejects
/// loops, duplicates and out-of-range endpoints with ParseError, so every
/// Graph value satisfies those invariants.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::span<const Edge> edges);

  static Graph complete(std::size_t n);
  static Graph empty(std::size_t n);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Number of edges with both endpoints in `subset`.
  std::size_t edges_within(std::span<const Vertex> subset) const;

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  Graph with_edge(Vertex u, Vertex v) const;

  bool operator==(const Graph& other) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adjacency_;
};

}  // namespace cliquepf
