#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace pcrit {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as bit rows of `words_per_row()` 64-bit words each, so
/// graphs with at most 64 vertices use a single word per row. Build one with
/// GraphBuilder or Graph::from_edges.
class Graph {
 public:
  Graph() = default;

  /// Throws Error(invalid_argument) on loops, duplicate edges or ids out of
  /// range.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }
  int words_per_row() const noexcept { return words_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  bool has_edge(Edge e) const noexcept { return adjacent(e.u, e.v); }
  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  int degree(Vertex v) const noexcept;
  int min_degree() const noexcept;
  int max_degree() const noexcept;
  std::vector<Vertex> neighbors(Vertex v) const;
  /// Edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;  // nonincreasing

  bool is_leaf(Vertex v) const noexcept { return degree(v) == 1; }
  bool is_support(Vertex v) const noexcept;
  int leaf_neighbor_count(Vertex v) const noexcept;
  bool is_simplicial(Vertex v) const noexcept;
  bool is_complete() const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  friend class GraphBuilder;

  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  /// Returns the id of the new vertex.
  Vertex add_vertex();
  /// Throws on loops, out-of-range ids and duplicate edges.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& add_clique(std::span<const Vertex> vertices);
  bool adjacent(Vertex u, Vertex v) const;
  int order() const noexcept { return n_; }

  Graph build() const;

 private:
  int n_;
  std::vector<Edge> edges_;
};

/// A graph obtained by deleting something, together with the map from the
/// new vertex ids to the ids of the source graph.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;  // original[new_id] = old_id
};

/// G - e. Vertex ids are unchanged. Throws Error(missing_edge).
Subgraph delete_edge(const Graph& g, Edge e);
/// G - v. Ids above v shift down by one. Throws Error(missing_vertex).
Subgraph delete_vertex(const Graph& g, Vertex v);
/// G - S for a set of vertices, ids compacted in increasing order.
Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed);
/// Subgraph induced by `kept` (ids are renumbered in the given order).
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> kept);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

}  // namespace pcrit
