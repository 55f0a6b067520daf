#include "pcrit/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "pcrit/error.hpp"

namespace pcrit {

namespace {

int word_count(int n) { return (n + 63) / 64; }

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  return b.build();
}

int Graph::degree(Vertex v) const noexcept {
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

int Graph::min_degree() const noexcept {
  int best = n_ == 0 ? 0 : n_;
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

bool Graph::is_support(Vertex v) const noexcept { return leaf_neighbor_count(v) > 0; }

int Graph::leaf_neighbor_count(Vertex v) const noexcept {
  int count = 0;
  for (Vertex w = 0; w < n_; ++w)
    if (adjacent(v, w) && degree(w) == 1) ++count;
  return count;
}

bool Graph::is_simplicial(Vertex v) const noexcept {
  auto nb = neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!adjacent(nb[i], nb[j])) return false;
  return true;
}

bool Graph::is_complete() const noexcept {
  return 2 * static_cast<long>(m_) == static_cast<long>(n_) * (n_ - 1);
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
  if (n < 0) throw Error(Errc::invalid_argument, "negative vertex count");
}

Vertex GraphBuilder::add_vertex() { return n_++; }

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw Error(Errc::invalid_argument,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  if (u == v) throw Error(Errc::invalid_argument, "self-loop at " + std::to_string(u));
  edges_.emplace_back(u, v);
  return *this;
}

GraphBuilder& GraphBuilder::add_clique(std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) add_edge(vertices[i], vertices[j]);
  return *this;
}

bool GraphBuilder::adjacent(Vertex u, Vertex v) const {
  Edge e(u, v);
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

Graph GraphBuilder::build() const {
  Graph g;
  g.n_ = n_;
  g.words_ = word_count(n_);
  g.bits_.assign(static_cast<std::size_t>(n_) * g.words_, 0);
  for (const Edge& e : edges_) {
    auto& uw = g.bits_[static_cast<std::size_t>(e.u) * g.words_ + (e.v >> 6)];
    std::uint64_t mask = std::uint64_t{1} << (e.v & 63);
    if (uw & mask)
      throw Error(Errc::invalid_argument, "duplicate edge (" + std::to_string(e.u) + "," +
                                              std::to_string(e.v) + ")");
    uw |= mask;
    g.bits_[static_cast<std::size_t>(e.v) * g.words_ + (e.u >> 6)] |= std::uint64_t{1}
                                                                      << (e.u & 63);
    ++g.m_;
  }
  return g;
}

Subgraph delete_edge(const Graph& g, Edge e) {
  if (!g.contains(e.u) || !g.contains(e.v) || !g.has_edge(e))
    throw Error(Errc::missing_edge,
                "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in graph");
  std::vector<Edge> kept;
  for (const Edge& f : g.edges())
    if (f != e) kept.push_back(f);
  Subgraph out{Graph::from_edges(g.order(), kept), {}};
  out.original.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out.original[v] = v;
  return out;
}

Subgraph delete_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw Error(Errc::missing_vertex, "vertex " + std::to_string(v) + " not in graph");
  const Vertex removed[] = {v};
  return delete_vertices(g, removed);
}

Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> drop(g.order(), 0);
  for (Vertex v : removed) {
    if (!g.contains(v))
      throw Error(Errc::missing_vertex, "vertex " + std::to_string(v) + " not in graph");
    drop[v] = 1;
  }
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!drop[v]) kept.push_back(v);
  return induced_subgraph(g, kept);
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> kept) {
  std::vector<Vertex> index(g.order(), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (!g.contains(kept[i]))
      throw Error(Errc::missing_vertex, "vertex " + std::to_string(kept[i]) + " not in graph");
    index[kept[i]] = static_cast<Vertex>(i);
  }
  GraphBuilder b(static_cast<int>(kept.size()));
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (Vertex w : g.neighbors(kept[i]))
      if (index[w] > static_cast<Vertex>(i)) b.add_edge(static_cast<Vertex>(i), index[w]);
  return {b.build(), std::vector<Vertex>(kept.begin(), kept.end())};
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    comps.emplace_back();
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comps.back().push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

}  // namespace pcrit
