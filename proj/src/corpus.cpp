#include "pcrit/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <string>
#include <unordered_set>

#include "pcrit/error.hpp"
#include "pcrit/families.hpp"
#include "pcrit/metrics.hpp"

namespace pcrit {

namespace {

// Stable colour refinement; returns the cells in an isomorphism-invariant order.
std::vector<std::vector<Vertex>> refine(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  for (;;) {
    std::vector<std::pair<std::vector<int>, Vertex>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> s{color[v]};
      std::vector<int> nb;
      for (Vertex w : g.neighbors(v)) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::pair<std::vector<int>, Vertex>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(n);
    int classes = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++classes;
      next[sorted[i].second] = classes;
    }
    std::vector<int> distinct(color);
    std::sort(distinct.begin(), distinct.end());
    const long before = std::unique(distinct.begin(), distinct.end()) - distinct.begin();
    color = std::move(next);
    if (n == 0 || classes + 1 == before) break;
  }
  std::map<int, std::vector<Vertex>> cells;
  for (Vertex v = 0; v < n; ++v) cells[color[v]].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& [c, vs] : cells) out.push_back(std::move(vs));
  return out;
}

struct CanonSearch {
  const Graph& g;
  int n;
  int total_bits;
  std::vector<int> cell_at;  // position -> cell index
  std::vector<std::vector<Vertex>> cells;
  std::vector<Vertex> order;
  std::vector<char> used;
  std::uint64_t best = 0;
  bool have = false;
  std::vector<Vertex> best_order;

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {
    if (n > 11) throw Error(Errc::too_large, "canonical forms are limited to 11 vertices");
    total_bits = n * (n - 1) / 2;
    cells = refine(g);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (std::size_t k = 0; k < cells[c].size(); ++k) cell_at.push_back(static_cast<int>(c));
    used.assign(n, 0);
    dfs(0, 0);
  }

  // Pairs are ordered (0,1), (0,2), (1,2), (0,3), ... with the first pair in
  // the most significant bit, so placing position i fixes the next i bits.
  void dfs(int i, std::uint64_t cur) {
    if (have && i > 1) {
      const int fixed = i * (i - 1) / 2;
      const std::uint64_t mask = fixed == 0 ? 0 : (~std::uint64_t{0} << (total_bits - fixed));
      if ((cur & mask) < (best & mask)) return;
    }
    if (i == n) {
      if (!have || cur > best) {
        best = cur;
        best_order = order;
        have = true;
      }
      return;
    }
    for (Vertex v : cells[cell_at[i]]) {
      if (used[v]) continue;
      std::uint64_t next = cur;
      const int base = i * (i - 1) / 2;
      for (int j = 0; j < i; ++j)
        if (g.adjacent(order[j], v)) next |= std::uint64_t{1} << (total_bits - 1 - (base + j));
      used[v] = 1;
      order.push_back(v);
      dfs(i + 1, next);
      order.pop_back();
      used[v] = 0;
    }
  }
};

int parse_bound(std::string_view text, std::string_view name) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1)
    throw Error(Errc::unknown_name, "unknown corpus: " + std::string(name));
  return value;
}

void limit(int n, int max, std::string_view name) {
  if (n > max)
    throw Error(Errc::too_large,
                std::string(name) + ": size limit is " + std::to_string(max) + " vertices");
}

}  // namespace

std::uint64_t canonical_certificate(const Graph& g) { return CanonSearch(g).best; }

Graph canonical_form(const Graph& g) {
  CanonSearch s(g);
  std::vector<Vertex> pos(g.order());
  for (int i = 0; i < g.order(); ++i) pos[s.best_order[i]] = i;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(pos[e.u], pos[e.v]);
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(g.order(), edges);
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "negative vertex count");
  if (n > 8) throw Error(Errc::too_large, "graph enumeration is limited to 8 vertices");
  std::vector<Graph> level{Graph::from_edges(0, {})};
  for (int m = 1; m <= n; ++m) {
    std::vector<std::pair<std::uint64_t, Graph>> found;
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& h : level) {
      const std::vector<Edge> base = h.edges();
      for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
        std::vector<Edge> edges = base;
        for (Vertex v = 0; v < m - 1; ++v)
          if (mask >> v & 1u) edges.emplace_back(v, m - 1);
        Graph g = canonical_form(Graph::from_edges(m, edges));
        const std::uint64_t cert = canonical_certificate(g);
        if (seen.insert(cert).second) found.emplace_back(cert, std::move(g));
      }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [cert, g] : found) level.push_back(std::move(g));
  }
  return level;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : enumerate_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> builtin_corpus(std::string_view name) {
  auto starts = [&](std::string_view p) { return name.substr(0, p.size()) == p; };
  auto ends = [&](std::string_view s) {
    return name.size() >= s.size() && name.substr(name.size() - s.size()) == s;
  };
  std::vector<Graph> out;
  auto append = [&](std::vector<Graph> part) {
    for (Graph& g : part) out.push_back(std::move(g));
  };

  if (name == "class-c") return enumerate_class_C(8, 2);
  if (starts("connected-le") && ends("-diam2")) {
    const int n = parse_bound(name.substr(12, name.size() - 12 - 6), name);
    limit(n, 8, name);
    for (int m = 1; m <= n; ++m)
      for (Graph& g : enumerate_connected_graphs(m))
        if (diameter(g) == 2) out.push_back(std::move(g));
    return out;
  }
  if (starts("connected-le")) {
    const int n = parse_bound(name.substr(12), name);
    limit(n, 8, name);
    for (int m = 1; m <= n; ++m) append(enumerate_connected_graphs(m));
    return out;
  }
  if (starts("all-le")) {
    const int n = parse_bound(name.substr(6), name);
    limit(n, 8, name);
    for (int m = 1; m <= n; ++m) append(enumerate_graphs(m));
    return out;
  }
  if (starts("trees-le")) {
    const int n = parse_bound(name.substr(8), name);
    limit(n, 13, name);
    for (int m = 1; m <= n; ++m) append(enumerate_trees(m));
    return out;
  }
  if (starts("caterpillars-le")) {
    const int n = parse_bound(name.substr(15), name);
    limit(n, 22, name);
    for (int m = 1; m <= n; ++m) append(enumerate_caterpillars(m));
    return out;
  }
  if (starts("block-diam2-le")) {
    const int n = parse_bound(name.substr(14), name);
    limit(n, 16, name);
    return enumerate_block_graphs_diam2(n);
  }
  if (starts("block-diam3-le")) {
    const int n = parse_bound(name.substr(14), name);
    limit(n, 16, name);
    for (LabeledGraph& lg : enumerate_block_graphs_diam3(n)) out.push_back(std::move(lg.graph));
    return out;
  }
  throw Error(Errc::unknown_name, "unknown corpus: " + std::string(name));
}

}  // namespace pcrit
