#include "pcrit/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "pcrit/error.hpp"
#include "pcrit/metrics.hpp"

namespace pcrit {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::invalid_argument, what);
}

std::vector<Vertex> range(Vertex first, int count) {
  std::vector<Vertex> out(count);
  std::iota(out.begin(), out.end(), first);
  return out;
}

// Adds `count` leaves to `owner` and returns nothing; ids are taken in order.
void add_leaves(GraphBuilder& b, Vertex owner, int count) {
  for (int i = 0; i < count; ++i) b.add_edge(owner, b.add_vertex());
}

LabeledGraph two_cliques(int na, int nb, int leaves) {
  GraphBuilder b(na + nb);
  b.add_clique(range(0, na));
  b.add_clique(range(na, nb));
  b.add_edge(0, na);
  for (Vertex v = 1; v < na; ++v) add_leaves(b, v, leaves);
  for (Vertex v = na + 1; v < na + nb; ++v) add_leaves(b, v, leaves);
  LabeledGraph out{b.build(), {{"a", 0}, {"b", na}}, {}};
  out.edges["bridge"] = Edge(0, na);
  out.edges["e"] = Edge(0, na);
  return out;
}

// AHU encoding of the subtree below v.
std::string encode(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(v))
    if (w != parent) kids.push_back(encode(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

}  // namespace

BasicKind basic_kind_from_string(std::string_view name) {
  if (name == "path") return BasicKind::path;
  if (name == "cycle") return BasicKind::cycle;
  if (name == "complete") return BasicKind::complete;
  if (name == "star") return BasicKind::star;
  throw Error(Errc::unknown_name, "unknown basic graph kind: " + std::string(name));
}

LabeledGraph gen_basic(BasicKind kind, int n) {
  require(n >= 1, "n must be at least 1");
  LabeledGraph out;
  switch (kind) {
    case BasicKind::path: {
      GraphBuilder b(n);
      for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
      out.graph = b.build();
      out.vertices = {{"start", 0}, {"end", n - 1}};
      break;
    }
    case BasicKind::cycle: {
      require(n >= 3, "cycle needs at least 3 vertices");
      GraphBuilder b(n);
      for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
      out.graph = b.build();
      break;
    }
    case BasicKind::complete: {
      GraphBuilder b(n);
      b.add_clique(range(0, n));
      out.graph = b.build();
      break;
    }
    case BasicKind::star: {
      GraphBuilder b(1);
      add_leaves(b, 0, n);
      out.graph = b.build();
      out.vertices = {{"hub", 0}};
      break;
    }
  }
  return out;
}

LabeledGraph gen_sharpness_family(int n) {
  require(n >= 2, "sharpness family needs n >= 2");
  LabeledGraph out = two_cliques(n, n, 2 * n - 2);
  out.edges.erase("e");
  return out;
}

LabeledGraph gen_realization(int k, int n) {
  require(k >= 3, "realization needs k >= 3");
  require(2 * n >= k + 1 && n <= k, "realization needs ceil((k+1)/2) <= n <= k");
  if (n == k) {
    GraphBuilder b(k);
    b.add_clique(range(0, k));
    Vertex leaf = b.add_vertex();
    b.add_edge(0, leaf);
    LabeledGraph out{b.build(), {{"a", 0}, {"leaf", leaf}}, {}};
    out.edges["e"] = Edge(0, leaf);
    return out;
  }
  return two_cliques(n, k + 1 - n, k - 1);
}

LabeledGraph gen_net() {
  int counts[] = {1, 1, 1};
  LabeledGraph out = gen_class_C(3, counts);
  out.vertices.clear();
  for (int i = 0; i < 3; ++i) {
    out.vertices["b" + std::to_string(i + 1)] = i;
    out.vertices["a" + std::to_string(i + 1)] = 3 + i;
  }
  return out;
}

LabeledGraph gen_decorated_c4() {
  int counts[] = {1, 1, 0, 0};
  LabeledGraph out = gen_class_C(4, counts);
  out.vertices = {{"a", 0}, {"b", 1}, {"x", 2}, {"y", 3}, {"a1", 4}, {"b1", 5}};
  out.edges = {{"ab", Edge(0, 1)}};
  return out;
}

LabeledGraph gen_decorated_c8() {
  int counts[] = {1, 0, 0, 1, 0, 0, 0, 0};
  LabeledGraph out = gen_class_C(8, counts);
  out.edges["e"] = Edge(5, 6);
  return out;
}

LabeledGraph gen_class_C(int cycle_len, std::span<const int> leaf_counts) {
  require(cycle_len >= 3, "class C cycle needs at least 3 vertices");
  require(static_cast<int>(leaf_counts.size()) == cycle_len,
          "leaf_counts must have one entry per cycle vertex");
  GraphBuilder b(cycle_len);
  LabeledGraph out;
  for (Vertex v = 0; v < cycle_len; ++v) {
    b.add_edge(v, (v + 1) % cycle_len);
    out.vertices["cycle[" + std::to_string(v) + "]"] = v;
  }
  for (Vertex v = 0; v < cycle_len; ++v) {
    require(leaf_counts[v] >= 0, "negative leaf count");
    add_leaves(b, v, leaf_counts[v]);
  }
  out.graph = b.build();
  return out;
}

std::string tree_canonical_form(const Graph& t) {
  if (!is_tree(t)) throw Error(Errc::precondition, "not a tree");
  const MetricSummary m = metric_summary(t);
  if (m.center.size() == 1) return encode(t, m.center[0], -1);
  // Two adjacent centers: encode both halves and order them.
  std::string x = encode(t, m.center[0], m.center[1]);
  std::string y = encode(t, m.center[1], m.center[0]);
  if (y < x) std::swap(x, y);
  return "[" + x + y + "]";
}

std::vector<Graph> enumerate_trees(int n) {
  require(n >= 1, "trees need n >= 1");
  if (n > 13) throw Error(Errc::too_large, "tree enumeration is limited to 13 vertices");
  std::vector<Graph> level{Graph::from_edges(1, {})};
  for (int m = 2; m <= n; ++m) {
    std::vector<Graph> next;
    std::set<std::string> seen;
    for (const Graph& t : level)
      for (Vertex v = 0; v < t.order(); ++v) {
        std::vector<Edge> edges = t.edges();
        edges.emplace_back(v, t.order());
        Graph g = Graph::from_edges(m, edges);
        if (seen.insert(tree_canonical_form(g)).second) next.push_back(std::move(g));
      }
    level = std::move(next);
  }
  return level;
}

Graph make_caterpillar(std::span<const int> leaves) {
  const int s = static_cast<int>(leaves.size());
  require(s >= 1, "caterpillar needs a spine");
  GraphBuilder b(s);
  for (Vertex v = 0; v + 1 < s; ++v) b.add_edge(v, v + 1);
  for (Vertex v = 0; v < s; ++v) {
    require(leaves[v] >= 0, "negative leaf count");
    add_leaves(b, v, leaves[v]);
  }
  return b.build();
}

std::vector<Graph> enumerate_caterpillars(int n) {
  require(n >= 1, "caterpillars need n >= 1");
  if (n > 22) throw Error(Errc::too_large, "caterpillar enumeration is limited to 22 vertices");
  if (n <= 2) return {gen_basic(BasicKind::path, n).graph};
  std::vector<Graph> out;
  std::set<std::string> seen;
  // Spine = the non-leaf vertices, so both spine ends carry a leaf.
  for (int s = 1; s <= n - 2; ++s) {
    std::vector<int> leaves(s, 0);
    const int spare = n - s - (s == 1 ? 1 : 2);
    if (spare < 0) continue;
    std::function<void(int, int)> place = [&](int i, int left) {
      if (i == s) {
        if (left) return;
        std::vector<int> l = leaves;
        l.front() += 1;
        if (s > 1) l.back() += 1;
        // A reversed spine gives the same tree.
        std::vector<int> r(l.rbegin(), l.rend());
        if (r < l) return;
        Graph g = make_caterpillar(l);
        if (seen.insert(tree_canonical_form(g)).second) out.push_back(std::move(g));
        return;
      }
      for (int c = 0; c <= left; ++c) {
        leaves[i] = c;
        place(i + 1, left - c);
      }
      leaves[i] = 0;
    };
    place(0, spare);
  }
  return out;
}

LabeledGraph make_block_graph(const std::vector<std::vector<int>>& side) {
  const int b = static_cast<int>(side.size());
  require(b >= 1, "central clique must be nonempty");
  GraphBuilder gb(b);
  gb.add_clique(range(0, b));
  LabeledGraph out;
  for (Vertex x = 0; x < b; ++x) {
    out.vertices["B" + std::to_string(x)] = x;
    for (int s : side[x]) {
      require(s >= 2, "side blocks need order at least 2");
      std::vector<Vertex> block{x};
      for (int i = 1; i < s; ++i) block.push_back(gb.add_vertex());
      gb.add_clique(block);
    }
  }
  out.graph = gb.build();
  return out;
}

std::vector<LabeledGraph> enumerate_block_graphs_diam3(int max_n) {
  std::vector<LabeledGraph> out;
  // Side-block multisets, as nonincreasing vectors, with their extra vertices.
  std::vector<std::vector<int>> multisets;
  std::function<void(std::vector<int>&, int, int)> grow = [&](std::vector<int>& cur, int cap,
                                                               int budget) {
    multisets.push_back(cur);
    for (int s = std::min(cap, budget + 1); s >= 2; --s) {
      cur.push_back(s);
      grow(cur, s, budget - (s - 1));
      cur.pop_back();
    }
  };
  std::vector<int> empty;
  grow(empty, max_n, max_n);
  auto extra = [](const std::vector<int>& m) {
    int e = 0;
    for (int s : m) e += s - 1;
    return e;
  };
  // Order multisets so that per-vertex choices can be taken nonincreasing.
  std::sort(multisets.begin(), multisets.end(), std::greater<>());

  for (int b = 2; b <= max_n - 2; ++b) {
    std::vector<int> pick;  // indices into multisets, nondecreasing
    std::function<void(int, int)> choose = [&](int from, int budget) {
      if (static_cast<int>(pick.size()) == b) {
        int loaded = 0;
        for (int i : pick) loaded += !multisets[i].empty();
        if (loaded < 2) return;
        std::vector<std::vector<int>> side;
        for (int i : pick) side.push_back(multisets[i]);
        LabeledGraph lg = make_block_graph(side);
        if (diameter(lg.graph) == 3) out.push_back(std::move(lg));
        return;
      }
      for (int i = from; i < static_cast<int>(multisets.size()); ++i) {
        const int e = extra(multisets[i]);
        if (e > budget) continue;
        pick.push_back(i);
        choose(i, budget - e);
        pick.pop_back();
      }
    };
    choose(0, max_n - b);
  }
  return out;
}

std::vector<Graph> enumerate_block_graphs_diam2(int max_n) {
  std::vector<Graph> out;
  // Integer partitions of n - 1 into at least two parts; part p is a clique
  // of order p + 1 through the hub.
  std::vector<int> parts;
  std::function<void(int, int)> split = [&](int left, int cap) {
    if (left == 0) {
      if (parts.size() < 2) return;
      GraphBuilder b(1);
      for (int p : parts) {
        std::vector<Vertex> block{0};
        for (int i = 0; i < p; ++i) block.push_back(b.add_vertex());
        b.add_clique(block);
      }
      out.push_back(b.build());
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      parts.push_back(p);
      split(left - p, p);
      parts.pop_back();
    }
  };
  for (int n = 3; n <= max_n; ++n) split(n - 1, n - 1);
  return out;
}

std::vector<Graph> enumerate_class_C(int max_cycle, int max_leaves) {
  std::vector<Graph> out;
  for (int len = 3; len <= max_cycle; ++len) {
    std::vector<int> counts(len, 0);
    std::function<void(int)> fill = [&](int i) {
      if (i == len) {
        // Keep the lexicographically smallest rotation/reflection only.
        for (int r = 0; r < len; ++r)
          for (int dir : {1, -1}) {
            std::vector<int> v(len);
            for (int j = 0; j < len; ++j) v[j] = counts[((r + dir * j) % len + len) % len];
            if (v < counts) return;
          }
        out.push_back(gen_class_C(len, counts).graph);
        return;
      }
      for (int c = 0; c <= max_leaves; ++c) {
        counts[i] = c;
        fill(i + 1);
      }
    };
    fill(0);
  }
  return out;
}

std::vector<LabeledGraph> generate_family(std::string_view name, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw Error(Errc::invalid_argument, std::string(name) + " takes " + std::to_string(count) +
                                              " integer parameter(s)");
  };
  auto wrap = [](std::vector<Graph> graphs) {
    std::vector<LabeledGraph> out;
    for (auto& g : graphs) out.push_back({std::move(g), {}, {}});
    return out;
  };
  if (name == "path" || name == "cycle" || name == "complete" || name == "star") {
    need(1);
    return {gen_basic(basic_kind_from_string(name), params[0])};
  }
  if (name == "sharpness") {
    need(1);
    return {gen_sharpness_family(params[0])};
  }
  if (name == "realization") {
    need(2);
    return {gen_realization(params[0], params[1])};
  }
  if (name == "net") {
    need(0);
    return {gen_net()};
  }
  if (name == "decorated-c4") {
    need(0);
    return {gen_decorated_c4()};
  }
  if (name == "decorated-c8") {
    need(0);
    return {gen_decorated_c8()};
  }
  if (name == "class-c") {
    require(!params.empty(), "class-c takes a cycle length followed by leaf counts");
    return {gen_class_C(params[0], params.subspan(1))};
  }
  if (name == "trees") {
    need(1);
    return wrap(enumerate_trees(params[0]));
  }
  if (name == "caterpillars") {
    need(1);
    return wrap(enumerate_caterpillars(params[0]));
  }
  if (name == "block-diam2") {
    need(1);
    return wrap(enumerate_block_graphs_diam2(params[0]));
  }
  if (name == "block-diam3") {
    need(1);
    return enumerate_block_graphs_diam3(params[0]);
  }
  throw Error(Errc::unknown_name, "unknown family: " + std::string(name));
}

}  // namespace pcrit
