#include "pcrit/solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "pcrit/error.hpp"
#include "pcrit/independence.hpp"

namespace pcrit {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(const SolveOptions& options) {
    if (options.timeout) at_ = Clock::now() + *options.timeout;
  }
  void check() const {
    if (at_ && Clock::now() > *at_) throw Error(Errc::timeout, "solve exceeded its time limit");
  }

 private:
  std::optional<Clock::time_point> at_;
};

// Branching order: descending degree, ties by id.
std::vector<Vertex> branching_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> deg(g.order());
  for (Vertex v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
  return order;
}

// Exact search for a packing coloring with colors 1..k of one connected graph.
class PackingSearch {
 public:
  PackingSearch(const Graph& g, int k, std::span<const Pin> pins, const Deadline& deadline)
      : n_(g.order()), k_(k), dist_(g), deadline_(deadline), symmetric_(pins.empty()) {
    singleton_from_ = std::max(1, dist_.diameter());
    color_.assign(n_, 0);
    conflict_.assign(static_cast<std::size_t>(n_) * (k_ + 1), 0);
    avail_.assign(n_, k_);

    for (Vertex v = 0; v < n_; ++v) {
      std::vector<Vertex> others;
      for (Vertex w = 0; w < n_; ++w)
        if (w != v) others.push_back(w);
      std::stable_sort(others.begin(), others.end(),
                       [&](Vertex a, Vertex b) { return dist_(v, a) < dist_(v, b); });
      near_.push_back(std::move(others));
      std::vector<int> ends(k_ + 1, 0);
      for (int c = 0; c <= k_; ++c) {
        int cnt = 0;
        while (cnt < n_ - 1 && dist_(v, near_[v][cnt]) <= c) ++cnt;
        ends[c] = cnt;
      }
      near_end_.push_back(std::move(ends));
    }

    order_ = branching_order(g);
    for (const Pin& p : pins) {
      if (p.color < 1 || p.color > k_) {
        pinned_infeasible_ = true;
        continue;
      }
      for (int c = 1; c <= k_; ++c)
        if (c != p.color && conflict(p.vertex, c)++ == 0) --avail_[p.vertex];
    }
    if (!pins.empty()) {
      std::vector<char> pinned(n_, 0);
      for (const Pin& p : pins) pinned[p.vertex] = 1;
      std::stable_partition(order_.begin(), order_.end(), [&](Vertex v) { return pinned[v]; });
    }
    if (symmetric_) build_twin_classes(g);
  }

  bool run() {
    if (pinned_infeasible_) return false;
    if (n_ > 0 && k_ < 1) return false;
    return search(0);
  }

  PackingColoring coloring() const { return {color_}; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  int& conflict(Vertex v, int c) { return conflict_[static_cast<std::size_t>(v) * (k_ + 1) + c]; }

  // Classes of vertices with identical neighbourhoods (open or closed). Any
  // permutation inside a class maps packing colorings to packing colorings.
  void build_twin_classes(const Graph& g) {
    twin_prev_.assign(n_, -1);
    std::map<std::vector<std::uint64_t>, std::vector<Vertex>> closed, open;
    for (Vertex v = 0; v < n_; ++v) {
      auto r = g.row(v);
      std::vector<std::uint64_t> key(r.begin(), r.end());
      open[key].push_back(v);
      key[v >> 6] |= std::uint64_t{1} << (v & 63);
      closed[key].push_back(v);
    }
    std::vector<char> used(n_, 0);
    auto add = [&](const std::vector<Vertex>& members) {
      if (members.size() < 2) return;
      std::vector<Vertex> in_order;
      for (Vertex v : order_)
        if (std::find(members.begin(), members.end(), v) != members.end()) in_order.push_back(v);
      for (std::size_t i = 1; i < in_order.size(); ++i) twin_prev_[in_order[i]] = in_order[i - 1];
      for (Vertex v : members) used[v] = 1;
      twins_.push_back({in_order, dist_(in_order[0], in_order[1])});
    };
    for (const auto& [key, members] : closed) add(members);
    for (const auto& [key, members] : open) {
      if (std::any_of(members.begin(), members.end(), [&](Vertex v) { return used[v]; })) continue;
      add(members);
    }
  }

  // Unassigned members of a twin class share one feasible color set; colors
  // below the class's internal distance can hold all of them, every other
  // color at most one.
  bool twins_fit() {
    for (const TwinClass& t : twins_) {
      int open = 0;
      Vertex rep = -1;
      for (Vertex v : t.members)
        if (color_[v] == 0) {
          ++open;
          rep = v;
        }
      if (open < 2) continue;
      bool shared_color = false;
      for (int c = 1; c < t.distance && c <= k_; ++c)
        if (conflict(rep, c) == 0) shared_color = true;
      if (!shared_color && avail_[rep] < open) return false;
    }
    return true;
  }

  // Returns false on a domain wipeout; the update is applied either way.
  bool assign(Vertex v, int c) {
    color_[v] = c;
    bool ok = true;
    const auto& near = near_[v];
    for (int i = 0, end = near_end_[v][c]; i < end; ++i) {
      Vertex w = near[i];
      if (conflict(w, c)++ == 0 && --avail_[w] == 0 && color_[w] == 0) ok = false;
    }
    return ok;
  }

  void unassign(Vertex v) {
    int c = color_[v];
    const auto& near = near_[v];
    for (int i = 0, end = near_end_[v][c]; i < end; ++i) {
      Vertex w = near[i];
      if (--conflict(w, c) == 0) ++avail_[w];
    }
    color_[v] = 0;
  }

  bool search(int pos) {
    if ((++nodes_ & 1023) == 0) deadline_.check();
    if (pos == n_) return true;
    Vertex v = order_[pos];
    int lo = 1;
    if (symmetric_ && twin_prev_[v] >= 0) lo = color_[twin_prev_[v]];
    for (int c = lo; c <= k_; ++c) {
      if (conflict(v, c) != 0) continue;
      // Colors >= diameter hold one vertex each and are interchangeable; use
      // them in increasing order of first appearance.
      const bool singleton = c >= singleton_from_;
      if (symmetric_ && singleton && c != singleton_from_ + singletons_used_) continue;
      bool ok = assign(v, c);
      if (singleton) ++singletons_used_;
      if (ok && twins_fit() && search(pos + 1)) return true;
      if (singleton) --singletons_used_;
      unassign(v);
    }
    return false;
  }

  struct TwinClass {
    std::vector<Vertex> members;  // in branching order
    int distance;
  };

  int n_;
  int k_;
  DistanceMatrix dist_;
  const Deadline& deadline_;
  bool symmetric_;
  bool pinned_infeasible_ = false;
  int singleton_from_ = 1;
  int singletons_used_ = 0;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> near_;
  std::vector<std::vector<int>> near_end_;
  std::vector<int> color_;
  std::vector<int> conflict_;
  std::vector<int> avail_;
  std::vector<Vertex> twin_prev_;
  std::vector<TwinClass> twins_;
  std::uint64_t nodes_ = 0;
};

struct Decision {
  std::optional<PackingColoring> coloring;
  std::uint64_t nodes = 0;
};

Decision decide_connected(const Graph& g, int k, std::span<const Pin> pins,
                          const Deadline& deadline) {
  PackingSearch s(g, k, pins, deadline);
  bool found = s.run();
  return {found ? std::optional(s.coloring()) : std::nullopt, s.nodes()};
}

PackingColoring first_fit(const Graph& g, const DistanceMatrix& d) {
  PackingColoring c{std::vector<int>(g.order(), 0)};
  for (Vertex v : branching_order(g)) {
    for (int col = 1;; ++col) {
      bool ok = true;
      for (Vertex w = 0; w < g.order() && ok; ++w)
        if (c.colors[w] == col && d(v, w) <= col) ok = false;
      if (ok) {
        c.colors[v] = col;
        break;
      }
    }
  }
  return c;
}

// Greedy clique through each vertex; a lower bound on the palette.
int clique_lower_bound(const Graph& g) {
  int best = g.order() > 0 ? 1 : 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<Vertex> clique{s};
    std::vector<Vertex> cand = g.neighbors(s);
    while (!cand.empty()) {
      auto it = std::max_element(cand.begin(), cand.end(), [&](Vertex a, Vertex b) {
        return g.degree(a) < g.degree(b);
      });
      Vertex pick = *it;
      clique.push_back(pick);
      std::vector<Vertex> next;
      for (Vertex w : cand)
        if (w != pick && g.adjacent(w, pick)) next.push_back(w);
      cand = std::move(next);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

ChiRhoResult solve_connected(const Graph& g, const Deadline& deadline) {
  ChiRhoResult out;
  const int n = g.order();
  if (n == 0) return out;
  DistanceMatrix d(g);
  PackingColoring best = first_fit(g, d);
  if (n <= 24) {
    IndependentSet is = independence_number(g);
    if (n - is.alpha + 1 < best.palette_size()) {
      PackingColoring seeded{std::vector<int>(n, 0)};
      for (Vertex v : is.witness) seeded.colors[v] = 1;
      int next = 2;
      for (Vertex v = 0; v < n; ++v)
        if (seeded.colors[v] == 0) seeded.colors[v] = next++;
      best = std::move(seeded);
    }
  }
  const int lower = clique_lower_bound(g);
  for (int k = best.palette_size() - 1; k >= lower; ) {
    Decision dec = decide_connected(g, k, {}, deadline);
    out.node_count += dec.nodes;
    if (!dec.coloring) break;
    best = std::move(*dec.coloring);
    k = best.palette_size() - 1;
  }
  out.value = best.palette_size();
  out.witness = std::move(best);
  return out;
}

}  // namespace

int PackingColoring::palette_size() const noexcept {
  int p = 0;
  for (int c : colors) p = std::max(p, c);
  return p;
}

bool is_valid_packing_coloring(const Graph& g, const PackingColoring& c) {
  return is_valid_packing_coloring(DistanceMatrix(g), c);
}

bool is_valid_packing_coloring(const DistanceMatrix& d, const PackingColoring& c) {
  if (static_cast<int>(c.colors.size()) != d.order())
    throw Error(Errc::invalid_argument, "coloring has " + std::to_string(c.colors.size()) +
                                            " entries for " + std::to_string(d.order()) +
                                            " vertices");
  for (int col : c.colors)
    if (col < 1) throw Error(Errc::invalid_argument, "coloring is not total");
  for (Vertex u = 0; u < d.order(); ++u)
    for (Vertex v = u + 1; v < d.order(); ++v)
      if (c.colors[u] == c.colors[v] && d(u, v) <= c.colors[u]) return false;
  return true;
}

std::optional<PackingColoring> decide_packing_k_colorable(const Graph& g, int k,
                                                          const SolveOptions& options,
                                                          std::span<const Pin> pins) {
  if (k < 1) throw Error(Errc::invalid_argument, "k must be at least 1");
  for (const Pin& p : pins)
    if (!g.contains(p.vertex))
      throw Error(Errc::missing_vertex, "pinned vertex " + std::to_string(p.vertex));
  Deadline deadline(options);
  PackingColoring out{std::vector<int>(g.order(), 0)};
  for (const auto& comp : connected_components(g)) {
    Subgraph sub = induced_subgraph(g, comp);
    std::vector<Pin> local;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (const Pin& p : pins)
        if (p.vertex == comp[i]) local.push_back({static_cast<Vertex>(i), p.color});
    Decision dec = decide_connected(sub.graph, k, local, deadline);
    if (!dec.coloring) return std::nullopt;
    for (std::size_t i = 0; i < comp.size(); ++i) out.colors[comp[i]] = dec.coloring->colors[i];
  }
  return out;
}

ChiRhoResult packing_chromatic_number(const Graph& g, const SolveOptions& options) {
  Deadline deadline(options);
  ChiRhoResult out;
  out.witness.colors.assign(g.order(), 0);
  for (const auto& comp : connected_components(g)) {
    Subgraph sub = induced_subgraph(g, comp);
    ChiRhoResult part = solve_connected(sub.graph, deadline);
    out.value = std::max(out.value, part.value);
    out.node_count += part.node_count;
    for (std::size_t i = 0; i < comp.size(); ++i) out.witness.colors[comp[i]] = part.witness.colors[i];
  }
  return out;
}

PackingColoring greedy_packing_coloring(const Graph& g) { return first_fit(g, DistanceMatrix(g)); }

int brute_force_chi_rho(const Graph& g) {
  const int n = g.order();
  if (n > 8) throw Error(Errc::too_large, "brute force is limited to 8 vertices");
  if (n == 0) return 0;
  DistanceMatrix d(g);
  for (int k = 1; k <= n; ++k) {
    std::vector<int> c(n, 1);
    while (true) {
      bool valid = true;
      for (Vertex u = 0; u < n && valid; ++u)
        for (Vertex v = u + 1; v < n && valid; ++v)
          if (c[u] == c[v] && d(u, v) <= c[u]) valid = false;
      if (valid) return k;
      int i = 0;
      while (i < n && c[i] == k) c[i++] = 1;
      if (i == n) break;
      ++c[i];
    }
  }
  return n;  // all-distinct colors are always valid
}

}  // namespace pcrit
