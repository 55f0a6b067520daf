#include "pcrit/criticality.hpp"

#include <algorithm>
#include <string>

#include "pcrit/error.hpp"
#include "pcrit/metrics.hpp"

namespace pcrit {

CriticalityReport criticality_report(const Graph& g, const CriticalityOptions& options) {
  CriticalityReport r;
  ChiRhoResult base = packing_chromatic_number(g, options.solve);
  r.chi_rho = base.value;
  r.witness = std::move(base.witness);

  if (options.edges) {
    r.edges_computed = true;
    for (const Edge& e : g.edges()) {
      Subgraph sub = delete_edge(g, e);
      ChiRhoResult res = packing_chromatic_number(sub.graph, options.solve);
      EdgeValue ev{e, res.value, std::nullopt};
      if (options.witnesses) ev.witness = std::move(res.witness);
      r.edge_values.push_back(std::move(ev));
    }
    if (g.order() <= 1) {
      r.is_edge_critical = true;
    } else {
      bool isolated = g.min_degree() == 0;
      r.is_edge_critical =
          !isolated && std::all_of(r.edge_values.begin(), r.edge_values.end(),
                                   [&](const EdgeValue& ev) { return ev.value < r.chi_rho; });
    }
  }

  if (options.vertices) {
    r.vertices_computed = true;
    for (Vertex v = 0; v < g.order(); ++v) {
      Subgraph sub = delete_vertex(g, v);
      ChiRhoResult res = packing_chromatic_number(sub.graph, options.solve);
      VertexValue vv{v, res.value, std::nullopt};
      if (options.witnesses) {
        std::vector<int> colors(g.order(), 0);
        for (std::size_t i = 0; i < sub.original.size(); ++i)
          colors[sub.original[i]] = res.witness.colors[i];
        vv.witness = std::move(colors);
      }
      r.vertex_values.push_back(std::move(vv));
    }
    r.is_vertex_critical =
        std::all_of(r.vertex_values.begin(), r.vertex_values.end(),
                    [&](const VertexValue& vv) { return vv.value < r.chi_rho; });
  }
  return r;
}

int edge_deletion_lower_bound(int chi_rho) { return (chi_rho + 2) / 2; }

std::vector<EdgeDrop> edge_drop_profile(const Graph& g, const SolveOptions& options) {
  const int chi = packing_chromatic_number(g, options).value;
  std::vector<EdgeDrop> out;
  for (const Edge& e : g.edges()) {
    const int value = packing_chromatic_number(delete_edge(g, e).graph, options).value;
    const int cap = value >= 2 ? 2 * value - 1 : 2 * value;
    if (value > chi || chi > cap)
      throw Error(Errc::bound_violation,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + "): chi_rho(G)=" +
                      std::to_string(chi) + ", chi_rho(G-e)=" + std::to_string(value));
    out.push_back({e, value, chi - value, value >= edge_deletion_lower_bound(chi)});
  }
  return out;
}

std::optional<PackingColoring> lemma1_witness(const Graph& g, Edge e, Vertex u, Vertex v,
                                              const SolveOptions& options) {
  if (!g.contains(u) || !g.contains(v))
    throw Error(Errc::missing_vertex, "lemma1: vertex out of range");
  Subgraph without = delete_edge(g, e);
  const int k = diameter(g);
  if (k == kInfinite || u == v) return std::nullopt;
  DistanceMatrix d_minus(without.graph);
  if (d_minus.diameter() <= k || d_minus(u, v) <= k) return std::nullopt;

  const int chi = packing_chromatic_number(g, options).value;
  for (int cu = std::max(k, 1); cu < chi; ++cu)
    for (int cv = cu + 1; cv <= chi; ++cv) {
      const Pin pins[] = {{u, cu}, {v, cv}};
      if (auto c = decide_packing_k_colorable(g, chi, options, pins)) return c;
    }
  return std::nullopt;
}

bool lemma1_criterion(const Graph& g, Edge e, Vertex u, Vertex v, const SolveOptions& options) {
  return lemma1_witness(g, e, u, v, options).has_value();
}

PackingColoring repair_coloring(const Graph& g, Edge e, const PackingColoring& coloring) {
  Subgraph without = delete_edge(g, e);
  if (!is_valid_packing_coloring(without.graph, coloring))
    throw Error(Errc::invalid_argument, "coloring is not a packing coloring of G - e");

  const DistanceMatrix d(g);
  const int m = coloring.palette_size();
  PackingColoring out = coloring;
  int fresh = m;
  for (int k = 1; k <= m; ++k) {
    std::vector<Vertex> cls;
    for (Vertex x = 0; x < g.order(); ++x)
      if (coloring[x] == k) cls.push_back(x);
    std::vector<Edge> conflicts;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        if (d(cls[i], cls[j]) <= k) conflicts.emplace_back(cls[i], cls[j]);
    if (conflicts.empty()) continue;

    // The hub must touch every conflicting pair; prefer the one closest to
    // the first endpoint of the deleted edge, then the smaller id.
    Vertex hub = -1;
    for (Vertex x : cls) {
      bool covers = std::all_of(conflicts.begin(), conflicts.end(),
                                [&](const Edge& p) { return p.u == x || p.v == x; });
      if (!covers) continue;
      if (hub < 0 || d(x, e.u) < d(hub, e.u)) hub = x;
    }
    if (hub < 0)
      throw Error(Errc::internal,
                  "repair: conflicts of color " + std::to_string(k) + " do not share a hub");
    out.colors[hub] = ++fresh;
  }
  return out;
}

}  // namespace pcrit
