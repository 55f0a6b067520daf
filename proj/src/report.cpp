#include "pcrit/report.hpp"

#include <algorithm>

#include "pcrit/error.hpp"
#include "pcrit/graph6.hpp"

namespace pcrit {

using nlohmann::json;

CriticalityMode criticality_mode_from_string(std::string_view name) {
  if (name == "edge") return CriticalityMode::edge;
  if (name == "vertex") return CriticalityMode::vertex;
  if (name == "both") return CriticalityMode::both;
  throw Error(Errc::unknown_name, "unknown criticality mode: " + std::string(name));
}

CriticalityOptions criticality_options(CriticalityMode mode, bool witnesses,
                                       const SolveOptions& solve) {
  CriticalityOptions o;
  o.edges = mode != CriticalityMode::vertex;
  o.vertices = mode != CriticalityMode::edge;
  o.witnesses = witnesses;
  o.solve = solve;
  return o;
}

json coloring_json(const PackingColoring& c) { return c.colors; }

json chi_rho_json(const Graph& g, const ChiRhoResult& r, bool witness) {
  json j{{"graph6", emit_graph6(g)},
         {"order", g.order()},
         {"size", g.size()},
         {"chi_rho", r.value},
         {"nodes", r.node_count}};
  if (witness) j["witness"] = coloring_json(r.witness);
  return j;
}

json criticality_json(const Graph& g, const CriticalityReport& r) {
  json j{{"graph6", emit_graph6(g)}, {"chi_rho", r.chi_rho}};
  if (r.edges_computed) {
    json edges = json::array();
    bool bound_ok = true, half_ok = true;
    for (const EdgeValue& ev : r.edge_values) {
      const int cap = ev.value >= 2 ? 2 * ev.value - 1 : 2 * ev.value;
      const bool meets = ev.value >= edge_deletion_lower_bound(r.chi_rho);
      bound_ok = bound_ok && ev.value <= r.chi_rho && r.chi_rho <= cap;
      half_ok = half_ok && meets;
      json e{{"edge", {ev.edge.u, ev.edge.v}},
             {"chi_rho", ev.value},
             {"drop", r.chi_rho - ev.value},
             {"meets_half_bound", meets}};
      if (ev.witness) e["witness"] = coloring_json(*ev.witness);
      edges.push_back(std::move(e));
    }
    j["edges"] = std::move(edges);
    j["edge_critical"] = r.is_edge_critical;
    j["bound_check"] = {{"lower_bound", edge_deletion_lower_bound(r.chi_rho)},
                        {"all_meet_half_bound", half_ok},
                        {"repair_bound_ok", bound_ok}};
  }
  if (r.vertices_computed) {
    json vertices = json::array();
    for (const VertexValue& vv : r.vertex_values) {
      json v{{"vertex", vv.vertex}, {"chi_rho", vv.value}, {"drop", r.chi_rho - vv.value}};
      if (vv.witness) v["witness"] = *vv.witness;
      vertices.push_back(std::move(v));
    }
    j["vertices"] = std::move(vertices);
    j["vertex_critical"] = r.is_vertex_critical;
  }
  return j;
}

json verdict_json(const TheoremVerdict& v) {
  return {{"theorem", v.theorem_id},
          {"graph6", v.graph},
          {"structural_verdict", v.structural_verdict},
          {"ground_truth", v.ground_truth},
          {"agree", v.agree},
          {"details", v.details}};
}

json summary_json(const VerifySummary& s) {
  json dis = json::array();
  for (const TheoremVerdict& v : s.disagreements) dis.push_back(verdict_json(v));
  return {{"theorem", s.theorem_id},
          {"checked", s.checked},
          {"skipped", s.skipped},
          {"disagreement_count", s.disagreements.size()},
          {"disagreements", std::move(dis)},
          {"flagged", s.flagged},
          {"timeouts", s.timeouts},
          {"ok", s.ok()}};
}

}  // namespace pcrit
