#pragma once

#include <optional>
#include <vector>

#include "pcrit/graph.hpp"
#include "pcrit/solver.hpp"

namespace pcrit {

struct CriticalityOptions {
  bool edges = true;
  bool vertices = true;
  bool witnesses = false;
  SolveOptions solve;
};

struct EdgeValue {
  Edge edge;
  int value = 0;  // chi_rho(G - edge)
  std::optional<PackingColoring> witness;
};

struct VertexValue {
  Vertex vertex = 0;
  int value = 0;  // chi_rho(G - vertex)
  /// Coloring of G - vertex indexed by original ids; the deleted vertex has 0.
  std::optional<std::vector<int>> witness;
};

struct CriticalityReport {
  int chi_rho = 0;
  PackingColoring witness;
  std::vector<EdgeValue> edge_values;
  std::vector<VertexValue> vertex_values;
  bool edges_computed = false;
  bool vertices_computed = false;
  /// K1, or no isolated vertex and every edge deletion lowers chi_rho.
  bool is_edge_critical = false;
  /// Every vertex deletion lowers chi_rho.
  bool is_vertex_critical = false;
};

CriticalityReport criticality_report(const Graph& g, const CriticalityOptions& options = {});

struct EdgeDrop {
  Edge edge;
  int value = 0;  // chi_rho(G - edge)
  int drop = 0;   // chi_rho(G) - value
  /// ceil((chi_rho(G) + 1) / 2) <= value, the literal edge-deletion bound.
  bool meets_half_bound = false;
};

/// Smallest chi_rho(G - e) allowed by the edge-deletion bound.
int edge_deletion_lower_bound(int chi_rho);

/// chi_rho(G - e) for every edge. Throws Error(bound_violation) if an entry
/// exceeds chi_rho(G) or if chi_rho(G) > 2*value - 1 while value >= 2
/// (chi_rho(G) > 2*value when value == 1).
std::vector<EdgeDrop> edge_drop_profile(const Graph& g, const SolveOptions& options = {});

/// A chi_rho(G)-packing coloring c with c(v) > c(u) >= diam(G), provided
/// diam(G - e) > diam(G) and d_{G-e}(u, v) > diam(G); nullopt otherwise.
std::optional<PackingColoring> lemma1_witness(const Graph& g, Edge e, Vertex u, Vertex v,
                                              const SolveOptions& options = {});

/// True iff every premise of the edge-deletion lemma holds for (e, u, v);
/// then chi_rho(G - e) < chi_rho(G).
bool lemma1_criterion(const Graph& g, Edge e, Vertex u, Vertex v,
                      const SolveOptions& options = {});

/// Turns a packing coloring of G - e into one of G. For every color class
/// broken by the edge, its single conflicting hub moves to a fresh color.
/// Throws Error(invalid_argument) if `coloring` is not valid on G - e and
/// Error(internal) if a broken class is not a star around one hub.
PackingColoring repair_coloring(const Graph& g, Edge e, const PackingColoring& coloring);

}  // namespace pcrit
