#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pcrit/graph.hpp"
#include "pcrit/metrics.hpp"

namespace pcrit {

/// Vertex -> color map. Colors start at 1; 0 marks an uncolored vertex and
/// is never valid in a finished coloring.
struct PackingColoring {
  std::vector<int> colors;

  int palette_size() const noexcept;
  int operator[](Vertex v) const { return colors[v]; }
  friend bool operator==(const PackingColoring&, const PackingColoring&) = default;
};

struct SolveOptions {
  /// Per-solve wall clock limit; exceeded solves throw Error(timeout).
  std::optional<std::chrono::milliseconds> timeout;
};

struct ChiRhoResult {
  int value = 0;
  PackingColoring witness;
  std::uint64_t node_count = 0;
};

/// Forces `vertex` to receive `color` in a decision search.
struct Pin {
  Vertex vertex;
  int color;
};

/// True iff every color class i is an i-packing. Throws
/// Error(invalid_argument) if the coloring is not total on the graph.
bool is_valid_packing_coloring(const Graph& g, const PackingColoring& c);
bool is_valid_packing_coloring(const DistanceMatrix& d, const PackingColoring& c);

/// A packing coloring with all colors in 1..k, or nullopt if none exists.
/// Each connected component is searched independently. Pins restrict the
/// listed vertices to a single color.
std::optional<PackingColoring> decide_packing_k_colorable(const Graph& g, int k,
                                                          const SolveOptions& options = {},
                                                          std::span<const Pin> pins = {});

/// Exact packing chromatic number with an optimal witness. The empty graph
/// has value 0.
ChiRhoResult packing_chromatic_number(const Graph& g, const SolveOptions& options = {});

/// First-fit coloring along the solver's branching order.
PackingColoring greedy_packing_coloring(const Graph& g);

/// Exhaustive enumeration of every assignment V -> {1..k} for k = 1, 2, ...
/// Independent of the search above. Throws Error(too_large) for more than 8
/// vertices.
int brute_force_chi_rho(const Graph& g);

}  // namespace pcrit
