#pragma once

#include <span>
#include <vector>

#include "pcrit/graph.hpp"

namespace pcrit {

struct IndependentSet {
  int alpha = 0;
  std::vector<Vertex> witness;  // sorted, |witness| == alpha
};

/// Exact maximum independent set. Graphs with at most 64 vertices run on
/// single-word bit sets; larger graphs use multi-word rows.
IndependentSet independence_number(const Graph& g);

/// True iff some maximum independent set of `g` avoids every vertex of
/// `forbidden`, decided as alpha(G - forbidden) == alpha(G).
bool exists_alpha_set_avoiding(const Graph& g, std::span<const Vertex> forbidden);

bool is_independent(const Graph& g, std::span<const Vertex> set);

}  // namespace pcrit
