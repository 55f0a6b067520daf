#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "pcrit/graph.hpp"

namespace pcrit {

/// Isomorphism certificate: the upper triangle of the lexicographically
/// largest adjacency matrix over all orderings compatible with colour
/// refinement. Equal iff the graphs are isomorphic. n <= 11.
std::uint64_t canonical_certificate(const Graph& g);

/// `g` relabeled into the ordering that realises canonical_certificate.
Graph canonical_form(const Graph& g);

/// One graph per isomorphism class on exactly n vertices, 0 <= n <= 8, in a
/// fixed order. Throws Error(too_large) above 8.
std::vector<Graph> enumerate_graphs(int n);

/// Same, restricted to connected graphs.
std::vector<Graph> enumerate_connected_graphs(int n);

/// Builtin corpora, generated on demand:
///   all-le{N}                every graph with 1..N vertices (N <= 8)
///   connected-le{N}          connected graphs with 1..N vertices (N <= 8)
///   connected-le{N}-diam2    connected graphs of diameter 2 (N <= 8)
///   trees-le{N}              trees with 1..N vertices (N <= 13)
///   caterpillars-le{N}       caterpillars with 1..N vertices (N <= 22)
///   block-diam2-le{N}        diameter-2 block graphs (N <= 16)
///   block-diam3-le{N}        diameter-3 block graphs (N <= 16)
///   class-c                  class-C graphs, cycle <= 8, <= 2 leaves per vertex
/// Throws Error(unknown_name) or Error(too_large).
std::vector<Graph> builtin_corpus(std::string_view name);

}  // namespace pcrit
