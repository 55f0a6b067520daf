#pragma once

#include <optional>
#include <vector>

#include "pcrit/graph.hpp"

namespace pcrit {

struct BlockDecomposition {
  std::vector<std::vector<Vertex>> blocks;  // each sorted; list sorted
  std::vector<Vertex> cut_vertices;         // sorted
  bool is_block_graph = false;              // every block induces a clique
  /// For a block graph of diameter 3: the block spanned by the center.
  std::optional<int> central_block;
  /// All other blocks, set only when central_block is.
  std::vector<int> side_blocks;

  /// Indices of the blocks containing v.
  std::vector<int> blocks_of(Vertex v) const;
};

/// Biconnected components of a connected graph. Throws Error(precondition)
/// for disconnected input.
BlockDecomposition block_decomposition(const Graph& g);

bool is_block_graph(const Graph& g);

}  // namespace pcrit
