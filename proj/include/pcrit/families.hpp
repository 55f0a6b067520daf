#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcrit/graph.hpp"

namespace pcrit {

/// A generated graph with named vertices and edges ("a", "b", "bridge", ...).
struct LabeledGraph {
  Graph graph;
  std::map<std::string, Vertex> vertices;
  std::map<std::string, Edge> edges;
};

enum class BasicKind { path, cycle, complete, star };

/// Throws Error(unknown_name).
BasicKind basic_kind_from_string(std::string_view name);

/// P_n, C_n (n >= 3), K_n, or the star K_{1,n} with hub 0.
LabeledGraph gen_basic(BasicKind kind, int n);

/// Two copies of K_n joined by the bridge ab (a = 0, b = n), with 2n-2 leaves
/// on every other clique vertex. Clique A first, clique B, then the leaves in
/// owner order.
LabeledGraph gen_sharpness_family(int n);

/// A graph G with chi_rho(G) = k and chi_rho(G - e) = n, edge labeled "e".
/// For n == k: K_k plus a leaf on vertex 0. Otherwise K_n and K_{k+1-n}
/// joined by a bridge, with k-1 leaves on every non-bridge clique vertex.
/// Requires k >= 3 and ceil((k+1)/2) <= n <= k.
LabeledGraph gen_realization(int k, int n);

/// Triangle b1 b2 b3 with a leaf a_i on each b_i.
LabeledGraph gen_net();
/// 4-cycle a-b-x-y with leaves a1 on a and b1 on b.
LabeledGraph gen_decorated_c4();
/// C8 with one leaf on cycle vertices 0 and 3 ("e" is the edge 5-6).
LabeledGraph gen_decorated_c8();

/// Cycle 0..len-1 with leaf_counts[i] pendant leaves on vertex i.
LabeledGraph gen_class_C(int cycle_len, std::span<const int> leaf_counts);

/// Canonical string of a tree (rooted at its center), equal for isomorphic
/// trees. Throws Error(precondition) if `t` is not a tree.
std::string tree_canonical_form(const Graph& t);

/// One representative per isomorphism class of trees on n vertices,
/// 1 <= n <= 13. Throws Error(too_large) above 13.
std::vector<Graph> enumerate_trees(int n);

/// One representative per isomorphism class of caterpillars on n vertices,
/// 1 <= n <= 22.
std::vector<Graph> enumerate_caterpillars(int n);

/// Spine 0..s-1 with leaves[i] pendant leaves on spine vertex i.
Graph make_caterpillar(std::span<const int> leaves);

/// Block graph built from a central clique of size b = side.size(); central
/// vertex i carries side blocks K_{s} for every s in side[i]. Central
/// vertices are 0..b-1; side blocks follow in owner order.
LabeledGraph make_block_graph(const std::vector<std::vector<int>>& side);

/// Every block graph of diameter 3 with at most max_n vertices, one per
/// isomorphism class. Labels "B0".. name the central vertices.
std::vector<LabeledGraph> enumerate_block_graphs_diam3(int max_n);

/// Every block graph of diameter 2 with at most max_n vertices (at least two
/// cliques sharing one hub), one per isomorphism class.
std::vector<Graph> enumerate_block_graphs_diam2(int max_n);

/// Every class-C graph with cycle length in [3, max_cycle] and at most
/// max_leaves leaves per cycle vertex, one per isomorphism class.
std::vector<Graph> enumerate_class_C(int max_cycle, int max_leaves);

/// Family names accepted by generate_family: path, cycle, complete, star,
/// sharpness, realization, net, decorated-c4, decorated-c8, class-c, trees,
/// caterpillars, block-diam2, block-diam3. Throws Error(unknown_name) or
/// Error(invalid_argument).
std::vector<LabeledGraph> generate_family(std::string_view name, std::span<const int> params);

}  // namespace pcrit
