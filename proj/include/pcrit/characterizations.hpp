#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pcrit/graph.hpp"
#include "pcrit/solver.hpp"

namespace pcrit {

/// Agreement record between a structural test and the solver.
struct TheoremVerdict {
  std::string theorem_id;
  std::string graph;  // graph6
  bool structural_verdict = false;
  bool ground_truth = false;
  bool agree = false;
  std::vector<std::string> details;
};

/// 2 iff G is K2, 3 iff G is C3 or P4, nullopt otherwise.
std::optional<int> classify_small_critical(const Graph& g);

/// Connected, unicyclic, and every vertex off the cycle is a leaf on it.
bool is_class_C(const Graph& g);

/// For a class-C graph: C_n with n >= 5 and n not divisible by 4, the net,
/// or C4 with a leaf on each of two adjacent vertices. Throws
/// Error(precondition) outside class C.
bool classify_4critical_in_C(const Graph& g);

/// Diameter-2 test: every edge u1u2 has alpha(G - e) > alpha(G), or some
/// y in N[u_i] with d_{G-e}(y, u_j) >= 3 and an alpha(G)-set avoiding
/// {y, u_j}. Throws Error(precondition) unless G is connected with diameter 2.
TheoremVerdict check_diam2_characterization(const Graph& g, const SolveOptions& options = {});

/// Structural side of the diameter-2 test alone.
bool diam2_condition(const Graph& g, std::vector<std::string>* trace = nullptr);

/// Diameter-2 block graph: critical iff min degree >= 2. Throws
/// Error(precondition) for other shapes.
TheoremVerdict check_block_diam2(const Graph& g, const SolveOptions& options = {});

enum class BlockCase { a, b, c, none };
const char* to_string(BlockCase c) noexcept;

struct BlockDiam3Classification {
  BlockCase kase = BlockCase::none;
  std::vector<Vertex> central;  // vertices of the central block
  /// Central vertex -> satisfied subset of {"c1", "c2", "c3"}.
  std::map<Vertex, std::set<std::string>> per_vertex;
  int p3 = 0;           // central vertices with c3
  int block_count = 0;  // all blocks of G
};

/// Throws Error(precondition) unless G is a connected block graph with
/// diameter 3.
BlockDiam3Classification classify_block_diam3(const Graph& g);
TheoremVerdict check_block_diam3(const Graph& g, const SolveOptions& options = {});

/// Tree: edge-critical iff vertex-critical. Throws Error(precondition) for
/// non-trees.
TheoremVerdict check_tree_equivalence(const Graph& t, const SolveOptions& options = {});

struct VerifyOptions {
  int jobs = 1;
  SolveOptions solve;
};

struct VerifySummary {
  std::string theorem_id;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;  // outside the theorem's shape
  std::vector<TheoremVerdict> disagreements;  // sorted by graph6
  std::vector<std::string> flagged;           // theorem-specific, sorted
  std::vector<std::string> timeouts;          // sorted
  bool ok() const noexcept { return disagreements.empty() && timeouts.empty(); }
};

/// Registered theorem ids, in a fixed order.
std::vector<std::string> theorem_ids();

/// Runs one theorem check over a corpus. Graphs outside the theorem's shape
/// are skipped. Throws Error(unknown_name).
VerifySummary verify_theorem(std::string_view theorem_id, const std::vector<Graph>& corpus,
                             const VerifyOptions& options = {});

}  // namespace pcrit
