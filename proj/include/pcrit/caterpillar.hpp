#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pcrit/graph.hpp"

namespace pcrit {

// A caterpillar is described by its leaf vector: spine vertices 0..s-1 in
// path order, leaves[i] pendant leaves on spine vertex i (see
// make_caterpillar). Zero entries at the ends are allowed.

/// Leaf vector of `t` if it is a caterpillar, nullopt otherwise.
std::optional<std::vector<int>> caterpillar_leaf_vector(const Graph& t);

/// Exact k-colorability by a left-to-right scan of the spine. 1 <= k <= 8.
bool caterpillar_k_colorable(std::span<const int> leaves, int k);

/// Exact packing chromatic number of the caterpillar. Throws Error(too_large)
/// if it exceeds 8.
int caterpillar_chi_rho(std::span<const int> leaves);

/// True iff every edge deletion lowers chi_rho.
bool caterpillar_is_critical(std::span<const int> leaves);

/// Removes leaves one at a time while chi_rho stays the same. The result is
/// a critical caterpillar that is a subtree of the input.
std::vector<int> minimize_caterpillar(std::vector<int> leaves);

/// A critical caterpillar with chi_rho == k, found by growing a caterpillar
/// until chi_rho reaches k and then minimizing. nullopt if growth stalls
/// below k.
std::optional<std::vector<int>> find_critical_caterpillar(int k);

}  // namespace pcrit
