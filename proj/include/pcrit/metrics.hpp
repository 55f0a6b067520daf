#pragma once

#include <limits>
#include <vector>

#include "pcrit/graph.hpp"

namespace pcrit {

/// Marks pairs in different components. Larger than every finite distance.
inline constexpr int kInfinite = std::numeric_limits<int>::max();

/// All-pairs hop distances computed by BFS from every vertex.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(const Graph& g);

  int order() const noexcept { return n_; }
  int operator()(Vertex u, Vertex v) const noexcept {
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }
  /// Largest finite entry, or kInfinite if some pair is unreachable.
  int diameter() const noexcept;

 private:
  int n_ = 0;
  std::vector<int> d_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

struct MetricSummary {
  int diameter = 0;
  int radius = 0;
  std::vector<Vertex> center;     // empty for disconnected graphs
  std::vector<int> eccentricity;  // kInfinite entries when disconnected
};

MetricSummary metric_summary(const Graph& g);
MetricSummary metric_summary(const DistanceMatrix& d);

inline int diameter(const Graph& g) { return DistanceMatrix(g).diameter(); }

}  // namespace pcrit
