#include "pcrit/metrics.hpp"

#include <algorithm>

namespace pcrit {

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()) {
  d_.assign(static_cast<std::size_t>(n_) * n_, kInfinite);
  std::vector<std::vector<Vertex>> adj(n_);
  for (Vertex v = 0; v < n_; ++v) adj[v] = g.neighbors(v);
  std::vector<Vertex> queue(n_);
  for (Vertex s = 0; s < n_; ++s) {
    int* row = d_.data() + static_cast<std::size_t>(s) * n_;
    row[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex v = queue[head++];
      for (Vertex w : adj[v])
        if (row[w] == kInfinite) {
          row[w] = row[v] + 1;
          queue[tail++] = w;
        }
    }
  }
}

int DistanceMatrix::diameter() const noexcept {
  int best = 0;
  for (int x : d_) best = std::max(best, x);
  return best;
}

MetricSummary metric_summary(const Graph& g) { return metric_summary(DistanceMatrix(g)); }

MetricSummary metric_summary(const DistanceMatrix& d) {
  MetricSummary s;
  const int n = d.order();
  s.eccentricity.assign(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) s.eccentricity[u] = std::max(s.eccentricity[u], d(u, v));
  if (n == 0) return s;
  s.diameter = *std::max_element(s.eccentricity.begin(), s.eccentricity.end());
  s.radius = *std::min_element(s.eccentricity.begin(), s.eccentricity.end());
  if (s.diameter == kInfinite) {
    s.radius = kInfinite;
    return s;
  }
  for (Vertex v = 0; v < n; ++v)
    if (s.eccentricity[v] == s.radius) s.center.push_back(v);
  return s;
}

}  // namespace pcrit
