#include "pcrit/blocks.hpp"

#include <algorithm>
#include <functional>

#include "pcrit/error.hpp"
#include "pcrit/metrics.hpp"

namespace pcrit {

namespace {

class Biconnected {
 public:
  explicit Biconnected(const Graph& g)
      : is_cut_(g.order(), 0), g_(g), disc_(g.order(), -1), low_(g.order(), 0) {}

  void run() {
    for (Vertex s = 0; s < g_.order(); ++s) {
      if (disc_[s] >= 0) continue;
      if (g_.degree(s) == 0) {
        disc_[s] = timer_++;
        blocks_.push_back({s});
        continue;
      }
      dfs(s, -1);
    }
  }

  std::vector<std::vector<Vertex>> blocks_;
  std::vector<char> is_cut_;

 private:
  void dfs(Vertex v, Vertex parent) {
    disc_[v] = low_[v] = timer_++;
    int children = 0;
    for (Vertex w : g_.neighbors(v)) {
      if (disc_[w] < 0) {
        ++children;
        stack_.emplace_back(v, w);
        dfs(w, v);
        low_[v] = std::min(low_[v], low_[w]);
        if (low_[w] >= disc_[v]) {
          if (parent >= 0 || children > 1) is_cut_[v] = 1;
          pop_block(Edge(v, w));
        }
      } else if (w != parent && disc_[w] < disc_[v]) {
        low_[v] = std::min(low_[v], disc_[w]);
        stack_.emplace_back(v, w);
      }
    }
  }

  void pop_block(Edge last) {
    std::vector<Vertex> block;
    while (true) {
      Edge e = stack_.back();
      stack_.pop_back();
      block.push_back(e.u);
      block.push_back(e.v);
      if (e == last) break;
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    blocks_.push_back(std::move(block));
  }

  const Graph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  std::vector<Edge> stack_;
  int timer_ = 0;
};

}  // namespace

std::vector<int> BlockDecomposition::blocks_of(Vertex v) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (std::binary_search(blocks[i].begin(), blocks[i].end(), v)) out.push_back(static_cast<int>(i));
  return out;
}

BlockDecomposition block_decomposition(const Graph& g) {
  if (!is_connected(g))
    throw Error(Errc::precondition, "block decomposition requires a connected graph");
  Biconnected bc(g);
  bc.run();

  BlockDecomposition out;
  out.blocks = std::move(bc.blocks_);
  std::sort(out.blocks.begin(), out.blocks.end());
  for (Vertex v = 0; v < g.order(); ++v)
    if (bc.is_cut_[v]) out.cut_vertices.push_back(v);

  out.is_block_graph = std::all_of(out.blocks.begin(), out.blocks.end(), [&](const auto& b) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (!g.adjacent(b[i], b[j])) return false;
    return true;
  });

  if (out.is_block_graph) {
    MetricSummary m = metric_summary(g);
    if (m.diameter == 3) {
      auto it = std::find(out.blocks.begin(), out.blocks.end(), m.center);
      if (it != out.blocks.end()) {
        out.central_block = static_cast<int>(it - out.blocks.begin());
        for (int i = 0; i < static_cast<int>(out.blocks.size()); ++i)
          if (i != *out.central_block) out.side_blocks.push_back(i);
      }
    }
  }
  return out;
}

bool is_block_graph(const Graph& g) {
  return is_connected(g) && block_decomposition(g).is_block_graph;
}

}  // namespace pcrit
