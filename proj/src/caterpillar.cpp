#include "pcrit/caterpillar.hpp"

#include <algorithm>
#include <array>

#include "pcrit/error.hpp"

namespace pcrit {

namespace {

constexpr int kMaxColors = 8;

// Spine scan. For each color c the state keeps gap[c] = i - p, where p is the
// position of the latest vertex colored c, a leaf of spine vertex j counting
// as position j - 1; gaps are capped at c + 1, where c no longer constrains
// anything. A vertex at depth a (0 spine, 1 leaf) on spine index i may take
// color c iff gap[c] + a > c.
class Scan {
 public:
  explicit Scan(int k) : k_(k) {
    std::uint32_t r = 1;
    for (int c = 1; c <= k_; ++c) {
      weight_[c] = r;
      r *= static_cast<std::uint32_t>(c + 2);
    }
    states_ = r;
  }

  bool run(std::span<const int> leaves) {
    Gaps start{};
    for (int c = 1; c <= k_; ++c) start[c] = c + 1;
    std::vector<std::uint32_t> layer{encode(start)};
    std::vector<char> seen;
    for (int d : leaves) {
      seen.assign(states_, 0);
      std::vector<std::uint32_t> next;
      for (std::uint32_t code : layer) {
        const Gaps g = decode(code);
        for (int s = 1; s <= k_; ++s) {
          if (g[s] <= s) continue;
          Gaps h = g;
          h[s] = 0;
          if (d == 0 || s != 1) {
            if (d > 0) h[1] = std::min(h[1], 1);
            push(h, seen, next);
            continue;
          }
          // Spine colored 1: its leaves need distinct colors >= 2.
          std::vector<int> free;
          for (int c = 2; c <= k_; ++c)
            if (h[c] + 1 > c) free.push_back(c);
          if (d > static_cast<int>(free.size())) continue;
          std::vector<char> pick(free.size(), 0);
          std::fill(pick.begin(), pick.begin() + d, 1);
          do {
            Gaps x = h;
            for (std::size_t t = 0; t < free.size(); ++t)
              if (pick[t]) x[free[t]] = 1;
            push(x, seen, next);
          } while (std::prev_permutation(pick.begin(), pick.end()));
        }
      }
      if (next.empty()) return false;
      layer = std::move(next);
    }
    return true;
  }

 private:
  using Gaps = std::array<int, kMaxColors + 1>;

  std::uint32_t encode(const Gaps& g) const {
    std::uint32_t code = 0;
    for (int c = 1; c <= k_; ++c) code += weight_[c] * static_cast<std::uint32_t>(g[c]);
    return code;
  }

  Gaps decode(std::uint32_t code) const {
    Gaps g{};
    for (int c = 1; c <= k_; ++c) {
      g[c] = static_cast<int>(code % static_cast<std::uint32_t>(c + 2));
      code /= static_cast<std::uint32_t>(c + 2);
    }
    return g;
  }

  // Steps to the next spine index and records the state.
  void push(Gaps g, std::vector<char>& seen, std::vector<std::uint32_t>& out) const {
    for (int c = 1; c <= k_; ++c) g[c] = std::min(g[c] + 1, c + 1);
    const std::uint32_t code = encode(g);
    if (!seen[code]) {
      seen[code] = 1;
      out.push_back(code);
    }
  }

  int k_;
  std::array<std::uint32_t, kMaxColors + 1> weight_{};
  std::uint32_t states_ = 0;
};

int chi_of_parts(std::span<const int> a, std::span<const int> b) {
  auto part = [](std::span<const int> p) { return p.empty() ? 0 : caterpillar_chi_rho(p); };
  return std::max(part(a), part(b));
}

}  // namespace

std::optional<std::vector<int>> caterpillar_leaf_vector(const Graph& t) {
  if (!is_tree(t)) return std::nullopt;
  const int n = t.order();
  if (n <= 2) return std::vector<int>(1, n - 1);
  std::vector<Vertex> spine;
  for (Vertex v = 0; v < n; ++v)
    if (t.degree(v) > 1) spine.push_back(v);
  // The spine must induce a path; walk it from an end.
  auto spine_degree = [&](Vertex v) {
    int d = 0;
    for (Vertex w : t.neighbors(v)) d += t.degree(w) > 1;
    return d;
  };
  Vertex start = spine.front();
  for (Vertex v : spine) {
    const int d = spine_degree(v);
    if (d > 2) return std::nullopt;
    if (d <= 1) start = v;
  }
  std::vector<int> leaves;
  Vertex prev = -1, cur = start;
  while (cur >= 0) {
    leaves.push_back(t.leaf_neighbor_count(cur));
    Vertex step = -1;
    for (Vertex w : t.neighbors(cur))
      if (w != prev && t.degree(w) > 1) step = w;
    prev = cur;
    cur = step;
  }
  if (leaves.size() != spine.size()) return std::nullopt;
  return leaves;
}

bool caterpillar_k_colorable(std::span<const int> leaves, int k) {
  if (k < 1 || k > kMaxColors)
    throw Error(Errc::invalid_argument, "caterpillar scan supports 1 <= k <= 8");
  for (int d : leaves)
    if (d < 0) throw Error(Errc::invalid_argument, "negative leaf count");
  return Scan(k).run(leaves);
}

int caterpillar_chi_rho(std::span<const int> leaves) {
  if (leaves.empty()) return 0;
  for (int k = 1; k <= kMaxColors; ++k)
    if (caterpillar_k_colorable(leaves, k)) return k;
  throw Error(Errc::too_large, "caterpillar needs more than 8 colors");
}

bool caterpillar_is_critical(std::span<const int> leaves) {
  const int chi = caterpillar_chi_rho(leaves);
  const int s = static_cast<int>(leaves.size());
  if (s == 1 && leaves[0] == 0) return true;  // K1
  for (int i = 0; i < s; ++i) {
    if (leaves[i] > 0) {
      std::vector<int> v(leaves.begin(), leaves.end());
      --v[i];
      if (std::max(caterpillar_chi_rho(v), 1) >= chi) return false;
    }
    if (i + 1 < s && chi_of_parts(leaves.subspan(0, i + 1), leaves.subspan(i + 1)) >= chi)
      return false;
  }
  return true;
}

std::vector<int> minimize_caterpillar(std::vector<int> leaves) {
  const int chi = caterpillar_chi_rho(leaves);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<int>> moves;
    for (std::size_t i = 0; i < leaves.size(); ++i)
      if (leaves[i] > 0) {
        moves.push_back(leaves);
        --moves.back()[i];
      }
    if (leaves.size() > 1 && leaves.front() == 0) moves.emplace_back(leaves.begin() + 1, leaves.end());
    if (leaves.size() > 1 && leaves.back() == 0) moves.emplace_back(leaves.begin(), leaves.end() - 1);
    for (auto& m : moves)
      if (caterpillar_chi_rho(m) == chi) {
        leaves = std::move(m);
        changed = true;
        break;
      }
  }
  // A spine end without leaves is itself a leaf of its neighbour.
  while (leaves.size() > 1 && leaves.front() == 0) {
    leaves.erase(leaves.begin());
    ++leaves.front();
  }
  while (leaves.size() > 1 && leaves.back() == 0) {
    leaves.pop_back();
    ++leaves.back();
  }
  return leaves;
}

std::optional<std::vector<int>> find_critical_caterpillar(int k) {
  if (k < 1) throw Error(Errc::invalid_argument, "k must be positive");
  if (k == 1) return std::vector<int>{0};
  for (int per = 1; per <= kMaxColors; ++per) {
    std::vector<int> leaves;
    for (int s = 0; s < 64; ++s) {
      leaves.push_back(0);
      for (int d = 0; d <= per; ++d) {
        if (d > 0) ++leaves.back();
        const int chi = caterpillar_chi_rho(leaves);
        if (chi == k) return minimize_caterpillar(leaves);
        if (chi > k) break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace pcrit
