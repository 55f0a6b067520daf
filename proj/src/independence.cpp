#include "pcrit/independence.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace pcrit {

namespace {

// Single-word vertex set.
struct SmallSet {
  std::uint64_t bits = 0;

  static SmallSet empty_of(int) { return {}; }
  void set(int v) { bits |= std::uint64_t{1} << v; }
  void reset(int v) { bits &= ~(std::uint64_t{1} << v); }
  bool test(int v) const { return (bits >> v) & 1u; }
  bool none() const { return bits == 0; }
  int count() const { return std::popcount(bits); }
  int count_and(const SmallSet& o) const { return std::popcount(bits & o.bits); }
  void remove_all(const SmallSet& o) { bits &= ~o.bits; }
  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits; b; b &= b - 1) f(std::countr_zero(b));
  }
};

struct WideSet {
  std::vector<std::uint64_t> words;

  static WideSet empty_of(int n) { return {std::vector<std::uint64_t>((n + 63) / 64, 0)}; }
  void set(int v) { words[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(int v) const { return (words[v >> 6] >> (v & 63)) & 1u; }
  bool none() const {
    return std::all_of(words.begin(), words.end(), [](std::uint64_t w) { return w == 0; });
  }
  int count() const {
    int c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
  }
  int count_and(const WideSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words.size(); ++i) c += std::popcount(words[i] & o.words[i]);
    return c;
  }
  void remove_all(const WideSet& o) {
    for (std::size_t i = 0; i < words.size(); ++i) words[i] &= ~o.words[i];
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::uint64_t b = words[i]; b; b &= b - 1)
        f(static_cast<int>(i * 64) + std::countr_zero(b));
  }
};

template <class Set>
class MaxIndependentSet {
 public:
  explicit MaxIndependentSet(const Graph& g) : n_(g.order()) {
    closed_.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) {
      Set s = Set::empty_of(n_);
      for (Vertex w : g.neighbors(v)) s.set(w);
      s.set(v);
      closed_.push_back(std::move(s));
    }
  }

  IndependentSet run() {
    Set all = Set::empty_of(n_);
    for (Vertex v = 0; v < n_; ++v) all.set(v);
    std::vector<Vertex> current;
    expand(all, current);
    std::sort(best_.begin(), best_.end());
    return {static_cast<int>(best_.size()), best_};
  }

 private:
  void expand(Set cand, std::vector<Vertex>& current) {
    const std::size_t mark = current.size();
    // A vertex with at most one neighbour among the candidates lies in some
    // maximum independent set of the candidate subgraph.
    for (bool changed = true; changed;) {
      changed = false;
      int pick = -1;
      cand.for_each([&](int v) {
        if (pick < 0 && cand.count_and(closed_[v]) <= 2) pick = v;
      });
      if (pick >= 0) {
        current.push_back(pick);
        cand.remove_all(closed_[pick]);
        changed = true;
      }
    }

    const int cand_count = cand.count();
    if (static_cast<int>(current.size()) + cand_count > static_cast<int>(best_.size())) {
      if (cand_count == 0) {
        best_ = current;
      } else {
        int pivot = -1;
        int pivot_degree = -1;
        cand.for_each([&](int v) {
          int d = cand.count_and(closed_[v]);
          if (d > pivot_degree) {
            pivot = v;
            pivot_degree = d;
          }
        });
        Set with = cand;
        with.remove_all(closed_[pivot]);
        current.push_back(pivot);
        expand(std::move(with), current);
        current.pop_back();
        cand.reset(pivot);
        expand(std::move(cand), current);
      }
    }
    current.resize(mark);
  }

  int n_;
  std::vector<Set> closed_;
  std::vector<Vertex> best_;
};

}  // namespace

IndependentSet independence_number(const Graph& g) {
  if (g.order() <= 64) return MaxIndependentSet<SmallSet>(g).run();
  return MaxIndependentSet<WideSet>(g).run();
}

bool exists_alpha_set_avoiding(const Graph& g, std::span<const Vertex> forbidden) {
  if (forbidden.empty()) return true;
  return independence_number(delete_vertices(g, forbidden).graph).alpha ==
         independence_number(g).alpha;
}

bool is_independent(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (set[i] == set[j] || g.adjacent(set[i], set[j])) return false;
  return true;
}

}  // namespace pcrit
