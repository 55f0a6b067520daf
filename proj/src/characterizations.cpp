#include "pcrit/characterizations.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "pcrit/blocks.hpp"
#include "pcrit/criticality.hpp"
#include "pcrit/error.hpp"
#include "pcrit/graph6.hpp"
#include "pcrit/independence.hpp"
#include "pcrit/metrics.hpp"

namespace pcrit {

namespace {

std::string edge_name(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

TheoremVerdict verdict(std::string_view id, const Graph& g, bool structural, bool truth) {
  TheoremVerdict v;
  v.theorem_id = std::string(id);
  v.graph = emit_graph6(g);
  v.structural_verdict = structural;
  v.ground_truth = truth;
  v.agree = structural == truth;
  return v;
}

CriticalityReport edge_report(const Graph& g, const SolveOptions& options) {
  CriticalityOptions o;
  o.vertices = false;
  o.solve = options;
  return criticality_report(g, o);
}

// Vertices on the unique cycle of a class-C graph (all non-leaves).
std::vector<Vertex> cycle_order(const Graph& g) {
  std::vector<Vertex> cyc;
  Vertex start = -1;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) >= 2) {
      start = v;
      break;
    }
  Vertex prev = -1, cur = start;
  do {
    cyc.push_back(cur);
    Vertex step = -1;
    for (Vertex w : g.neighbors(cur))
      if (w != prev && g.degree(w) >= 2) {
        step = w;
        break;
      }
    prev = cur;
    cur = step;
  } while (cur != start);
  return cyc;
}

}  // namespace

std::optional<int> classify_small_critical(const Graph& g) {
  const std::vector<int> deg = g.degree_sequence();
  if (g.order() == 2 && g.size() == 1) return 2;
  if (g.order() == 3 && g.size() == 3) return 3;
  if (g.order() == 4 && g.size() == 3 && is_connected(g) && deg == std::vector<int>{2, 2, 1, 1})
    return 3;
  return std::nullopt;
}

bool is_class_C(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order() || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) continue;
    int core = 0;
    for (Vertex w : g.neighbors(v)) core += g.degree(w) >= 2;
    if (core != 2) return false;
  }
  return true;
}

bool classify_4critical_in_C(const Graph& g) {
  if (!is_class_C(g)) throw Error(Errc::precondition, "graph is not in class C");
  const std::vector<Vertex> cyc = cycle_order(g);
  const int len = static_cast<int>(cyc.size());
  std::vector<int> leaves;
  for (Vertex v : cyc) leaves.push_back(g.leaf_neighbor_count(v));
  const int total = g.order() - len;
  if (total == 0) return len >= 5 && len % 4 != 0;
  if (len == 3) return leaves == std::vector<int>{1, 1, 1};
  if (len == 4 && total == 2) {
    for (int i = 0; i < 4; ++i)
      if (leaves[i] == 1 && leaves[(i + 1) % 4] == 1) return true;
  }
  return false;
}

bool diam2_condition(const Graph& g, std::vector<std::string>* trace) {
  const int alpha = independence_number(g).alpha;
  bool all = true;
  for (const Edge& e : g.edges()) {
    const Graph minus = delete_edge(g, e).graph;
    std::string line = edge_name(e) + ": ";
    bool ok = false;
    if (independence_number(minus).alpha > alpha) {
      ok = true;
      line += "(i)";
    } else {
      const DistanceMatrix d(minus);
      const Vertex ends[2] = {e.u, e.v};
      for (int i = 0; i < 2 && !ok; ++i) {
        const Vertex ui = ends[i], uj = ends[1 - i];
        std::vector<Vertex> closed = g.neighbors(ui);
        closed.push_back(ui);
        std::sort(closed.begin(), closed.end());
        for (Vertex y : closed) {
          if (d(y, uj) < 3) continue;
          const Vertex avoid[] = {y, uj};
          if (exists_alpha_set_avoiding(g, avoid)) {
            ok = true;
            line += "(ii) y=" + std::to_string(y) + " u_i=" + std::to_string(ui);
            break;
          }
        }
      }
    }
    if (!ok) line += "fails";
    if (trace) trace->push_back(line);
    all = all && ok;
  }
  return all;
}

TheoremVerdict check_diam2_characterization(const Graph& g, const SolveOptions& options) {
  if (!is_connected(g) || diameter(g) != 2)
    throw Error(Errc::precondition, "diameter-2 test needs a connected graph of diameter 2");
  std::vector<std::string> trace;
  const bool structural = diam2_condition(g, &trace);
  TheoremVerdict v = verdict("diam2", g, structural, edge_report(g, options).is_edge_critical);
  v.details = std::move(trace);
  return v;
}

TheoremVerdict check_block_diam2(const Graph& g, const SolveOptions& options) {
  if (!is_connected(g) || !is_block_graph(g) || diameter(g) != 2)
    throw Error(Errc::precondition, "needs a connected block graph of diameter 2");
  TheoremVerdict v =
      verdict("block-diam2", g, g.min_degree() >= 2, edge_report(g, options).is_edge_critical);
  v.details.push_back("min_degree=" + std::to_string(g.min_degree()));
  return v;
}

const char* to_string(BlockCase c) noexcept {
  switch (c) {
    case BlockCase::a: return "a";
    case BlockCase::b: return "b";
    case BlockCase::c: return "c";
    case BlockCase::none: return "none";
  }
  return "none";
}

BlockDiam3Classification classify_block_diam3(const Graph& g) {
  if (!is_connected(g) || diameter(g) != 3)
    throw Error(Errc::precondition, "needs a connected block graph of diameter 3");
  const BlockDecomposition bd = block_decomposition(g);
  if (!bd.is_block_graph || !bd.central_block)
    throw Error(Errc::precondition, "needs a connected block graph of diameter 3");

  BlockDiam3Classification out;
  out.central = bd.blocks[*bd.central_block];
  out.block_count = static_cast<int>(bd.blocks.size());
  const int b = static_cast<int>(out.central.size());

  bool all_deg_b = true, all_deg_b1 = true, any_c12 = false, every_vertex_c = true;
  int two_leaf = 0;
  for (Vertex x : out.central) {
    int big = 0, triangles = 0;
    for (int bi : bd.blocks_of(x)) {
      if (bi == *bd.central_block) continue;
      const int order = static_cast<int>(bd.blocks[bi].size());
      if (order >= 4) ++big;
      if (order == 3) ++triangles;
    }
    const int leaves = g.leaf_neighbor_count(x);
    auto& flags = out.per_vertex[x];
    if (big >= 1 && leaves == 0) flags.insert("c1");
    if (triangles >= 2 && leaves == 0) flags.insert("c2");
    if (g.degree(x) == b + 1 && leaves == 2) flags.insert("c3");
    if (flags.count("c3")) ++out.p3;
    if (flags.count("c1") || flags.count("c2")) any_c12 = true;
    if (flags.empty()) every_vertex_c = false;
    all_deg_b = all_deg_b && g.degree(x) == b;
    all_deg_b1 = all_deg_b1 && g.degree(x) == b + 1;
    if (leaves == 2) ++two_leaf;
  }
  if (all_deg_b)
    out.kase = BlockCase::a;
  else if (all_deg_b1 && two_leaf == b - 1)
    out.kase = BlockCase::b;
  else if (every_vertex_c && any_c12)
    out.kase = BlockCase::c;
  return out;
}

TheoremVerdict check_block_diam3(const Graph& g, const SolveOptions& options) {
  const BlockDiam3Classification cls = classify_block_diam3(g);
  TheoremVerdict v = verdict("block-diam3", g, cls.kase != BlockCase::none,
                             edge_report(g, options).is_edge_critical);
  v.details.push_back(std::string("case=") + to_string(cls.kase));
  for (const auto& [x, flags] : cls.per_vertex) {
    std::string line = "B" + std::to_string(x) + ":";
    for (const auto& f : flags) line += " " + f;
    v.details.push_back(line);
  }
  return v;
}

TheoremVerdict check_tree_equivalence(const Graph& t, const SolveOptions& options) {
  if (!is_tree(t)) throw Error(Errc::precondition, "not a tree");
  CriticalityOptions o;
  o.solve = options;
  const CriticalityReport r = criticality_report(t, o);
  return verdict("tree-equivalence", t, r.is_vertex_critical, r.is_edge_critical);
}

namespace {

struct Outcome {
  bool skipped = false;
  bool timed_out = false;
  bool flagged = false;
  TheoremVerdict v;
};

using Check = std::function<Outcome(const Graph&, const SolveOptions&)>;

struct Theorem {
  std::string id;
  Check run;
};

Outcome skip() { return {true, false, false, {}}; }

// A claim the theorem asserts for every graph in its scope.
Outcome claim(std::string_view id, const Graph& g, bool holds, std::vector<std::string> details,
              bool flagged = false) {
  Outcome o;
  o.v = verdict(id, g, holds, true);
  o.v.details = std::move(details);
  o.flagged = flagged;
  return o;
}

std::vector<Theorem> registry() {
  std::vector<Theorem> t;
  t.push_back({"diam2", [](const Graph& g, const SolveOptions& s) {
                 if (!is_connected(g) || diameter(g) != 2) return skip();
                 Outcome o;
                 o.v = check_diam2_characterization(g, s);
                 o.flagged = o.v.ground_truth;
                 return o;
               }});
  t.push_back({"block-diam2", [](const Graph& g, const SolveOptions& s) {
                 if (!is_connected(g) || !is_block_graph(g) || diameter(g) != 2) return skip();
                 Outcome o;
                 o.v = check_block_diam2(g, s);
                 o.flagged = o.v.ground_truth;
                 return o;
               }});
  t.push_back({"block-diam3", [](const Graph& g, const SolveOptions& s) {
                 if (!is_connected(g) || !is_block_graph(g) || diameter(g) != 3) return skip();
                 Outcome o;
                 o.v = check_block_diam3(g, s);
                 o.flagged = o.v.ground_truth;
                 return o;
               }});
  t.push_back({"tree-equivalence", [](const Graph& g, const SolveOptions& s) {
                 if (!is_tree(g)) return skip();
                 Outcome o;
                 o.v = check_tree_equivalence(g, s);
                 o.flagged = o.v.ground_truth;
                 return o;
               }});
  for (int k : {2, 3}) {
    const std::string id = "small-critical-" + std::to_string(k);
    t.push_back({id, [id, k](const Graph& g, const SolveOptions& s) {
                   if (!is_connected(g)) return skip();
                   const CriticalityReport r = edge_report(g, s);
                   const bool truth = r.is_edge_critical && r.chi_rho == k;
                   Outcome o;
                   o.v = verdict(id, g, classify_small_critical(g) == k, truth);
                   o.v.details.push_back("chi_rho=" + std::to_string(r.chi_rho));
                   o.flagged = truth;
                   return o;
                 }});
  }
  t.push_back({"class-c", [](const Graph& g, const SolveOptions& s) {
                 if (!is_class_C(g)) return skip();
                 const CriticalityReport r = edge_report(g, s);
                 const bool truth = r.is_edge_critical && r.chi_rho == 4;
                 Outcome o;
                 o.v = verdict("class-c", g, classify_4critical_in_C(g), truth);
                 o.v.details.push_back("chi_rho=" + std::to_string(r.chi_rho));
                 o.flagged = truth;
                 return o;
               }});
  t.push_back({"edge-bound", [](const Graph& g, const SolveOptions& s) {
                 if (g.size() == 0) return skip();
                 const CriticalityReport r = edge_report(g, s);
                 std::vector<std::string> bad;
                 for (const EdgeValue& ev : r.edge_values)
                   if (ev.value > r.chi_rho || ev.value < edge_deletion_lower_bound(r.chi_rho))
                     bad.push_back(edge_name(ev.edge) + ": chi_rho=" + std::to_string(r.chi_rho) +
                                   " chi_rho(G-e)=" + std::to_string(ev.value));
                 const bool holds = bad.empty();
                 return claim("edge-bound", g, holds, std::move(bad));
               }});
  t.push_back({"repair", [](const Graph& g, const SolveOptions& s) {
                 if (g.size() == 0) return skip();
                 std::vector<std::string> bad;
                 for (const Edge& e : g.edges()) {
                   const ChiRhoResult opt = packing_chromatic_number(delete_edge(g, e).graph, s);
                   const int m = opt.value;
                   try {
                     const PackingColoring c = repair_coloring(g, e, opt.witness);
                     if (!is_valid_packing_coloring(g, c))
                       bad.push_back(edge_name(e) + ": repaired coloring invalid");
                     else if (c.palette_size() > 2 * m - 1)
                       bad.push_back(edge_name(e) + ": palette " +
                                     std::to_string(c.palette_size()) + " > 2*" +
                                     std::to_string(m) + "-1");
                   } catch (const Error& err) {
                     if (err.code() == Errc::timeout) throw;
                     bad.push_back(edge_name(e) + ": " + err.what());
                   }
                 }
                 const bool holds = bad.empty();
                 return claim("repair", g, holds, std::move(bad));
               }});
  t.push_back({"lemma1", [](const Graph& g, const SolveOptions& s) {
                 if (!is_connected(g) || g.size() == 0) return skip();
                 const int k = diameter(g);
                 const int chi = packing_chromatic_number(g, s).value;
                 std::vector<std::string> fired, bad;
                 for (const Edge& e : g.edges()) {
                   const Graph minus = delete_edge(g, e).graph;
                   const DistanceMatrix d(minus);
                   if (d.diameter() <= k) continue;
                   std::optional<int> value;
                   for (Vertex u = 0; u < g.order(); ++u)
                     for (Vertex v = 0; v < g.order(); ++v) {
                       if (u == v || d(u, v) <= k) continue;
                       if (!lemma1_criterion(g, e, u, v, s)) continue;
                       if (!value) value = packing_chromatic_number(minus, s).value;
                       const std::string where = edge_name(e) + " u=" + std::to_string(u) +
                                                 " v=" + std::to_string(v);
                       fired.push_back(where);
                       if (*value >= chi) bad.push_back(where + ": no drop");
                     }
                 }
                 const bool holds = bad.empty();
                 const bool any = !fired.empty();
                 return claim("lemma1", g, holds, holds ? std::move(fired) : std::move(bad), any);
               }});
  t.push_back({"lemma2", [](const Graph& g, const SolveOptions& s) {
                 const CriticalityReport r = edge_report(g, s);
                 const bool holds = !r.is_edge_critical || is_connected(g);
                 return claim("lemma2", g, holds, {}, r.is_edge_critical);
               }});
  t.push_back({"lemma3", [](const Graph& g, const SolveOptions& s) {
                 CriticalityOptions o;
                 o.solve = s;
                 const CriticalityReport r = criticality_report(g, o);
                 const bool holds = !r.is_edge_critical || r.is_vertex_critical;
                 return claim("lemma3", g, holds, {}, r.is_edge_critical);
               }});
  t.push_back({"oracle", [](const Graph& g, const SolveOptions& s) {
                 if (g.order() > 8) return skip();
                 const int a = packing_chromatic_number(g, s).value;
                 const int b = brute_force_chi_rho(g);
                 Outcome o;
                 o.v = verdict("oracle", g, true, a == b);
                 o.v.details.push_back("solver=" + std::to_string(a) +
                                       " brute_force=" + std::to_string(b));
                 return o;
               }});
  t.push_back({"upper-bound", [](const Graph& g, const SolveOptions& s) {
                 const int chi = packing_chromatic_number(g, s).value;
                 const int bound = g.order() - independence_number(g).alpha + 1;
                 return claim("upper-bound", g, g.order() == 0 || chi <= bound,
                              {"chi_rho=" + std::to_string(chi) + " bound=" +
                               std::to_string(bound)});
               }});
  t.push_back({"diam2-equality", [](const Graph& g, const SolveOptions& s) {
                 if (!is_connected(g) || diameter(g) != 2) return skip();
                 const int chi = packing_chromatic_number(g, s).value;
                 const int bound = g.order() - independence_number(g).alpha + 1;
                 return claim("diam2-equality", g, chi == bound,
                              {"chi_rho=" + std::to_string(chi) + " bound=" +
                               std::to_string(bound)});
               }});
  return t;
}

}  // namespace

std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids;
  for (const Theorem& t : registry()) ids.push_back(t.id);
  return ids;
}

VerifySummary verify_theorem(std::string_view theorem_id, const std::vector<Graph>& corpus,
                             const VerifyOptions& options) {
  const std::vector<Theorem> all = registry();
  auto it = std::find_if(all.begin(), all.end(),
                         [&](const Theorem& t) { return t.id == theorem_id; });
  if (it == all.end()) throw Error(Errc::unknown_name, "unknown theorem: " + std::string(theorem_id));
  const Check& run = it->run;

  std::vector<Outcome> results(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        results[i] = run(corpus[i], options.solve);
      } catch (const Error& e) {
        if (e.code() != Errc::timeout) throw;
        results[i].timed_out = true;
        results[i].v.graph = emit_graph6(corpus[i]);
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(corpus.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&, j] {
        try {
          worker();
        } catch (...) {
          errors[j] = std::current_exception();
          next = corpus.size();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  VerifySummary s;
  s.theorem_id = std::string(theorem_id);
  for (Outcome& o : results) {
    if (o.skipped) {
      ++s.skipped;
      continue;
    }
    if (o.timed_out) {
      s.timeouts.push_back(o.v.graph);
      continue;
    }
    ++s.checked;
    if (o.flagged) s.flagged.push_back(o.v.graph);
    if (!o.v.agree) s.disagreements.push_back(std::move(o.v));
  }
  std::sort(s.disagreements.begin(), s.disagreements.end(),
            [](const TheoremVerdict& a, const TheoremVerdict& b) { return a.graph < b.graph; });
  std::sort(s.flagged.begin(), s.flagged.end());
  std::sort(s.timeouts.begin(), s.timeouts.end());
  return s;
}

}  // namespace pcrit
