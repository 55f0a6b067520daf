#include <gtest/gtest.h>

#include <random>
#include <set>

#include "pcrit/blocks.hpp"
#include "pcrit/caterpillar.hpp"
#include "pcrit/corpus.hpp"
#include "pcrit/error.hpp"
#include "pcrit/families.hpp"
#include "pcrit/graph6.hpp"
#include "pcrit/metrics.hpp"
#include "pcrit/solver.hpp"
#include "test_util.hpp"

using namespace pcrit;

namespace {

int chi(const Graph& g) { return packing_chromatic_number(g).value; }

Graph relabel(const Graph& g, std::mt19937& rng) {
  std::vector<Vertex> p(g.order());
  for (int i = 0; i < g.order(); ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) es.emplace_back(p[e.u], p[e.v]);
  return Graph::from_edges(g.order(), es);
}

}  // namespace

TEST(Families, Basic) {
  EXPECT_EQ(gen_basic(BasicKind::path, 5).graph.size(), 4);
  EXPECT_EQ(gen_basic(BasicKind::cycle, 5).graph.size(), 5);
  EXPECT_EQ(gen_basic(BasicKind::complete, 5).graph.size(), 10);
  const LabeledGraph s = gen_basic(BasicKind::star, 4);
  EXPECT_EQ(s.graph.order(), 5);
  EXPECT_EQ(s.graph.degree(s.vertices.at("hub")), 4);
  EXPECT_THROW(gen_basic(BasicKind::cycle, 2), Error);
  EXPECT_THROW(basic_kind_from_string("wheel"), Error);
}

TEST(Families, SharpnessShape) {
  for (int n = 2; n <= 4; ++n) {
    const LabeledGraph g = gen_sharpness_family(n);
    EXPECT_EQ(g.graph.order(), 2 * n + 4 * (n - 1) * (n - 1));
    const Edge ab(g.vertices.at("a"), g.vertices.at("b"));
    EXPECT_EQ(g.edges.at("bridge"), ab);
    EXPECT_TRUE(g.graph.has_edge(ab));
    EXPECT_TRUE(is_connected(g.graph));
  }
  EXPECT_THROW(gen_sharpness_family(1), Error);
}

TEST(Families, SharpnessValuesSmall) {
  for (int n = 2; n <= 3; ++n) {
    const LabeledGraph g = gen_sharpness_family(n);
    EXPECT_EQ(chi(g.graph), 2 * n - 1);
    EXPECT_EQ(chi(delete_edge(g.graph, g.edges.at("bridge")).graph), n);
  }
}

TEST(Families, RealizationSmall) {
  for (int k = 3; k <= 5; ++k)
    for (int n = (k + 2) / 2; n <= k; ++n) {
      const LabeledGraph g = gen_realization(k, n);
      EXPECT_EQ(chi(g.graph), k) << k << "," << n;
      EXPECT_EQ(chi(delete_edge(g.graph, g.edges.at("e")).graph), n) << k << "," << n;
    }
  EXPECT_THROW(gen_realization(5, 2), Error);
  EXPECT_THROW(gen_realization(5, 6), Error);
  EXPECT_THROW(gen_realization(2, 2), Error);
}

TEST(Families, NamedShapes) {
  const LabeledGraph net = gen_net();
  EXPECT_EQ(net.graph.order(), 6);
  EXPECT_EQ(net.graph.size(), 6);
  for (int i = 1; i <= 3; ++i) {
    const std::string s = std::to_string(i);
    EXPECT_TRUE(net.graph.has_edge(Edge(net.vertices.at("a" + s), net.vertices.at("b" + s))));
  }
  const LabeledGraph c4 = gen_decorated_c4();
  EXPECT_EQ(c4.graph.order(), 6);
  EXPECT_EQ(c4.graph.degree_sequence(), (std::vector<int>{3, 3, 2, 2, 1, 1}));
  EXPECT_TRUE(c4.graph.has_edge(Edge(c4.vertices.at("a"), c4.vertices.at("a1"))));
  EXPECT_TRUE(c4.graph.has_edge(Edge(c4.vertices.at("b"), c4.vertices.at("b1"))));
  const LabeledGraph c8 = gen_decorated_c8();
  EXPECT_EQ(c8.graph.order(), 10);
  EXPECT_TRUE(c8.graph.has_edge(c8.edges.at("e")));
  const int counts[] = {2, 0, 1};
  const LabeledGraph cc = gen_class_C(3, counts);
  EXPECT_EQ(cc.graph.order(), 6);
  EXPECT_EQ(cc.graph.degree(cc.vertices.at("cycle[0]")), 4);
  const int wrong[] = {1, 1};
  EXPECT_THROW(gen_class_C(3, wrong), Error);
}

TEST(Families, TreeCounts) {
  const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 1; n <= 12; ++n) {
    const auto trees = enumerate_trees(n);
    EXPECT_EQ(static_cast<int>(trees.size()), expected[n - 1]) << n;
    std::set<std::string> forms;
    for (const Graph& t : trees) {
      ASSERT_TRUE(is_tree(t));
      ASSERT_EQ(t.order(), n);
      forms.insert(tree_canonical_form(t));
    }
    EXPECT_EQ(forms.size(), trees.size());
  }
}

TEST(Families, TreeCanonicalFormIgnoresLabels) {
  std::mt19937 rng(3);
  for (const Graph& t : enumerate_trees(9))
    ASSERT_EQ(tree_canonical_form(relabel(t, rng)), tree_canonical_form(t));
  EXPECT_THROW(tree_canonical_form(test::cycle(4)), Error);
}

TEST(Families, CaterpillarCounts) {
  // 2^(n-4) + 2^floor((n-4)/2) for n >= 4
  for (int n = 4; n <= 14; ++n) {
    const auto cats = enumerate_caterpillars(n);
    const int expect = (1 << (n - 4)) + (1 << ((n - 4) / 2));
    EXPECT_EQ(static_cast<int>(cats.size()), expect) << n;
    for (const Graph& t : cats) ASSERT_TRUE(caterpillar_leaf_vector(t).has_value());
  }
}

TEST(Families, MakeCaterpillar) {
  const int leaves[] = {1, 0, 2};
  const Graph t = make_caterpillar(leaves);
  EXPECT_EQ(t.order(), 6);
  EXPECT_TRUE(is_tree(t));
}

TEST(Families, BlockGraphDiam3) {
  const LabeledGraph g = make_block_graph({{2}, {3}, {}});
  EXPECT_EQ(g.graph.order(), 3 + 1 + 2);
  EXPECT_TRUE(is_block_graph(g.graph));
  EXPECT_EQ(diameter(g.graph), 3);
  EXPECT_TRUE(g.vertices.count("B0"));
  for (const LabeledGraph& h : enumerate_block_graphs_diam3(9)) {
    ASSERT_TRUE(is_block_graph(h.graph));
    ASSERT_EQ(diameter(h.graph), 3);
  }
}

TEST(Families, BlockEnumeratorsMatchFiltering) {
  for (int n = 4; n <= 7; ++n) {
    std::set<std::uint64_t> d2, d3, f2, f3;
    for (const Graph& g : enumerate_connected_graphs(n)) {
      if (!is_block_graph(g)) continue;
      const int d = diameter(g);
      if (d == 2) f2.insert(canonical_certificate(g));
      if (d == 3) f3.insert(canonical_certificate(g));
    }
    for (const Graph& g : enumerate_block_graphs_diam2(n))
      if (g.order() == n) d2.insert(canonical_certificate(g));
    for (const LabeledGraph& g : enumerate_block_graphs_diam3(n))
      if (g.graph.order() == n) d3.insert(canonical_certificate(g.graph));
    EXPECT_EQ(d2, f2) << n;
    EXPECT_EQ(d3, f3) << n;
  }
}

TEST(Families, ClassCEnumeration) {
  const auto all = enumerate_class_C(5, 1);
  std::set<std::uint64_t> seen;
  for (const Graph& g : all) seen.insert(canonical_certificate(g));
  EXPECT_EQ(seen.size(), all.size());
}

TEST(Families, Dispatcher) {
  const int p[] = {4};
  EXPECT_EQ(generate_family("cycle", p).at(0).graph, test::cycle(4));
  EXPECT_EQ(generate_family("trees", p).size(), 2u);
  const int kn[] = {5, 3};
  EXPECT_EQ(generate_family("realization", kn).at(0).graph, gen_realization(5, 3).graph);
  EXPECT_THROW(generate_family("nope", {}), Error);
  EXPECT_THROW(generate_family("net", p), Error);
}

TEST(Corpus, Counts) {
  const int all[] = {1, 2, 4, 11, 34, 156, 1044};
  const int conn[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(static_cast<int>(enumerate_graphs(n).size()), all[n - 1]) << n;
    EXPECT_EQ(static_cast<int>(enumerate_connected_graphs(n).size()), conn[n - 1]) << n;
  }
}

TEST(Corpus, Builtins) {
  EXPECT_EQ(builtin_corpus("all-le5").size(), 1u + 2 + 4 + 11 + 34);
  EXPECT_EQ(builtin_corpus("connected-le6").size(), 1u + 1 + 2 + 6 + 21 + 112);
  for (const Graph& g : builtin_corpus("connected-le6-diam2")) ASSERT_EQ(diameter(g), 2);
  EXPECT_EQ(builtin_corpus("trees-le6").size(), 1u + 1 + 1 + 2 + 3 + 6);
  EXPECT_THROW(builtin_corpus("all-le99"), Error);
  EXPECT_THROW(builtin_corpus("bogus"), Error);
}

TEST(Corpus, CanonicalInvariance) {
  std::mt19937 rng(11);
  for (const Graph& g : enumerate_graphs(6)) {
    const Graph h = relabel(g, rng);
    ASSERT_EQ(canonical_certificate(h), canonical_certificate(g)) << emit_graph6(g);
    ASSERT_EQ(canonical_form(h), canonical_form(g));
  }
}

TEST(Corpus, CanonicalSeparatesClasses) {
  std::set<std::uint64_t> seen;
  for (const Graph& g : enumerate_graphs(7)) seen.insert(canonical_certificate(g));
  EXPECT_EQ(seen.size(), 1044u);
}
