#include <gtest/gtest.h>

#include <json.hpp>
#include <string>

#include "pcrit/pcrit.h"

namespace {

std::string take(pcrit_text* t) {
  std::string s(pcrit_text_data(t), pcrit_text_length(t));
  pcrit_text_free(t);
  return s;
}

pcrit_graph* parse(const char* g6) {
  pcrit_graph* g = nullptr;
  EXPECT_EQ(pcrit_graph_parse_graph6(g6, &g), PCRIT_OK);
  return g;
}

}  // namespace

TEST(CApi, Version) {
  EXPECT_STRNE(pcrit_version(), "");
  EXPECT_STREQ(pcrit_status_string(PCRIT_OK), "ok");
}

TEST(CApi, ParseAndEmit) {
  pcrit_graph* g = parse("Dhc");
  int n = 0, m = 0;
  EXPECT_EQ(pcrit_graph_order(g, &n), PCRIT_OK);
  EXPECT_EQ(pcrit_graph_size(g, &m), PCRIT_OK);
  EXPECT_EQ(n, 5);
  EXPECT_EQ(m, 5);
  pcrit_text* t = nullptr;
  ASSERT_EQ(pcrit_graph_emit_graph6(g, &t), PCRIT_OK);
  EXPECT_EQ(take(t), "Dhc");
  pcrit_graph_free(g);
}

TEST(CApi, ParseErrors) {
  pcrit_graph* g = nullptr;
  EXPECT_EQ(pcrit_graph_parse_graph6("", &g), PCRIT_ERR_PARSE_HEADER);
  EXPECT_EQ(pcrit_graph_parse_graph6("D?", &g), PCRIT_ERR_PARSE_TRUNCATED);
  EXPECT_EQ(pcrit_graph_parse_graph6("D?{?", &g), PCRIT_ERR_PARSE_TRAILING);
  EXPECT_STRNE(pcrit_last_error(), "");
  EXPECT_EQ(g, nullptr);
  EXPECT_EQ(pcrit_graph_parse_graph6(nullptr, &g), PCRIT_ERR_NULL_ARGUMENT);
  EXPECT_EQ(pcrit_graph_parse_graph6("Dhc", nullptr), PCRIT_ERR_NULL_ARGUMENT);
}

TEST(CApi, FromEdges) {
  const int edges[] = {0, 1, 1, 2, 2, 3};
  pcrit_graph* g = nullptr;
  ASSERT_EQ(pcrit_graph_from_edges(4, edges, 3, &g), PCRIT_OK);
  int chi = 0;
  int witness[4] = {};
  ASSERT_EQ(pcrit_chi_rho(g, 0, &chi, witness), PCRIT_OK);
  EXPECT_EQ(chi, 3);
  int ok = 0;
  ASSERT_EQ(pcrit_is_packing_coloring(g, witness, &ok), PCRIT_OK);
  EXPECT_EQ(ok, 1);
  const int bad_colors[] = {1, 1, 2, 3};
  ASSERT_EQ(pcrit_is_packing_coloring(g, bad_colors, &ok), PCRIT_OK);
  EXPECT_EQ(ok, 0);
  pcrit_graph_free(g);

  const int loop[] = {0, 0};
  EXPECT_EQ(pcrit_graph_from_edges(2, loop, 1, &g), PCRIT_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ChiRhoJson) {
  pcrit_graph* g = parse("E{O_");
  pcrit_text* t = nullptr;
  ASSERT_EQ(pcrit_chi_rho_json(g, 0, 1, &t), PCRIT_OK);
  const auto j = nlohmann::json::parse(take(t));
  EXPECT_EQ(j["chi_rho"], 4);
  EXPECT_EQ(j["witness"].size(), 6u);
  pcrit_graph_free(g);
}

TEST(CApi, Criticality) {
  pcrit_graph* g = parse("Ch");
  int crit = 0;
  ASSERT_EQ(pcrit_is_edge_critical(g, 0, &crit), PCRIT_OK);
  EXPECT_EQ(crit, 1);
  pcrit_text* t = nullptr;
  ASSERT_EQ(pcrit_criticality_json(g, "both", 0, 0, &t), PCRIT_OK);
  const auto j = nlohmann::json::parse(take(t));
  EXPECT_EQ(j["edge_critical"], true);
  EXPECT_EQ(j["vertex_critical"], true);
  EXPECT_EQ(pcrit_criticality_json(g, "sideways", 0, 0, &t), PCRIT_ERR_UNKNOWN_NAME);
  pcrit_graph_free(g);

  g = parse("Cl");
  ASSERT_EQ(pcrit_is_edge_critical(g, 0, &crit), PCRIT_OK);
  EXPECT_EQ(crit, 0);
  pcrit_graph_free(g);
}

TEST(CApi, Generate) {
  const int params[] = {5, 3};
  pcrit_graph_list* list = nullptr;
  ASSERT_EQ(pcrit_generate("realization", params, 2, &list), PCRIT_OK);
  size_t count = 0;
  ASSERT_EQ(pcrit_graph_list_count(list, &count), PCRIT_OK);
  EXPECT_EQ(count, 1u);
  pcrit_text* t = nullptr;
  ASSERT_EQ(pcrit_graph_list_labels_json(list, 0, &t), PCRIT_OK);
  const auto labels = nlohmann::json::parse(take(t));
  EXPECT_TRUE(labels["edges"].contains("e"));
  pcrit_graph* g = nullptr;
  ASSERT_EQ(pcrit_graph_list_get(list, 0, &g), PCRIT_OK);
  int chi = 0;
  ASSERT_EQ(pcrit_chi_rho(g, 0, &chi, nullptr), PCRIT_OK);
  EXPECT_EQ(chi, 5);
  EXPECT_EQ(pcrit_graph_list_get(list, 1, &g), PCRIT_ERR_INVALID_ARGUMENT);
  pcrit_graph_free(g);
  pcrit_graph_list_free(list);
  EXPECT_EQ(pcrit_generate("hypercube", nullptr, 0, &list), PCRIT_ERR_UNKNOWN_NAME);
}

TEST(CApi, ListParse) {
  pcrit_graph_list* list = nullptr;
  ASSERT_EQ(pcrit_graph_list_parse("A_\n\nBw\nCh\n", &list), PCRIT_OK);
  size_t count = 0;
  pcrit_graph_list_count(list, &count);
  EXPECT_EQ(count, 3u);
  pcrit_graph_list_free(list);
  EXPECT_EQ(pcrit_graph_list_parse("A_\nD?\n", &list), PCRIT_ERR_PARSE_TRUNCATED);
}

TEST(CApi, Verify) {
  pcrit_graph_list* corpus = nullptr;
  ASSERT_EQ(pcrit_builtin_corpus("connected-le5", &corpus), PCRIT_OK);
  pcrit_text* t = nullptr;
  size_t bad = 99;
  ASSERT_EQ(pcrit_verify("small-critical-3", corpus, 2, 0, &t, &bad), PCRIT_OK);
  EXPECT_EQ(bad, 0u);
  const auto j = nlohmann::json::parse(take(t));
  EXPECT_EQ(j["flagged"], nlohmann::json::array({"Bw", "CR"}));
  ASSERT_EQ(pcrit_verify("edge-bound", corpus, 1, 0, &t, &bad), PCRIT_OK);
  EXPECT_EQ(bad, 1u);
  pcrit_text_free(t);
  EXPECT_EQ(pcrit_verify("nope", corpus, 1, 0, &t, &bad), PCRIT_ERR_UNKNOWN_NAME);
  pcrit_graph_list_free(corpus);
  EXPECT_EQ(pcrit_builtin_corpus("all-le40", &corpus), PCRIT_ERR_TOO_LARGE);
}

TEST(CApi, TheoremIds) {
  pcrit_text* t = nullptr;
  ASSERT_EQ(pcrit_theorem_ids(&t), PCRIT_OK);
  EXPECT_NE(take(t).find("diam2\n"), std::string::npos);
}

TEST(CApi, FreeNullIsSafe) {
  pcrit_graph_free(nullptr);
  pcrit_graph_list_free(nullptr);
  pcrit_text_free(nullptr);
}
