// pcrit: command-line front end over the C API.
//
// Exit codes: 0 ok, 1 disagreement found, 2 usage error, 3 graph6 parse
// error, 4 any other failure.

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "pcrit/pcrit.h"

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kDisagreement = 1, kUsage = 2, kParse = 3, kFailure = 4 };

struct Failure {
  int code;
  std::string message;
};

int exit_for(pcrit_status s) {
  switch (s) {
    case PCRIT_ERR_PARSE_HEADER:
    case PCRIT_ERR_PARSE_TRUNCATED:
    case PCRIT_ERR_PARSE_TRAILING:
    case PCRIT_ERR_PARSE_BYTE: return kParse;
    case PCRIT_ERR_INVALID_ARGUMENT:
    case PCRIT_ERR_UNKNOWN_NAME:
    case PCRIT_ERR_TOO_LARGE:
    case PCRIT_ERR_PRECONDITION: return kUsage;
    default: return kFailure;
  }
}

void check(pcrit_status s, const std::string& what) {
  if (s != PCRIT_OK) throw Failure{exit_for(s), what + ": " + pcrit_last_error()};
}

struct TextDel {
  void operator()(pcrit_text* t) const { pcrit_text_free(t); }
};
struct GraphDel {
  void operator()(pcrit_graph* g) const { pcrit_graph_free(g); }
};
struct ListDel {
  void operator()(pcrit_graph_list* l) const { pcrit_graph_list_free(l); }
};
using Text = std::unique_ptr<pcrit_text, TextDel>;
using GraphPtr = std::unique_ptr<pcrit_graph, GraphDel>;
using List = std::unique_ptr<pcrit_graph_list, ListDel>;

std::string take(pcrit_text* raw) {
  Text t(raw);
  return std::string(pcrit_text_data(t.get()), pcrit_text_length(t.get()));
}

std::string sha256(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string read_source(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot open " + path};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct Corpus {
  List list;
  std::string text;  // graph6 lines, for the digest
};

Corpus graphs_from_text(std::string text) {
  pcrit_graph_list* raw = nullptr;
  check(pcrit_graph_list_parse(text.c_str(), &raw), "parse");
  return {List(raw), std::move(text)};
}

Corpus load_corpus(const std::string& where) {
  if (where.rfind("builtin:", 0) == 0) {
    pcrit_graph_list* raw = nullptr;
    check(pcrit_builtin_corpus(where.substr(8).c_str(), &raw), "corpus");
    Corpus c{List(raw), {}};
    size_t n = 0;
    check(pcrit_graph_list_count(c.list.get(), &n), "corpus");
    for (size_t i = 0; i < n; ++i) {
      pcrit_graph* g = nullptr;
      check(pcrit_graph_list_get(c.list.get(), i, &g), "corpus");
      GraphPtr hold(g);
      pcrit_text* t = nullptr;
      check(pcrit_graph_emit_graph6(g, &t), "corpus");
      c.text += take(t) + "\n";
    }
    return c;
  }
  return graphs_from_text(read_source(where));
}

std::vector<GraphPtr> graphs_of(const List& list) {
  size_t n = 0;
  check(pcrit_graph_list_count(list.get(), &n), "input");
  std::vector<GraphPtr> out;
  for (size_t i = 0; i < n; ++i) {
    pcrit_graph* g = nullptr;
    check(pcrit_graph_list_get(list.get(), i, &g), "input");
    out.emplace_back(g);
  }
  return out;
}

struct Common {
  int timeout_ms = 0;
  bool witness = false;
  std::string format = "json";
  int jobs = 1;
};

json envelope(const std::vector<std::string>& argv, const std::string& digest, json results,
              std::chrono::steady_clock::time_point start) {
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return {{"command", argv},
          {"input_digest", digest},
          {"results", std::move(results)},
          {"timing", {{"elapsed_ms", ms}}},
          {"version", pcrit_version()}};
}

// Runs `f` for one graph; a timeout becomes a result entry, not a failure.
json per_graph(pcrit_graph* g, const std::function<pcrit_status(pcrit_text**)>& f) {
  pcrit_text* t = nullptr;
  const pcrit_status s = f(&t);
  if (s == PCRIT_ERR_TIMEOUT) {
    pcrit_text* g6 = nullptr;
    check(pcrit_graph_emit_graph6(g, &g6), "emit");
    return {{"graph6", take(g6)}, {"status", "timeout"}};
  }
  check(s, "solve");
  json j = json::parse(take(t));
  j["status"] = "ok";
  return j;
}

std::string join(const json& arr) {
  std::string s;
  for (const auto& x : arr) {
    if (!s.empty()) s += ",";
    s += x.dump();
  }
  return s;
}

int cmd_chirho(const std::vector<std::string>& argv, const std::string& input, const Common& o) {
  const auto start = std::chrono::steady_clock::now();
  Corpus c = graphs_from_text(read_source(input));
  json results = json::array();
  for (auto& g : graphs_of(c.list))
    results.push_back(per_graph(g.get(), [&](pcrit_text** t) {
      return pcrit_chi_rho_json(g.get(), o.timeout_ms, o.witness ? 1 : 0, t);
    }));
  if (o.format == "tsv") {
    for (const auto& r : results) {
      std::cout << r["graph6"].get<std::string>() << '\t'
                << (r["status"] == "ok" ? std::to_string(r["chi_rho"].get<int>()) : "timeout");
      if (o.witness && r.contains("witness")) std::cout << '\t' << join(r["witness"]);
      std::cout << '\n';
    }
    return kOk;
  }
  std::cout << envelope(argv, sha256(c.text), std::move(results), start).dump() << '\n';
  return kOk;
}

int cmd_critical(const std::vector<std::string>& argv, const std::string& input,
                 const std::string& mode, const Common& o) {
  const auto start = std::chrono::steady_clock::now();
  Corpus c = graphs_from_text(read_source(input));
  json results = json::array();
  for (auto& g : graphs_of(c.list))
    results.push_back(per_graph(g.get(), [&](pcrit_text** t) {
      return pcrit_criticality_json(g.get(), mode.c_str(), o.timeout_ms, o.witness ? 1 : 0, t);
    }));
  if (o.format == "tsv") {
    auto flag = [](const json& r, const char* key) {
      return r.contains(key) ? (r[key].get<bool>() ? "true" : "false") : "-";
    };
    for (const auto& r : results) {
      std::cout << r["graph6"].get<std::string>() << '\t';
      if (r["status"] != "ok") {
        std::cout << "timeout\n";
        continue;
      }
      std::cout << r["chi_rho"].get<int>() << '\t' << flag(r, "edge_critical") << '\t'
                << flag(r, "vertex_critical") << '\n';
    }
    return kOk;
  }
  std::cout << envelope(argv, sha256(c.text), std::move(results), start).dump() << '\n';
  return kOk;
}

int cmd_gen(const std::string& family, const std::vector<int>& params,
            const std::string& labels_path) {
  pcrit_graph_list* raw = nullptr;
  check(pcrit_generate(family.c_str(), params.data(), params.size(), &raw), "gen");
  List list(raw);
  size_t n = 0;
  check(pcrit_graph_list_count(list.get(), &n), "gen");
  std::ofstream labels;
  if (!labels_path.empty()) {
    labels.open(labels_path);
    if (!labels) throw Failure{kUsage, "cannot write " + labels_path};
  }
  for (size_t i = 0; i < n; ++i) {
    pcrit_graph* g = nullptr;
    check(pcrit_graph_list_get(list.get(), i, &g), "gen");
    GraphPtr hold(g);
    pcrit_text* t = nullptr;
    check(pcrit_graph_emit_graph6(g, &t), "gen");
    const std::string g6 = take(t);
    std::cout << g6 << '\n';
    if (labels) {
      pcrit_text* l = nullptr;
      check(pcrit_graph_list_labels_json(list.get(), i, &l), "gen");
      json j = json::parse(take(l));
      j["graph6"] = g6;
      labels << j.dump() << '\n';
    }
  }
  return kOk;
}

int cmd_verify(const std::vector<std::string>& argv, const std::string& theorem,
               const std::string& corpus, const Common& o) {
  const auto start = std::chrono::steady_clock::now();
  Corpus c = load_corpus(corpus);
  pcrit_text* t = nullptr;
  size_t disagreements = 0;
  check(pcrit_verify(theorem.c_str(), c.list.get(), o.jobs, o.timeout_ms, &t, &disagreements),
        "verify");
  json summary = json::parse(take(t));
  if (o.format == "tsv") {
    std::cout << summary["theorem"].get<std::string>() << '\t' << summary["checked"] << '\t'
              << summary["skipped"] << '\t' << disagreements << '\t'
              << summary["timeouts"].size() << '\n';
    for (const auto& d : summary["disagreements"])
      std::cout << "disagreement\t" << d["graph6"].get<std::string>() << '\n';
  } else {
    for (const auto& d : summary["disagreements"]) std::cout << d.dump() << '\n';
    std::cout << envelope(argv, sha256(c.text), summary, start).dump() << '\n';
  }
  return disagreements == 0 ? kOk : kDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  CLI::App app{"Packing chromatic numbers, criticality and theorem checks"};
  app.set_version_flag("--version", std::string(pcrit_version()));
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--timeout", common.timeout_ms, "Per-solve limit in ms (0 = none)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"json", "tsv"}));
  };

  std::string input = "-";
  std::string mode = "both";
  auto* chirho = app.add_subcommand("chirho", "Packing chromatic number of each input graph");
  chirho->add_option("input", input, "graph6 file, or - for stdin");
  chirho->add_flag("--witness", common.witness, "Include optimal colorings");
  add_common(chirho);

  auto* critical = app.add_subcommand("critical", "Criticality report of each input graph");
  critical->add_option("input", input, "graph6 file, or - for stdin");
  critical->add_option("--mode", mode, "edge, vertex or both")
      ->check(CLI::IsMember({"edge", "vertex", "both"}));
  critical->add_flag("--witness", common.witness, "Include colorings of each deletion");
  add_common(critical);

  std::string family;
  std::vector<int> params;
  std::string labels;
  auto* gen = app.add_subcommand("gen", "Write a generated family as graph6 lines");
  gen->add_option("family", family, "Family name")->required();
  gen->add_option("params", params, "Integer parameters");
  gen->add_option("--labels", labels, "Write vertex/edge labels as JSON lines to this file");

  std::string theorem;
  std::string corpus = "-";
  auto* verify = app.add_subcommand("verify", "Check a theorem over a corpus");
  verify->add_option("theorem", theorem, "Theorem id")->required();
  verify->add_option("--corpus", corpus, "builtin:NAME, a graph6 file, or - for stdin");
  verify->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_common(verify);

  app.add_subcommand("theorems", "List theorem ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*chirho) return cmd_chirho(args, input, common);
    if (*critical) return cmd_critical(args, input, mode, common);
    if (*gen) return cmd_gen(family, params, labels);
    if (*verify) return cmd_verify(args, theorem, corpus, common);
    pcrit_text* t = nullptr;
    check(pcrit_theorem_ids(&t), "theorems");
    std::cout << take(t);
    return kOk;
  } catch (const Failure& f) {
    std::cerr << "pcrit: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "pcrit: " << e.what() << '\n';
    return kFailure;
  }
}
