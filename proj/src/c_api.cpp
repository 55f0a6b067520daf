#include "pcrit/pcrit.h"

#include <chrono>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "pcrit/characterizations.hpp"
#include "pcrit/corpus.hpp"
#include "pcrit/criticality.hpp"
#include "pcrit/error.hpp"
#include "pcrit/families.hpp"
#include "pcrit/graph6.hpp"
#include "pcrit/report.hpp"
#include "pcrit/solver.hpp"

struct pcrit_graph {
  pcrit::Graph g;
};

struct pcrit_graph_list {
  std::vector<pcrit::LabeledGraph> items;
};

struct pcrit_text {
  std::string s;
};

namespace {

thread_local std::string last_error;

struct NullArgument {};

pcrit_status status_of(pcrit::Errc code) {
  using pcrit::Errc;
  switch (code) {
    case Errc::invalid_argument: return PCRIT_ERR_INVALID_ARGUMENT;
    case Errc::graph6_bad_header: return PCRIT_ERR_PARSE_HEADER;
    case Errc::graph6_truncated: return PCRIT_ERR_PARSE_TRUNCATED;
    case Errc::graph6_trailing: return PCRIT_ERR_PARSE_TRAILING;
    case Errc::graph6_bad_byte: return PCRIT_ERR_PARSE_BYTE;
    case Errc::missing_edge:
    case Errc::missing_vertex: return PCRIT_ERR_MISSING;
    case Errc::precondition: return PCRIT_ERR_PRECONDITION;
    case Errc::too_large: return PCRIT_ERR_TOO_LARGE;
    case Errc::timeout: return PCRIT_ERR_TIMEOUT;
    case Errc::bound_violation: return PCRIT_ERR_BOUND_VIOLATION;
    case Errc::unknown_name: return PCRIT_ERR_UNKNOWN_NAME;
    case Errc::internal: return PCRIT_ERR_INTERNAL;
  }
  return PCRIT_ERR_INTERNAL;
}

template <class F>
pcrit_status try_(F f) {
  try {
    f();
  } catch (const NullArgument&) {
    last_error = "null argument";
    return PCRIT_ERR_NULL_ARGUMENT;
  } catch (const pcrit::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PCRIT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PCRIT_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return PCRIT_ERR_INTERNAL;
  }
  last_error.clear();
  return PCRIT_OK;
}

template <class T>
T& deref(T* p) {
  if (p == nullptr) throw NullArgument{};
  return *p;
}

const char* cstr(const char* p) {
  if (p == nullptr) throw NullArgument{};
  return p;
}

pcrit::SolveOptions solve_options(int timeout_ms) {
  pcrit::SolveOptions o;
  if (timeout_ms < 0) throw pcrit::Error(pcrit::Errc::invalid_argument, "negative timeout");
  if (timeout_ms > 0) o.timeout = std::chrono::milliseconds(timeout_ms);
  return o;
}

pcrit_text* make_text(std::string s) { return new pcrit_text{std::move(s)}; }

}  // namespace

extern "C" const char* pcrit_version(void) { return PCRIT_VERSION; }

extern "C" const char* pcrit_status_string(pcrit_status status) {
  switch (status) {
    case PCRIT_OK: return "ok";
    case PCRIT_ERR_NULL_ARGUMENT: return "null argument";
    case PCRIT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PCRIT_ERR_PARSE_HEADER: return "graph6: malformed header";
    case PCRIT_ERR_PARSE_TRUNCATED: return "graph6: truncated body";
    case PCRIT_ERR_PARSE_TRAILING: return "graph6: trailing data";
    case PCRIT_ERR_PARSE_BYTE: return "graph6: byte out of range";
    case PCRIT_ERR_MISSING: return "missing edge or vertex";
    case PCRIT_ERR_PRECONDITION: return "precondition violated";
    case PCRIT_ERR_TOO_LARGE: return "instance too large";
    case PCRIT_ERR_TIMEOUT: return "timeout";
    case PCRIT_ERR_UNKNOWN_NAME: return "unknown name";
    case PCRIT_ERR_BOUND_VIOLATION: return "bound violation";
    case PCRIT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

extern "C" const char* pcrit_last_error(void) { return last_error.c_str(); }

extern "C" const char* pcrit_text_data(const pcrit_text* text) {
  return text ? text->s.c_str() : nullptr;
}

extern "C" size_t pcrit_text_length(const pcrit_text* text) { return text ? text->s.size() : 0; }

extern "C" void pcrit_text_free(pcrit_text* text) { delete text; }

extern "C" pcrit_status pcrit_graph_parse_graph6(const char* line, pcrit_graph** out) {
  return try_([&] {
    deref(out) = nullptr;
    pcrit::Graph g = pcrit::parse_graph6(cstr(line));
    *out = new pcrit_graph{std::move(g)};
  });
}

extern "C" pcrit_status pcrit_graph_from_edges(int order, const int* edges, size_t edge_count,
                                               pcrit_graph** out) {
  return try_([&] {
    deref(out) = nullptr;
    if (edge_count > 0) deref(edges);
    pcrit::GraphBuilder b(order);
    for (size_t i = 0; i < edge_count; ++i) b.add_edge(edges[2 * i], edges[2 * i + 1]);
    *out = new pcrit_graph{b.build()};
  });
}

extern "C" pcrit_status pcrit_graph_emit_graph6(const pcrit_graph* graph, pcrit_text** out) {
  return try_([&] {
    deref(out) = nullptr;
    *out = make_text(pcrit::emit_graph6(deref(graph).g));
  });
}

extern "C" pcrit_status pcrit_graph_order(const pcrit_graph* graph, int* out) {
  return try_([&] { deref(out) = deref(graph).g.order(); });
}

extern "C" pcrit_status pcrit_graph_size(const pcrit_graph* graph, int* out) {
  return try_([&] { deref(out) = deref(graph).g.size(); });
}

extern "C" void pcrit_graph_free(pcrit_graph* graph) { delete graph; }

extern "C" pcrit_status pcrit_graph_list_parse(const char* text, pcrit_graph_list** out) {
  return try_([&] {
    deref(out) = nullptr;
    std::istringstream in(cstr(text));
    auto list = std::make_unique<pcrit_graph_list>();
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      list->items.push_back({pcrit::parse_graph6(line), {}, {}});
    }
    *out = list.release();
  });
}

extern "C" pcrit_status pcrit_graph_list_count(const pcrit_graph_list* list, size_t* out) {
  return try_([&] { deref(out) = deref(list).items.size(); });
}

extern "C" pcrit_status pcrit_graph_list_get(const pcrit_graph_list* list, size_t index,
                                             pcrit_graph** out) {
  return try_([&] {
    deref(out) = nullptr;
    const auto& items = deref(list).items;
    if (index >= items.size())
      throw pcrit::Error(pcrit::Errc::invalid_argument, "list index out of range");
    *out = new pcrit_graph{items[index].graph};
  });
}

extern "C" pcrit_status pcrit_graph_list_labels_json(const pcrit_graph_list* list, size_t index,
                                                     pcrit_text** out) {
  return try_([&] {
    deref(out) = nullptr;
    const auto& items = deref(list).items;
    if (index >= items.size())
      throw pcrit::Error(pcrit::Errc::invalid_argument, "list index out of range");
    const pcrit::LabeledGraph& lg = items[index];
    nlohmann::json edges = nlohmann::json::object();
    for (const auto& [name, e] : lg.edges) edges[name] = {e.u, e.v};
    nlohmann::json j{{"vertices", lg.vertices}, {"edges", edges}};
    *out = make_text(j.dump());
  });
}

extern "C" void pcrit_graph_list_free(pcrit_graph_list* list) { delete list; }

extern "C" pcrit_status pcrit_generate(const char* family, const int* params, size_t param_count,
                                       pcrit_graph_list** out) {
  return try_([&] {
    deref(out) = nullptr;
    if (param_count > 0) deref(params);
    std::span<const int> p(params, param_count);
    auto list = std::make_unique<pcrit_graph_list>();
    list->items = pcrit::generate_family(cstr(family), p);
    *out = list.release();
  });
}

extern "C" pcrit_status pcrit_builtin_corpus(const char* name, pcrit_graph_list** out) {
  return try_([&] {
    deref(out) = nullptr;
    auto list = std::make_unique<pcrit_graph_list>();
    for (pcrit::Graph& g : pcrit::builtin_corpus(cstr(name)))
      list->items.push_back({std::move(g), {}, {}});
    *out = list.release();
  });
}

extern "C" pcrit_status pcrit_chi_rho(const pcrit_graph* graph, int timeout_ms, int* value,
                                      int* witness) {
  return try_([&] {
    const auto r = pcrit::packing_chromatic_number(deref(graph).g, solve_options(timeout_ms));
    deref(value) = r.value;
    if (witness)
      for (std::size_t i = 0; i < r.witness.colors.size(); ++i) witness[i] = r.witness.colors[i];
  });
}

extern "C" pcrit_status pcrit_chi_rho_json(const pcrit_graph* graph, int timeout_ms,
                                           int with_witness, pcrit_text** out) {
  return try_([&] {
    deref(out) = nullptr;
    const pcrit::Graph& g = deref(graph).g;
    const auto r = pcrit::packing_chromatic_number(g, solve_options(timeout_ms));
    *out = make_text(pcrit::chi_rho_json(g, r, with_witness != 0).dump());
  });
}

extern "C" pcrit_status pcrit_is_packing_coloring(const pcrit_graph* graph, const int* colors,
                                                  int* out) {
  return try_([&] {
    const pcrit::Graph& g = deref(graph).g;
    if (g.order() > 0) deref(colors);
    pcrit::PackingColoring c{std::vector<int>(colors, colors + g.order())};
    deref(out) = pcrit::is_valid_packing_coloring(g, c) ? 1 : 0;
  });
}

extern "C" pcrit_status pcrit_criticality_json(const pcrit_graph* graph, const char* mode,
                                               int timeout_ms, int with_witness,
                                               pcrit_text** out) {
  return try_([&] {
    deref(out) = nullptr;
    const pcrit::Graph& g = deref(graph).g;
    const auto options = pcrit::criticality_options(
        pcrit::criticality_mode_from_string(cstr(mode)), with_witness != 0,
        solve_options(timeout_ms));
    *out = make_text(pcrit::criticality_json(g, pcrit::criticality_report(g, options)).dump());
  });
}

extern "C" pcrit_status pcrit_is_edge_critical(const pcrit_graph* graph, int timeout_ms,
                                               int* out) {
  return try_([&] {
    pcrit::CriticalityOptions o;
    o.vertices = false;
    o.solve = solve_options(timeout_ms);
    deref(out) = pcrit::criticality_report(deref(graph).g, o).is_edge_critical ? 1 : 0;
  });
}

extern "C" pcrit_status pcrit_theorem_ids(pcrit_text** out) {
  return try_([&] {
    deref(out) = nullptr;
    std::string s;
    for (const auto& id : pcrit::theorem_ids()) s += id + "\n";
    *out = make_text(std::move(s));
  });
}

extern "C" pcrit_status pcrit_verify(const char* theorem, const pcrit_graph_list* corpus,
                                     int jobs, int timeout_ms, pcrit_text** out,
                                     size_t* disagreements) {
  return try_([&] {
    deref(out) = nullptr;
    std::vector<pcrit::Graph> graphs;
    for (const auto& item : deref(corpus).items) graphs.push_back(item.graph);
    pcrit::VerifyOptions o;
    o.jobs = jobs;
    o.solve = solve_options(timeout_ms);
    const pcrit::VerifySummary s = pcrit::verify_theorem(cstr(theorem), graphs, o);
    if (disagreements) *disagreements = s.disagreements.size();
    *out = make_text(pcrit::summary_json(s).dump());
  });
}
