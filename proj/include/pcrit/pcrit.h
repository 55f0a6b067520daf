/* C interface to the packing-coloring library.
 *
 * Every function returns a pcrit_status. On failure pcrit_last_error()
 * describes the problem for the calling thread. Objects returned through
 * out-parameters are owned by the caller and released with the matching
 * *_free function. Timeouts are in milliseconds; 0 means none.
 */
#ifndef PCRIT_PCRIT_H
#define PCRIT_PCRIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PCRIT_API __declspec(dllexport)
#else
#define PCRIT_API __attribute__((visibility("default")))
#endif

typedef enum pcrit_status {
  PCRIT_OK = 0,
  PCRIT_ERR_NULL_ARGUMENT = 1,
  PCRIT_ERR_INVALID_ARGUMENT = 2,
  PCRIT_ERR_PARSE_HEADER = 3,
  PCRIT_ERR_PARSE_TRUNCATED = 4,
  PCRIT_ERR_PARSE_TRAILING = 5,
  PCRIT_ERR_PARSE_BYTE = 6,
  PCRIT_ERR_MISSING = 7, /* edge or vertex not in the graph */
  PCRIT_ERR_PRECONDITION = 8,
  PCRIT_ERR_TOO_LARGE = 9,
  PCRIT_ERR_TIMEOUT = 10,
  PCRIT_ERR_UNKNOWN_NAME = 11,
  PCRIT_ERR_BOUND_VIOLATION = 12,
  PCRIT_ERR_INTERNAL = 13
} pcrit_status;

typedef struct pcrit_graph pcrit_graph;
typedef struct pcrit_graph_list pcrit_graph_list;
typedef struct pcrit_text pcrit_text;

PCRIT_API const char* pcrit_version(void);
PCRIT_API const char* pcrit_status_string(pcrit_status status);
/* Message of the last failed call on this thread, "" if none. */
PCRIT_API const char* pcrit_last_error(void);

/* Text */
PCRIT_API const char* pcrit_text_data(const pcrit_text* text);
PCRIT_API size_t pcrit_text_length(const pcrit_text* text);
PCRIT_API void pcrit_text_free(pcrit_text* text);

/* Graphs */
PCRIT_API pcrit_status pcrit_graph_parse_graph6(const char* line, pcrit_graph** out);
/* edges holds 2*edge_count vertex ids. */
PCRIT_API pcrit_status pcrit_graph_from_edges(int order, const int* edges, size_t edge_count,
                                              pcrit_graph** out);
PCRIT_API pcrit_status pcrit_graph_emit_graph6(const pcrit_graph* graph, pcrit_text** out);
PCRIT_API pcrit_status pcrit_graph_order(const pcrit_graph* graph, int* out);
PCRIT_API pcrit_status pcrit_graph_size(const pcrit_graph* graph, int* out);
PCRIT_API void pcrit_graph_free(pcrit_graph* graph);

/* Graph lists */
/* One graph6 graph per line; blank lines are skipped. */
PCRIT_API pcrit_status pcrit_graph_list_parse(const char* text, pcrit_graph_list** out);
PCRIT_API pcrit_status pcrit_graph_list_count(const pcrit_graph_list* list, size_t* out);
/* Copy of the index-th graph. */
PCRIT_API pcrit_status pcrit_graph_list_get(const pcrit_graph_list* list, size_t index,
                                            pcrit_graph** out);
/* {"vertices": {...}, "edges": {...}} labels of a generated graph. */
PCRIT_API pcrit_status pcrit_graph_list_labels_json(const pcrit_graph_list* list, size_t index,
                                                    pcrit_text** out);
PCRIT_API void pcrit_graph_list_free(pcrit_graph_list* list);

/* Generators: family names as accepted by the pcrit gen command. */
PCRIT_API pcrit_status pcrit_generate(const char* family, const int* params, size_t param_count,
                                      pcrit_graph_list** out);
PCRIT_API pcrit_status pcrit_builtin_corpus(const char* name, pcrit_graph_list** out);

/* Solver. witness may be NULL, else it receives order() colors. */
PCRIT_API pcrit_status pcrit_chi_rho(const pcrit_graph* graph, int timeout_ms, int* value,
                                     int* witness);
PCRIT_API pcrit_status pcrit_chi_rho_json(const pcrit_graph* graph, int timeout_ms,
                                          int with_witness, pcrit_text** out);
/* 1 if colors is a packing coloring of graph, 0 otherwise. */
PCRIT_API pcrit_status pcrit_is_packing_coloring(const pcrit_graph* graph, const int* colors,
                                                 int* out);

/* Criticality; mode is "edge", "vertex" or "both". */
PCRIT_API pcrit_status pcrit_criticality_json(const pcrit_graph* graph, const char* mode,
                                              int timeout_ms, int with_witness,
                                              pcrit_text** out);
PCRIT_API pcrit_status pcrit_is_edge_critical(const pcrit_graph* graph, int timeout_ms,
                                              int* out);

/* Theorem verification */
/* Newline-separated theorem ids. */
PCRIT_API pcrit_status pcrit_theorem_ids(pcrit_text** out);
/* Summary JSON in *out; *disagreements receives the number of disagreements. */
PCRIT_API pcrit_status pcrit_verify(const char* theorem, const pcrit_graph_list* corpus,
                                    int jobs, int timeout_ms, pcrit_text** out,
                                    size_t* disagreements);

#ifdef __cplusplus
}
#endif

#endif
