#pragma once

#include <string>
#include <string_view>

#include "pcrit/graph.hpp"

namespace pcrit {

/// Decodes one graph6 line. A trailing "\n" or "\r\n" and an optional
/// ">>graph6<<" prefix are accepted. Errors are reported as Error with code
/// graph6_bad_header, graph6_truncated, graph6_trailing or graph6_bad_byte.
Graph parse_graph6(std::string_view line);

/// Minimal-length graph6 encoding of `g` in its own vertex order, without a
/// trailing newline.
std::string emit_graph6(const Graph& g);

}  // namespace pcrit
