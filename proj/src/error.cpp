#include "pcrit/error.hpp"

namespace pcrit {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::graph6_bad_header: return "graph6: malformed header";
    case Errc::graph6_truncated: return "graph6: truncated body";
    case Errc::graph6_trailing: return "graph6: trailing data";
    case Errc::graph6_bad_byte: return "graph6: byte out of range";
    case Errc::missing_edge: return "edge not in graph";
    case Errc::missing_vertex: return "vertex not in graph";
    case Errc::precondition: return "precondition failed";
    case Errc::too_large: return "instance too large";
    case Errc::timeout: return "timeout";
    case Errc::bound_violation: return "bound violation";
    case Errc::unknown_name: return "unknown name";
    case Errc::internal: return "internal error";
  }
  return "unknown error";
}

}  // namespace pcrit
