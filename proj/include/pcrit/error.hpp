#pragma once

#include <stdexcept>
#include <string>

namespace pcrit {

enum class Errc {
  invalid_argument,
  graph6_bad_header,
  graph6_truncated,
  graph6_trailing,
  graph6_bad_byte,
  missing_edge,
  missing_vertex,
  precondition,   // input graph has the wrong shape for the operation
  too_large,
  timeout,
  bound_violation,
  unknown_name,
  internal,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace pcrit
