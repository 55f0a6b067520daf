#include "pcrit/graph6.hpp"

#include <cstdint>

#include "pcrit/error.hpp"

namespace pcrit {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

bool in_range(char c) {
  auto b = static_cast<unsigned char>(c);
  return b >= kBias && b <= kMaxByte;
}

// Reads the vertex count; returns the number of header bytes consumed.
std::size_t read_order(std::string_view s, long long& n) {
  if (s.empty()) throw Error(Errc::graph6_bad_header, "graph6: empty line");
  if (!in_range(s[0])) throw Error(Errc::graph6_bad_header, "graph6: invalid order byte");
  if (static_cast<unsigned char>(s[0]) != kMaxByte) {
    n = s[0] - kBias;
    return 1;
  }
  std::size_t width = 3;
  std::size_t start = 1;
  if (s.size() > 1 && static_cast<unsigned char>(s[1]) == kMaxByte) {
    width = 6;
    start = 2;
  }
  if (s.size() < start + width)
    throw Error(Errc::graph6_bad_header, "graph6: extended order header is too short");
  n = 0;
  for (std::size_t i = start; i < start + width; ++i) {
    if (!in_range(s[i])) throw Error(Errc::graph6_bad_header, "graph6: invalid order byte");
    n = (n << 6) | (s[i] - kBias);
  }
  return start + width;
}

void write_order(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  int width = 3;
  out.push_back(static_cast<char>(kMaxByte));
  if (n > 258047) {
    out.push_back(static_cast<char>(kMaxByte));
    width = 6;
  }
  for (int i = width - 1; i >= 0; --i)
    out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + kBias));
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (line.substr(0, kPrefix.size()) == kPrefix) line.remove_prefix(kPrefix.size());

  long long n = 0;
  std::size_t pos = read_order(line, n);
  if (n > 100000) throw Error(Errc::too_large, "graph6: vertex count " + std::to_string(n));

  const long long bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() < pos + body)
    throw Error(Errc::graph6_truncated, "graph6: expected " + std::to_string(body) +
                                            " body bytes, found " +
                                            std::to_string(line.size() - pos));
  if (line.size() > pos + body)
    throw Error(Errc::graph6_trailing,
                "graph6: " + std::to_string(line.size() - pos - body) + " trailing bytes");

  GraphBuilder b(static_cast<int>(n));
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      char c = line[pos + k / 6];
      if (!in_range(c)) throw Error(Errc::graph6_bad_byte, "graph6: body byte out of range");
      if (((c - kBias) >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  for (std::size_t i = pos; i < line.size(); ++i)
    if (!in_range(line[i])) throw Error(Errc::graph6_bad_byte, "graph6: body byte out of range");
  return b.build();
}

std::string emit_graph6(const Graph& g) {
  std::string out;
  const long long n = g.order();
  write_order(out, n);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace pcrit
