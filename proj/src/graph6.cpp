#include "domtriple/graph6.hpp"

#include <string>
#include <vector>

#include "domtriple/error.hpp"

namespace domtriple {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view line, std::size_t pos) {
  const int c = static_cast<unsigned char>(line[pos]);
  if (c < kBias || c > kMaxByte) {
    throw ParseError("graph6 byte " + std::to_string(c) + " outside 63..126", pos);
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw ParseError("empty graph6 string", 0);

  // Size field: one byte for n <= 62, or '~' followed by three bytes.
  std::size_t pos = 0;
  long n = 0;
  if (line[0] == '~') {
    if (line.size() > 1 && line[1] == '~') {
      throw ParseError("eight-byte size form exceeds the 64-vertex limit", 0);
    }
    if (line.size() < 4) throw ParseError("truncated size field", line.size());
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(line, i);
    pos = 4;
  } else {
    n = sextet(line, 0);
    pos = 1;
  }
  if (n < 1) throw ParseError("graph6 with zero vertices", 0);
  if (n > kMaxVertices) {
    throw ParseError("vertex count " + std::to_string(n) + " exceeds 64", 0);
  }

  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (pairs + 5) / 6;
  if (line.size() < pos + body) throw ParseError("truncated adjacency data", line.size());
  if (line.size() > pos + body) throw ParseError("trailing bytes after adjacency data", pos + body);

  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int bits = sextet(line, pos + k / 6);
      if ((bits >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (pairs % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const int pad_mask = (1 << (6 - pairs % 6)) - 1;
    if (sextet(line, last) & pad_mask) throw ParseError("nonzero padding bits", last);
  }
  return Graph(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw RangeError("graph6 encoding supports 1..62 vertices, got " + std::to_string(n));

  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
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

std::optional<Graph6Reader::Entry> Graph6Reader::next() {
  std::string raw;
  while (std::getline(in_, raw)) {
    ++line_;
    std::string_view text = raw;
    while (!text.empty() && (text.back() == '\r' || text.back() == ' ' || text.back() == '\t')) {
      text.remove_suffix(1);
    }
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    if (text.empty()) continue;
    return Entry{std::string(text), line_};
  }
  return std::nullopt;
}

}  // namespace domtriple
