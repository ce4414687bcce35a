#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "domtriple/graph.hpp"

namespace domtriple {

/// Decodes one graph6 line (no header, no newline). Throws ParseError naming
/// the offending byte offset.
Graph parse_graph6(std::string_view line);

/// Encodes using the single-byte size form; throws RangeError unless 1 <= n <= 62.
std::string encode_graph6(const Graph& g);

/// Reads newline-delimited graph6 text. Blank lines are skipped, as is a
/// leading ">>graph6<<" header whether on its own line or prefixed to a graph.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(in) {}

  struct Entry {
    std::string text;  ///< the graph6 code with header and CR stripped
    std::size_t line;  ///< 1-based
  };

  /// Next non-empty entry, or nullopt at end of input.
  std::optional<Entry> next();

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

}  // namespace domtriple
