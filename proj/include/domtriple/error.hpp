#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domtriple {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 input. `offset()` is the zero-based byte position of the
/// first offending byte within the line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Argument outside the supported range (vertex counts, family sizes, formula validity).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// γ_t on a graph with an isolated vertex, or γ_c on a disconnected graph.
class UndefinedParameter : public Error {
 public:
  using Error::Error;
};

/// Search exceeded its time budget.
class SearchTimeout : public Error {
 public:
  SearchTimeout() : Error("search exceeded its time budget") {}
};

/// A proved relation failed on computed values; always points at a solver bug.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace domtriple
