#pragma once

#include <chrono>
#include <optional>
#include <string_view>

#include "domtriple/graph.hpp"

namespace domtriple {

enum class Variant { plain, total, connected };

std::string_view to_string(Variant v);

bool is_dominating(const Graph& g, VertexSet s);
bool is_total_dominating(const Graph& g, VertexSet s);
bool is_connected_dominating(const Graph& g, VertexSet s);
bool satisfies(Variant variant, const Graph& g, VertexSet s);

/// A minimum value with one witness set of exactly that size.
struct MinimumSet {
  int value = 0;
  VertexSet certificate;
  bool operator==(const MinimumSet&) const = default;
};

/// Stops a search once the wall clock passes the deadline. Default: no limit.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline after(std::chrono::duration<double> budget) {
    Deadline d;
    d.at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget);
    return d;
  }

  /// Throws SearchTimeout when expired. Polls the clock on the first call and every 1024th after.
  void tick() const {
    if (at_ && (calls_++ & 1023u) == 0 && Clock::now() > *at_) throw_timeout();
  }

 private:
  [[noreturn]] static void throw_timeout();
  std::optional<Clock::time_point> at_;
  mutable unsigned calls_ = 0;
};

/// γ(G). Increasing-cardinality branch and bound: repeatedly pick the
/// undominated vertex with fewest admissible coverers and branch over them in
/// ascending index order.
MinimumSet domination_number(const Graph& g, const Deadline& deadline = {});

/// γ_t(G). Throws UndefinedParameter naming the first isolated vertex.
MinimumSet total_domination_number(const Graph& g, const Deadline& deadline = {});

/// γ_c(G). Grows connected sets from a root (the set's smallest vertex).
/// Throws UndefinedParameter on a disconnected graph.
MinimumSet connected_domination_number(const Graph& g, const Deadline& deadline = {});

MinimumSet minimum_set(Variant variant, const Graph& g, const Deadline& deadline = {});

/// (γ, γ_t, γ_c) with certificates; an absent component means the parameter
/// is undefined for the graph.
struct ParameterTriple {
  int gamma = 0;
  std::optional<int> gamma_t;
  std::optional<int> gamma_c;
  VertexSet gamma_cert;
  std::optional<VertexSet> gamma_t_cert;
  std::optional<VertexSet> gamma_c_cert;

  /// Values-only constructor for bound evaluation.
  static ParameterTriple of(int gamma, std::optional<int> gamma_t, std::optional<int> gamma_c) {
    ParameterTriple t;
    t.gamma = gamma;
    t.gamma_t = gamma_t;
    t.gamma_c = gamma_c;
    return t;
  }

  bool same_values(const ParameterTriple& o) const {
    return gamma == o.gamma && gamma_t == o.gamma_t && gamma_c == o.gamma_c;
  }
};

/// Computes every defined component. When all three exist and γ > 1, checks
/// γ <= γ_t <= γ_c and throws InconsistencyError if it fails.
ParameterTriple parameter_triple(const Graph& g, const Deadline& deadline = {});

}  // namespace domtriple
