#include "domtriple/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "domtriple/error.hpp"

namespace domtriple {

namespace {

constexpr int kOracleMaxVertices = 30;

// Plain adjacency matrix and per-vertex loops; deliberately no bitset tricks.
struct Matrix {
  int n;
  std::vector<std::vector<bool>> adj;

  explicit Matrix(const Graph& g) : n(g.order()), adj(n, std::vector<bool>(n, false)) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) adj[u][v] = g.has_edge(u, v);
  }
};

bool member(std::uint64_t mask, int v) { return (mask >> v) & 1u; }

bool dominates(const Matrix& m, std::uint64_t s) {
  for (int v = 0; v < m.n; ++v) {
    if (member(s, v)) continue;
    bool hit = false;
    for (int u = 0; u < m.n && !hit; ++u) hit = member(s, u) && m.adj[v][u];
    if (!hit) return false;
  }
  return true;
}

bool totally_dominates(const Matrix& m, std::uint64_t s) {
  for (int v = 0; v < m.n; ++v) {
    bool hit = false;
    for (int u = 0; u < m.n && !hit; ++u) hit = member(s, u) && m.adj[v][u];
    if (!hit) return false;
  }
  return true;
}

bool induced_connected(const Matrix& m, std::uint64_t s) {
  std::vector<int> stack;
  std::vector<bool> seen(m.n, false);
  int members = 0;
  for (int v = 0; v < m.n; ++v) {
    if (!member(s, v)) continue;
    ++members;
    if (stack.empty() && !seen[v]) {
      seen[v] = true;
      stack.push_back(v);
    }
  }
  int visited = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++visited;
    for (int u = 0; u < m.n; ++u) {
      if (member(s, u) && m.adj[v][u] && !seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
    }
  }
  return visited == members;
}

bool valid(const Matrix& m, Variant variant, std::uint64_t s) {
  switch (variant) {
    case Variant::plain: return dominates(m, s);
    case Variant::total: return totally_dominates(m, s);
    case Variant::connected: return dominates(m, s) && induced_connected(m, s);
  }
  return false;
}

int isolated_vertex(const Matrix& m) {
  for (int v = 0; v < m.n; ++v) {
    bool any = false;
    for (int u = 0; u < m.n; ++u) any = any || m.adj[v][u];
    if (!any) return v;
  }
  return -1;
}

bool isolated_free(const Matrix& m) { return isolated_vertex(m) < 0; }

void require_defined(const Matrix& m, Variant variant) {
  if (variant == Variant::total) {
    if (int v = isolated_vertex(m); v >= 0) {
      throw UndefinedParameter("total domination number undefined: vertex " +
                               std::to_string(v) + " is isolated");
    }
  }
  if (variant == Variant::connected && !induced_connected(m, (std::uint64_t{1} << m.n) - 1)) {
    throw UndefinedParameter("connected domination number undefined: graph is disconnected");
  }
}

}  // namespace

MinimumSet oracle_min_set(const Graph& g, Variant variant) {
  if (g.order() > kOracleMaxVertices) {
    throw RangeError("oracle limited to " + std::to_string(kOracleMaxVertices) + " vertices");
  }
  const Matrix m(g);
  require_defined(m, variant);
  const std::uint64_t limit = std::uint64_t{1} << m.n;
  for (int k = 1; k <= m.n; ++k) {
    // Gosper's hack: all k-subsets in ascending numeric order.
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    while (s < limit) {
      if (valid(m, variant, s)) return {k, VertexSet(s)};
      const std::uint64_t low = s & (~s + 1);
      const std::uint64_t ripple = s + low;
      s = (((ripple ^ s) >> 2) / low) | ripple;
    }
  }
  throw InconsistencyError("oracle found no valid set");
}

ParameterTriple oracle_triple(const Graph& g) {
  ParameterTriple t;
  const auto plain = oracle_min_set(g, Variant::plain);
  t.gamma = plain.value;
  t.gamma_cert = plain.certificate;
  const Matrix m(g);
  if (isolated_free(m)) {
    const auto total = oracle_min_set(g, Variant::total);
    t.gamma_t = total.value;
    t.gamma_t_cert = total.certificate;
  }
  if (induced_connected(m, (std::uint64_t{1} << m.n) - 1)) {
    const auto conn = oracle_min_set(g, Variant::connected);
    t.gamma_c = conn.value;
    t.gamma_c_cert = conn.certificate;
  }
  return t;
}

}  // namespace domtriple
