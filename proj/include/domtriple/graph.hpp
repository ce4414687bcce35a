#pragma once

#include <span>
#include <utility>
#include <vector>

#include "domtriple/vertex_set.hpp"

namespace domtriple {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 (1 <= n <= 64), stored as one
/// adjacency bitset per vertex. Immutable once built.
class Graph {
 public:
  /// Throws RangeError on a bad vertex count, an out-of-range endpoint or a loop.
  /// Repeated edges are merged.
  explicit Graph(int n, std::span<const Edge> edges = {});
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;
  VertexSet vertices() const { return VertexSet::prefix(order()); }
  /// Open neighborhood N(v).
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;  ///< non-increasing

  /// Copy with edge uv added.
  Graph with_edge(int u, int v) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<VertexSet> adj_;
};

/// N[S] = S ∪ N(S).
VertexSet closed_neighborhood(const Graph& g, VertexSet s);
/// N(S) = union of the rows of S. Members of S are included only via adjacency.
VertexSet open_neighborhood(const Graph& g, VertexSet s);

/// Vertices reachable from `start` without leaving `within`.
VertexSet reachable(const Graph& g, VertexSet start, VertexSet within);

bool is_connected(const Graph& g);
bool has_isolated_vertex(const Graph& g);
/// Lowest-index isolated vertex, or -1.
int first_isolated_vertex(const Graph& g);

/// Connectivity of G[s]. Throws RangeError on empty s.
bool induces_connected(const Graph& g, VertexSet s);

}  // namespace domtriple
