#include "domtriple/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "domtriple/error.hpp"

namespace domtriple {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 1 || n > kMaxVertices) {
    throw RangeError("vertex count " + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxVertices));
  }
  adj_.assign(static_cast<std::size_t>(n), VertexSet{});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw RangeError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw RangeError("loop at vertex " + std::to_string(u));
    adj_[u] = adj_[u].with(v);
    adj_[v] = adj_[v].with(u);
  }
}

int Graph::size() const {
  int twice = 0;
  for (auto row : adj_) twice += row.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> degs;
  degs.reserve(adj_.size());
  for (auto row : adj_) degs.push_back(row.size());
  std::sort(degs.begin(), degs.end(), std::greater<>());
  return degs;
}

Graph Graph::with_edge(int u, int v) const {
  auto es = edges();
  es.emplace_back(u, v);
  return Graph(order(), es);
}

VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
  return s | open_neighborhood(g, s);
}

VertexSet open_neighborhood(const Graph& g, VertexSet s) {
  VertexSet out;
  for (int v : s) out |= g.neighbors(v);
  return out;
}

VertexSet reachable(const Graph& g, VertexSet start, VertexSet within) {
  VertexSet seen = start & within;
  VertexSet layer = seen;
  while (!layer.empty()) {
    VertexSet next = (open_neighborhood(g, layer) & within) - seen;
    seen |= next;
    layer = next;
  }
  return seen;
}

bool is_connected(const Graph& g) {
  return reachable(g, VertexSet::singleton(0), g.vertices()) == g.vertices();
}

int first_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.neighbors(v).empty()) return v;
  }
  return -1;
}

bool has_isolated_vertex(const Graph& g) { return first_isolated_vertex(g) >= 0; }

bool induces_connected(const Graph& g, VertexSet s) {
  if (s.empty()) throw RangeError("connectivity of the empty vertex set is undefined");
  return reachable(g, VertexSet::singleton(s.front()), s) == s;
}

}  // namespace domtriple
