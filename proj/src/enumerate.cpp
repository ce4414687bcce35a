#include "domtriple/enumerate.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "domtriple/error.hpp"

namespace domtriple {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

void require_order(int n, int max, const char* what) {
  if (n < 1 || n > max) {
    throw RangeError(std::string(what) + " supports 1.." + std::to_string(max) +
                     " vertices, got " + std::to_string(n));
  }
}

// Branches over degree-respecting relabelings, position by position. After
// position j is filled, column j of the relabeled upper triangle is final,
// so any prefix already larger than the best code is cut.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()) {
    std::vector<int> order(n_);
    for (int v = 0; v < n_; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int p = 0; p < n_; ++p) slot_degree_.push_back(g.degree(order[p]));
    placed_.assign(n_, -1);
  }

  std::uint64_t run() {
    extend(0, 0, VertexSet{});
    return best_;
  }

 private:
  void extend(int pos, std::uint64_t prefix, VertexSet used) {
    if (pos == n_) {
      best_ = std::min(best_, prefix);
      have_best_ = true;
      return;
    }
    const int remaining = pair_count(n_) - pair_count(pos + 1);
    for (int v = 0; v < n_; ++v) {
      if (used.contains(v) || g_.degree(v) != slot_degree_[pos]) continue;
      std::uint64_t code = prefix;
      for (int i = 0; i < pos; ++i) code = (code << 1) | (g_.has_edge(placed_[i], v) ? 1u : 0u);
      if (have_best_ && code > (best_ >> remaining)) continue;
      placed_[pos] = v;
      extend(pos + 1, code, used.with(v));
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> slot_degree_;
  std::vector<int> placed_;
  std::uint64_t best_ = ~std::uint64_t{0};
  bool have_best_ = false;
};

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  require_order(g.order(), 11, "adjacency_code");
  std::uint64_t code = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.has_edge(i, j) ? 1u : 0u);
  return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
  require_order(n, 11, "graph_from_code");
  std::vector<Edge> edges;
  int shift = pair_count(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --shift;
      if ((code >> shift) & 1u) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::uint64_t canonical_code(const Graph& g) {
  require_order(g.order(), kMaxEnumerationOrder, "canonical_code");
  return Canonicalizer(g).run();
}

std::vector<Graph> graph_classes(int n) {
  require_order(n, kMaxEnumerationOrder, "graph_classes");
  // Every graph on k vertices is a graph on k-1 vertices plus one vertex
  // joined to some subset, so extending one representative per class is exhaustive.
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::set<std::uint64_t> codes;
    for (const Graph& base : level) {
      const auto base_edges = base.edges();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
        auto edges = base_edges;
        for (int v : VertexSet(mask)) edges.emplace_back(v, k - 1);
        codes.insert(canonical_code(Graph(k, edges)));
      }
    }
    level.clear();
    for (auto code : codes) level.push_back(graph_from_code(k, code));
  }
  return level;
}

void for_each_connected_graph(int n, bool dedupe, const std::function<bool(const Graph&)>& visit) {
  require_order(n, kMaxEnumerationOrder, "enumeration");
  if (dedupe) {
    for (const Graph& g : graph_classes(n)) {
      if (is_connected(g) && !visit(g)) return;
    }
    return;
  }
  const std::uint64_t end = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t code = 0; code < end; ++code) {
    const Graph g = graph_from_code(n, code);
    if (is_connected(g) && !visit(g)) return;
  }
}

}  // namespace domtriple
