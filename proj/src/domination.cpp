#include "domtriple/domination.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "domtriple/error.hpp"

namespace domtriple {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::plain: return "plain";
    case Variant::total: return "total";
    case Variant::connected: return "connected";
  }
  return "?";
}

void Deadline::throw_timeout() { throw SearchTimeout(); }

bool is_dominating(const Graph& g, VertexSet s) {
  return closed_neighborhood(g, s) == g.vertices();
}

bool is_total_dominating(const Graph& g, VertexSet s) {
  return open_neighborhood(g, s) == g.vertices();
}

bool is_connected_dominating(const Graph& g, VertexSet s) {
  return !s.empty() && is_dominating(g, s) && induces_connected(g, s);
}

bool satisfies(Variant variant, const Graph& g, VertexSet s) {
  switch (variant) {
    case Variant::plain: return is_dominating(g, s);
    case Variant::total: return is_total_dominating(g, s);
    case Variant::connected: return is_connected_dominating(g, s);
  }
  return false;
}

namespace {

int ceil_div(int num, int den) { return (num + den - 1) / den; }

// Shared by γ and γ_t: the variants differ only in which vertices a chosen
// vertex covers (N[u] versus N(u)).
class CoverSearch {
 public:
  CoverSearch(const Graph& g, bool total, const Deadline& deadline)
      : deadline_(deadline), all_(g.vertices()) {
    covers_.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) {
      covers_.push_back(total ? g.neighbors(v) : g.neighbors(v).with(v));
    }
  }

  std::optional<VertexSet> solve_with(int k) {
    chosen_ = VertexSet{};
    if (dfs(all_, VertexSet{}, k)) return chosen_;
    return std::nullopt;
  }

  int max_cover() const {
    int best = 0;
    for (auto c : covers_) best = std::max(best, c.size());
    return best;
  }

 private:
  // The cover relation is symmetric, so covers_[v] also lists v's coverers.
  bool dfs(VertexSet uncovered, VertexSet excluded, int budget) {
    deadline_.tick();
    if (uncovered.empty()) return true;
    if (budget == 0) return false;

    const VertexSet usable = all_ - excluded - chosen_;
    int best_gain = 0;
    for (int u : usable) best_gain = std::max(best_gain, (covers_[u] & uncovered).size());
    if (best_gain == 0 || ceil_div(uncovered.size(), best_gain) > budget) return false;

    int pivot = -1;
    int fewest = kMaxVertices + 1;
    for (int v : uncovered) {
      const int options = (covers_[v] - excluded).size();
      if (options < fewest) {
        fewest = options;
        pivot = v;
        if (options <= 1) break;
      }
    }
    if (fewest == 0) return false;

    for (int c : covers_[pivot] - excluded) {
      chosen_ = chosen_.with(c);
      if (dfs(uncovered - covers_[c], excluded, budget - 1)) return true;
      chosen_ = chosen_.without(c);
      excluded = excluded.with(c);
    }
    return false;
  }

  const Deadline& deadline_;
  VertexSet all_;
  std::vector<VertexSet> covers_;
  VertexSet chosen_;
};

MinimumSet minimize_cover(const Graph& g, bool total, const Deadline& deadline) {
  CoverSearch search(g, total, deadline);
  const int lower = std::max(total ? 2 : 1, ceil_div(g.order(), std::max(1, search.max_cover())));
  for (int k = lower; k <= g.order(); ++k) {
    if (auto found = search.solve_with(k)) return {k, *found};
  }
  throw InconsistencyError("cover search exhausted all cardinalities");
}

class ConnectedSearch {
 public:
  ConnectedSearch(const Graph& g, const Deadline& deadline)
      : g_(g), deadline_(deadline), all_(g.vertices()) {
    for (int v = 0; v < g.order(); ++v) max_closed_ = std::max(max_closed_, g.degree(v) + 1);
  }

  int lower_bound() const { return ceil_div(g_.order(), max_closed_); }

  std::optional<VertexSet> solve_with(int k) {
    for (int root = 0; root < g_.order(); ++root) {
      const VertexSet allowed = all_ - VertexSet::prefix(root);
      const VertexSet start = VertexSet::singleton(root);
      if (grow(start, closed_neighborhood(g_, start), allowed, k - 1)) return found_;
    }
    return std::nullopt;
  }

 private:
  // Members of `s` are always in `allowed`. Include/exclude branching on the
  // lowest frontier vertex visits every connected superset of `s` inside
  // `allowed` exactly once.
  bool grow(VertexSet s, VertexSet dominated, VertexSet allowed, int budget) {
    deadline_.tick();
    const VertexSet uncovered = all_ - dominated;
    if (uncovered.empty()) {
      found_ = s;
      return true;
    }
    if (budget == 0) return false;
    if (ceil_div(uncovered.size(), max_closed_) > budget) return false;
    if (!reach_bound_ok(s, uncovered, allowed, budget)) return false;

    const VertexSet frontier = (open_neighborhood(g_, s) & allowed) - s;
    if (frontier.empty()) return false;
    const int v = frontier.front();
    if (grow(s.with(v), dominated | g_.neighbors(v).with(v), allowed, budget - 1)) return true;
    return grow(s, dominated, allowed.without(v), budget);
  }

  // A vertex whose nearest admissible dominator lies at distance d from s
  // forces at least d more vertices into the set.
  bool reach_bound_ok(VertexSet s, VertexSet uncovered, VertexSet allowed, int budget) const {
    VertexSet reached = s;
    VertexSet layer = s;
    VertexSet pending = uncovered;
    for (int d = 1; !pending.empty(); ++d) {
      if (d > budget) return false;
      layer = (open_neighborhood(g_, layer) & allowed) - reached;
      if (layer.empty()) return false;
      reached |= layer;
      pending -= closed_neighborhood(g_, layer);
    }
    return true;
  }

  const Graph& g_;
  const Deadline& deadline_;
  VertexSet all_;
  int max_closed_ = 1;
  VertexSet found_;
};

}  // namespace

MinimumSet domination_number(const Graph& g, const Deadline& deadline) {
  return minimize_cover(g, false, deadline);
}

MinimumSet total_domination_number(const Graph& g, const Deadline& deadline) {
  if (int v = first_isolated_vertex(g); v >= 0) {
    throw UndefinedParameter("total domination number undefined: vertex " + std::to_string(v) +
                             " is isolated");
  }
  return minimize_cover(g, true, deadline);
}

MinimumSet connected_domination_number(const Graph& g, const Deadline& deadline) {
  if (!is_connected(g)) {
    throw UndefinedParameter("connected domination number undefined: graph is disconnected");
  }
  ConnectedSearch search(g, deadline);
  for (int k = std::max(1, search.lower_bound()); k <= g.order(); ++k) {
    if (auto found = search.solve_with(k)) return {k, *found};
  }
  throw InconsistencyError("connected search exhausted all cardinalities");
}

MinimumSet minimum_set(Variant variant, const Graph& g, const Deadline& deadline) {
  switch (variant) {
    case Variant::plain: return domination_number(g, deadline);
    case Variant::total: return total_domination_number(g, deadline);
    case Variant::connected: return connected_domination_number(g, deadline);
  }
  throw RangeError("unknown variant");
}

ParameterTriple parameter_triple(const Graph& g, const Deadline& deadline) {
  ParameterTriple t;
  const auto plain = domination_number(g, deadline);
  t.gamma = plain.value;
  t.gamma_cert = plain.certificate;
  if (!has_isolated_vertex(g)) {
    const auto total = total_domination_number(g, deadline);
    t.gamma_t = total.value;
    t.gamma_t_cert = total.certificate;
  }
  if (is_connected(g)) {
    const auto conn = connected_domination_number(g, deadline);
    t.gamma_c = conn.value;
    t.gamma_c_cert = conn.certificate;
  }
  if (t.gamma_t && t.gamma_c && t.gamma > 1 && !(t.gamma <= *t.gamma_t && *t.gamma_t <= *t.gamma_c)) {
    throw InconsistencyError("gamma <= gamma_t <= gamma_c fails: (" + std::to_string(t.gamma) +
                             ", " + std::to_string(*t.gamma_t) + ", " +
                             std::to_string(*t.gamma_c) + ")");
  }
  return t;
}

}  // namespace domtriple
