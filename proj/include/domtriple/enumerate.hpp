#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "domtriple/graph.hpp"

namespace domtriple {

inline constexpr int kMaxEnumerationOrder = 8;

/// Upper triangle in graph6 pair order (0,1), (0,2), (1,2), (0,3), ... read
/// as a binary number with the first pair as the most significant bit.
/// Requires n <= 11 so the code fits in 64 bits.
std::uint64_t adjacency_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

/// Smallest adjacency_code over all relabelings that list vertices in
/// non-increasing degree order. Equal iff the graphs are isomorphic. n <= 8.
std::uint64_t canonical_code(const Graph& g);

/// One representative (the canonical labeling) per isomorphism class of
/// graphs on n vertices, connected or not, ascending canonical code. n <= 8.
std::vector<Graph> graph_classes(int n);

/// Calls `visit` on every connected graph on n vertices (1 <= n <= 8) until
/// it returns false. Labeled mode walks every adjacency code in ascending
/// order. Deduplicated mode visits graph_classes(n) filtered to connected.
void for_each_connected_graph(int n, bool dedupe, const std::function<bool(const Graph&)>& visit);

}  // namespace domtriple
