#pragma once

#include <cstdint>
#include <vector>

#include "asc/graph.hpp"

namespace asc {

/// Isomorphism-invariant code of the upper adjacency triangle (orders <= 11):
/// equal codes iff isomorphic graphs of the same order.
std::uint64_t canonical_code(const Graph& g);

/// Relabeling of g that realizes canonical_code.
std::vector<Vertex> canonical_labeling(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// One representative per isomorphism class of connected graphs of order n
/// (1 <= n <= 8), built by adding a vertex to the order n-1 representatives.
std::vector<Graph> connected_graphs(std::uint32_t n);

/// Representatives of order n+1 from a complete set of order-n representatives.
std::vector<Graph> extend_connected(const std::vector<Graph>& reps);

/// Every graph obtained from g by adding vertex |g| adjacent to a nonempty
/// subset, in increasing subset-mask order.
template <typename F>
void for_each_vertex_extension(const Graph& g, F&& f) {
  const auto n = static_cast<Vertex>(g.order());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Graph h(n + 1);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1U) h.add_edge(v, n);
    f(h, mask);
  }
}

}  // namespace asc
