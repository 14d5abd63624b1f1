#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace asc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..order-1.
///
/// Adjacency is stored as one bit-packed row per vertex so that neighborhood
/// intersections and frontier expansions work a machine word at a time.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);
  Graph(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept;  // edge count
  std::size_t words_per_row() const noexcept { return words_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }

  /// Inserting an existing edge is a no-op; self-loops are rejected.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {rows_.data() + v * words_, words_};
  }

  std::size_t degree(Vertex v) const noexcept;
  std::size_t max_degree() const noexcept;
  std::size_t min_degree() const noexcept;

  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Vertex> isolated_vertices() const;

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  /// Relabels vertex v as perm[v].
  Graph permuted(std::span<const Vertex> perm) const;

  /// Connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<Vertex>> components() const;
  bool connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::size_t order_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// True iff map embeds guest into host as an induced subgraph: for every guest
/// pair (a, b), ab is an edge exactly when map[a]map[b] is. Throws ArgumentError
/// on a non-injective or out-of-range map.
bool induced_check(const Graph& host, std::span<const Vertex> map, const Graph& guest);

}  // namespace asc
