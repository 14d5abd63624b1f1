#include "asc/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "asc/errors.hpp"

namespace asc {

Graph::Graph(std::size_t order)
    : order_(order), words_((order + 63) / 64), rows_(order * words_, 0) {}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : Graph(order) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order_)
    throw ArgumentError("vertex " + std::to_string(v) + " out of range for order " +
                        std::to_string(order_));
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
  rows_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  rows_[v * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

std::size_t Graph::size() const noexcept {
  std::size_t twice = 0;
  for (auto w : rows_) twice += std::popcount(w);
  return twice / 2;
}

std::size_t Graph::degree(Vertex v) const noexcept {
  std::size_t d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (Vertex v = 0; v < order_; ++v) best = std::max(best, degree(v));
  return best;
}

std::size_t Graph::min_degree() const noexcept {
  if (order_ == 0) return 0;
  std::size_t best = order_;
  for (Vertex v = 0; v < order_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  auto r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    for (auto bits = r[w]; bits != 0; bits &= bits - 1)
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
  }
  return out;
}

std::vector<Vertex> Graph::isolated_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order_; ++v)
    if (degree(v) == 0) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  Graph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i]);
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j]))
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return g;
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  if (perm.size() != order_) throw ArgumentError("permutation size does not match order");
  Graph g(order_);
  for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  return g;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(order_, false);
  for (Vertex s = 0; s < order_; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex v : neighbors(comp[head]))
        if (!seen[v]) {
          seen[v] = true;
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::connected() const { return order_ > 0 && components().size() == 1; }

bool induced_check(const Graph& host, std::span<const Vertex> map, const Graph& guest) {
  if (map.size() != guest.order())
    throw ArgumentError("map has " + std::to_string(map.size()) + " entries for a guest of order " +
                        std::to_string(guest.order()));
  std::vector<bool> used(host.order(), false);
  for (Vertex h : map) {
    if (h >= host.order()) throw ArgumentError("map target " + std::to_string(h) + " out of range");
    if (used[h]) throw ArgumentError("map is not injective at host vertex " + std::to_string(h));
    used[h] = true;
  }
  for (Vertex a = 0; a < guest.order(); ++a)
    for (Vertex b = a + 1; b < guest.order(); ++b)
      if (guest.adjacent(a, b) != host.adjacent(map[a], map[b])) return false;
  return true;
}

}  // namespace asc
