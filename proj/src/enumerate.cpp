#include "asc/enumerate.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "asc/errors.hpp"

namespace asc {

namespace {

constexpr std::size_t kMaxCanonicalOrder = 11;

// Equitable colouring by iterated refinement. Colours are ranks of sorted
// signatures, so the result does not depend on the input labels.
std::vector<std::uint32_t> refine(const Graph& g) {
  const auto n = g.order();
  std::vector<std::uint32_t> colour(n, 0);
  std::size_t classes = 1;
  while (true) {
    std::vector<std::vector<std::uint32_t>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<std::uint32_t> nb;
      for (Vertex u : g.neighbors(v)) nb.push_back(colour[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n; ++v)
      colour[v] = static_cast<std::uint32_t>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    if (sorted.size() == classes) break;
    classes = sorted.size();
  }
  return colour;
}

std::uint64_t code_of(const Graph& g, const std::vector<Vertex>& pos) {
  std::uint64_t code = 0;
  for (auto [u, v] : g.edges()) {
    const auto i = std::min(pos[u], pos[v]), j = std::max(pos[u], pos[v]);
    code |= std::uint64_t{1} << (j * (j - 1) / 2 + i);
  }
  return code;
}

std::pair<std::uint64_t, std::vector<Vertex>> canonical(const Graph& g) {
  const auto n = g.order();
  if (n > kMaxCanonicalOrder)
    throw DomainError("canonical form supports order <= " + std::to_string(kMaxCanonicalOrder));
  const auto colour = refine(g);
  std::map<std::uint32_t, std::vector<Vertex>> cells_by_colour;
  for (Vertex v = 0; v < n; ++v) cells_by_colour[colour[v]].push_back(v);
  std::vector<std::vector<Vertex>> cells;
  for (auto& [c, cell] : cells_by_colour) cells.push_back(cell);

  std::vector<Vertex> pos(n);
  std::uint64_t best = 0;
  std::vector<Vertex> best_pos;
  while (true) {
    Vertex next = 0;
    for (const auto& cell : cells)
      for (Vertex v : cell) pos[v] = next++;
    const auto code = code_of(g, pos);
    if (best_pos.empty() || code > best) {
      best = code;
      best_pos = pos;
    }
    // Odometer over the permutations of each cell.
    std::size_t c = 0;
    for (; c < cells.size(); ++c)
      if (std::next_permutation(cells[c].begin(), cells[c].end())) break;
    if (c == cells.size()) break;
  }
  return {best, best_pos};
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) { return canonical(g).first; }

std::vector<Vertex> canonical_labeling(const Graph& g) { return canonical(g).second; }

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

std::vector<Graph> extend_connected(const std::vector<Graph>& reps) {
  std::vector<Graph> next;
  std::unordered_set<std::uint64_t> seen;
  for (const auto& g : reps)
    for_each_vertex_extension(g, [&](const Graph& h, std::uint64_t) {
      if (seen.insert(canonical_code(h)).second) next.push_back(h);
    });
  return next;
}

std::vector<Graph> connected_graphs(std::uint32_t n) {
  if (n < 1 || n > 8) throw DomainError("connected_graphs supports 1 <= n <= 8");
  std::vector<Graph> level{Graph(1)};
  for (std::uint32_t m = 2; m <= n; ++m) level = extend_connected(level);
  return level;
}

}  // namespace asc
