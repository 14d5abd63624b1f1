#include "asc/distance.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "asc/errors.hpp"

namespace asc {

namespace {

struct Csr {
  std::vector<std::size_t> offsets;
  std::vector<Vertex> targets;
};

Csr to_csr(const Graph& g) {
  Csr csr;
  csr.offsets.reserve(g.order() + 1);
  csr.offsets.push_back(0);
  for (Vertex v = 0; v < g.order(); ++v) {
    auto r = g.row(v);
    for (std::size_t w = 0; w < r.size(); ++w)
      for (auto bits = r[w]; bits != 0; bits &= bits - 1)
        csr.targets.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
    csr.offsets.push_back(csr.targets.size());
  }
  return csr;
}

// Returns the largest distance reached; unreached vertices stay kUnreachable.
std::uint32_t bfs_into(const Csr& csr, Vertex source, std::uint32_t* dist, std::vector<Vertex>& queue) {
  const std::size_t n = csr.offsets.size() - 1;
  std::fill(dist, dist + n, kUnreachable);
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  std::uint32_t far = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    far = dist[u];
    for (auto i = csr.offsets[u]; i < csr.offsets[u + 1]; ++i) {
      Vertex v = csr.targets[i];
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return far;
}

std::vector<std::uint32_t> ecc_bfs(const Graph& g, const Csr& csr) {
  const auto n = static_cast<std::int64_t>(g.order());
  std::vector<std::uint32_t> ecc(g.order(), 0);
  bool disconnected = false;
#pragma omp parallel
  {
    std::vector<std::uint32_t> dist(g.order());
    std::vector<Vertex> queue;
    queue.reserve(g.order());
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t s = 0; s < n; ++s) {
      ecc[s] = bfs_into(csr, static_cast<Vertex>(s), dist.data(), queue);
      if (queue.size() != g.order()) {
#pragma omp atomic write
        disconnected = true;
      }
    }
  }
  if (disconnected) throw DisconnectedError();
  return ecc;
}

// ball[v] after step t holds every vertex within distance t of v; it grows by
// OR-ing the neighbors' balls, so all sources advance one level per sweep.
std::vector<std::uint32_t> ecc_bit_parallel(const Graph& g, const Csr& csr) {
  const std::size_t n = g.order();
  const std::size_t words = g.words_per_row();
  std::vector<std::uint64_t> cur(n * words, 0), next(n * words, 0);
  std::vector<std::uint64_t> full(words, ~std::uint64_t{0});
  if (n % 64 != 0) full.back() = (std::uint64_t{1} << (n % 64)) - 1;

  std::vector<std::uint32_t> ecc(n, 0);
  std::vector<char> done(n, 0);
  std::size_t remaining = n;
  for (Vertex v = 0; v < n; ++v) cur[v * words + (v >> 6)] = std::uint64_t{1} << (v & 63);
  if (n == 1) return ecc;

  for (std::uint32_t step = 1; remaining > 0; ++step) {
    std::size_t grew = 0;
    std::size_t finished = 0;
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : grew, finished)
    for (std::int64_t vi = 0; vi < count; ++vi) {
      const auto v = static_cast<std::size_t>(vi);
      if (done[v]) continue;
      std::uint64_t* out = next.data() + v * words;
      const std::uint64_t* own = cur.data() + v * words;
      std::copy(own, own + words, out);
      for (auto i = csr.offsets[v]; i < csr.offsets[v + 1]; ++i) {
        const std::uint64_t* nb = cur.data() + csr.targets[i] * words;
        for (std::size_t w = 0; w < words; ++w) out[w] |= nb[w];
      }
      std::size_t before = 0, after = 0;
      for (std::size_t w = 0; w < words; ++w) {
        before += std::popcount(own[w]);
        after += std::popcount(out[w]);
      }
      if (after != before) ++grew;
      if (after == n) {
        ecc[v] = step;
        ++finished;
      }
    }
    if (grew == 0) throw DisconnectedError();
    for (std::size_t v = 0; v < n; ++v) {
      if (!done[v] && ecc[v] == step) {
        done[v] = 1;
        std::copy(full.begin(), full.end(), next.begin() + v * words);
        std::copy(full.begin(), full.end(), cur.begin() + v * words);
      }
    }
    remaining -= finished;
    std::swap(cur, next);
  }
  return ecc;
}

}  // namespace

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.order()) throw ArgumentError("source vertex out of range");
  auto csr = to_csr(g);
  std::vector<std::uint32_t> dist(g.order());
  std::vector<Vertex> queue;
  bfs_into(csr, source, dist.data(), queue);
  return dist;
}

DistanceMatrix distance_matrix(const Graph& g) {
  DistanceMatrix dm(g.order());
  if (g.order() == 0) return dm;
  auto csr = to_csr(g);
  const auto n = static_cast<std::int64_t>(g.order());
#pragma omp parallel
  {
    std::vector<Vertex> queue;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t s = 0; s < n; ++s)
      bfs_into(csr, static_cast<Vertex>(s), &dm.at(static_cast<Vertex>(s), 0), queue);
  }
  return dm;
}

std::vector<std::uint32_t> eccentricities(const Graph& g, EccKernel kernel) {
  if (g.order() == 0) throw DomainError("eccentricity of the empty graph is undefined");
  auto csr = to_csr(g);
  if (kernel == EccKernel::automatic) {
    // The ball sweep costs about diam * (n + 2m) * words; per-source BFS costs
    // about n * (n + 2m). diam <= 2 ecc(0).
    std::vector<std::uint32_t> dist(g.order());
    std::vector<Vertex> queue;
    auto e0 = bfs_into(csr, 0, dist.data(), queue);
    if (queue.size() != g.order()) throw DisconnectedError();
    kernel = (2 * std::size_t{e0} + 1) * g.words_per_row() <= g.order() ? EccKernel::bit_parallel
                                                                         : EccKernel::bfs;
  }
  return kernel == EccKernel::bit_parallel ? ecc_bit_parallel(g, csr) : ecc_bfs(g, csr);
}

EccProfile profile_from_ecc(std::vector<std::uint32_t> ecc) {
  EccProfile p;
  p.ecc = std::move(ecc);
  if (p.ecc.empty()) return p;
  p.radius = *std::min_element(p.ecc.begin(), p.ecc.end());
  p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
  for (Vertex v = 0; v < p.ecc.size(); ++v) {
    if (p.ecc[v] == p.radius) p.center.push_back(v);
    if (p.ecc[v] == p.diameter) p.periphery.push_back(v);
  }
  return p;
}

EccProfile ecc_profile(const Graph& g, EccKernel kernel) {
  return profile_from_ecc(eccentricities(g, kernel));
}

namespace reference {

DistanceMatrix distance_matrix(const Graph& g) {
  DistanceMatrix dm(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    std::queue<Vertex> q;
    q.push(s);
    dm.at(s, s) = 0;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex v : g.neighbors(u)) {
        if (dm(s, v) == kUnreachable) {
          dm.at(s, v) = dm(s, u) + 1;
          q.push(v);
        }
      }
    }
  }
  return dm;
}

std::vector<std::uint32_t> eccentricities(const Graph& g) {
  if (g.order() == 0) throw DomainError("eccentricity of the empty graph is undefined");
  auto dm = reference::distance_matrix(g);
  std::vector<std::uint32_t> ecc(g.order(), 0);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v) {
      if (dm(u, v) == kUnreachable) throw DisconnectedError();
      ecc[u] = std::max(ecc[u], dm(u, v));
    }
  return ecc;
}

}  // namespace reference

}  // namespace asc
