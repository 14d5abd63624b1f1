#include "asc/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "asc/analysis.hpp"
#include "asc/enumerate.hpp"
#include "asc/errors.hpp"
#include "asc/graph_io.hpp"

namespace asc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kChunk = 1U << 15;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i)
    out = static_cast<std::uint64_t>(static_cast<unsigned __int128>(out) * (n - k + i) / i);
  return out;
}

// The rank-th e-bit mask in increasing numeric order.
std::uint64_t unrank(std::uint64_t rank, std::uint32_t e) {
  std::uint64_t mask = 0;
  for (std::uint32_t i = e; i >= 1; --i) {
    std::uint64_t c = i - 1;
    while (binomial(c + 1, i) <= rank) ++c;
    mask |= std::uint64_t{1} << c;
    rank -= binomial(c, i);
  }
  return mask;
}

std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

/// Decodes candidate masks into adjacency words and tests them.
class CandidateSpace {
 public:
  CandidateSpace(const Graph& g, std::uint32_t r, std::uint32_t k, const PruneOptions& prune)
      : n_(static_cast<std::uint32_t>(g.order())), k_(k), order_(n_ + k), r_(r), prune_(prune) {
    for (Vertex v = 0; v < n_; ++v) base_[v] = g.row(v)[0];
    guest_mask_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    for (std::uint32_t i = 0; i < k_; ++i)
      for (std::uint32_t j = i + 1; j < k_; ++j) pairs_.push_back({i, j});
    if (g.order() > 0 && !g.connected())
      for (const auto& comp : g.components()) {
        std::uint64_t m = 0;
        for (Vertex v : comp) m |= std::uint64_t{1} << v;
        components_.push_back(m);
      }
  }

  std::uint32_t bits() const { return k_ * n_ + static_cast<std::uint32_t>(pairs_.size()); }

  /// Symmetry and connectivity filters; cheap, applied before decoding.
  bool admissible(std::uint64_t mask) const {
    if (prune_.symmetry && k_ > 1) {
      std::uint64_t prev = 0;
      for (std::uint32_t i = 0; i < k_; ++i) {
        const auto code = (mask >> (i * n_)) & guest_mask_;
        if (code < prev) return false;
        prev = code;
      }
    }
    if (prune_.connectivity && k_ > 0 && order_ > 1) {
      std::uint64_t touched = 0;
      for (std::uint32_t i = 0; i < k_; ++i) {
        const auto code = (mask >> (i * n_)) & guest_mask_;
        touched |= code;
        if (code == 0 && !has_new_neighbor(mask, i)) return false;
      }
      for (auto comp : components_)
        if ((comp & touched) == 0) return false;
    }
    return true;
  }

  void decode(std::uint64_t mask, std::uint64_t* rows) const {
    std::copy(base_.begin(), base_.begin() + n_, rows);
    std::fill(rows + n_, rows + order_, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
      const Vertex nv = n_ + i;
      auto code = (mask >> (i * n_)) & guest_mask_;
      rows[nv] |= code;
      for (; code != 0; code &= code - 1) rows[std::countr_zero(code)] |= std::uint64_t{1} << nv;
    }
    const auto base_bit = k_ * n_;
    for (std::size_t p = 0; p < pairs_.size(); ++p)
      if ((mask >> (base_bit + p)) & 1U) {
        const Vertex a = n_ + pairs_[p][0], b = n_ + pairs_[p][1];
        rows[a] |= std::uint64_t{1} << b;
        rows[b] |= std::uint64_t{1} << a;
      }
  }

  bool accepts(std::uint64_t mask) const {
    std::array<std::uint64_t, 64> rows{};
    decode(mask, rows.data());
    return prune_.ecc_bound ? small_is_r_asc(rows.data(), order_, r_) : full_test(rows.data());
  }

  Embedding embedding(const Graph& g, std::uint64_t mask) const {
    std::array<std::uint64_t, 64> rows{};
    decode(mask, rows.data());
    Embedding e;
    e.guest = g;
    e.host = Graph(order_);
    for (Vertex u = 0; u < order_; ++u)
      for (Vertex v = u + 1; v < order_; ++v)
        if ((rows[u] >> v) & 1U) e.host.add_edge(u, v);
    e.map.resize(n_);
    for (Vertex v = 0; v < n_; ++v) e.map[v] = v;
    for (std::uint32_t i = 0; i < k_; ++i) e.added.push_back({"n" + std::to_string(i + 1), n_ + i});
    e.method = "exhaustive";
    e.r = r_;
    verify_embedding(e);
    return e;
  }

 private:
  bool has_new_neighbor(std::uint64_t mask, std::uint32_t i) const {
    const auto base_bit = k_ * n_;
    for (std::size_t p = 0; p < pairs_.size(); ++p)
      if ((pairs_[p][0] == i || pairs_[p][1] == i) && ((mask >> (base_bit + p)) & 1U)) return true;
    return false;
  }

  // Complete eccentricity computation without early exits.
  bool full_test(const std::uint64_t* rows) const {
    const std::uint64_t all =
        order_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order_) - 1;
    std::array<std::uint64_t, 64> ball{}, next{};
    std::array<std::uint32_t, 64> ecc{};
    for (Vertex v = 0; v < order_; ++v) ball[v] = rows[v] | (std::uint64_t{1} << v);
    for (Vertex v = 0; v < order_; ++v) ecc[v] = order_ == 1 ? 0 : kUnreachable;
    for (std::uint32_t t = 1; t <= order_; ++t) {
      for (Vertex v = 0; v < order_; ++v)
        if (ecc[v] == kUnreachable && ball[v] == all) ecc[v] = t;
      for (Vertex v = 0; v < order_; ++v) {
        auto acc = ball[v];
        for (auto nb = rows[v]; nb != 0; nb &= nb - 1) acc |= ball[std::countr_zero(nb)];
        next[v] = acc;
      }
      ball = next;
    }
    for (Vertex v = 0; v < order_; ++v)
      if (ecc[v] == kUnreachable) return false;
    const auto radius = *std::min_element(ecc.begin(), ecc.begin() + order_);
    const auto off = std::count_if(ecc.begin(), ecc.begin() + order_,
                                   [&](std::uint32_t e) { return e != radius; });
    return radius == r_ && off == 2;
  }

  std::uint32_t n_, k_, order_, r_;
  PruneOptions prune_;
  std::array<std::uint64_t, 64> base_{};
  std::uint64_t guest_mask_ = 0;
  std::vector<std::array<std::uint32_t, 2>> pairs_;
  std::vector<std::uint64_t> components_;
};

void check_radius(std::uint32_t r) {
  if (r < 2) throw DomainError("r must be at least 2");
}

}  // namespace

std::string_view search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::aborted: return "aborted";
  }
  return "?";
}

std::string_view index_status_name(IndexStatus s) {
  switch (s) {
    case IndexStatus::exact: return "exact";
    case IndexStatus::lower_bound: return "lower_bound";
    case IndexStatus::aborted: return "aborted";
  }
  return "?";
}

std::uint32_t min_asc_order(std::uint32_t r) { return r == 2 ? 4 : 2 * r + 1; }

std::uint64_t search_bits(std::size_t n, std::uint32_t k) {
  return std::uint64_t{k} * n + std::uint64_t{k} * (k == 0 ? 0 : k - 1) / 2;
}

bool small_is_r_asc(const std::uint64_t* rows, std::uint32_t order, std::uint32_t r) {
  // Ball sweep: after step t, ball[v] holds every vertex within distance t.
  // r-ASC iff no ball is full before step r, exactly two are not full at step
  // r, and all are full at step r + 1 (the two outliers have eccentricity r+1).
  if (order < 2) return false;
  const std::uint64_t all = order == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
  std::array<std::uint64_t, 64> ball{}, next{};
  for (Vertex v = 0; v < order; ++v) ball[v] = rows[v] | (std::uint64_t{1} << v);
  for (std::uint32_t t = 1;; ++t) {
    std::uint32_t full = 0;
    for (Vertex v = 0; v < order; ++v) full += ball[v] == all;
    if (t < r && full != 0) return false;
    if (t == r && full + 2 != order) return false;
    if (t == r + 1) return full == order;
    for (Vertex v = 0; v < order; ++v) {
      auto acc = ball[v];
      for (auto nb = rows[v]; nb != 0; nb &= nb - 1) acc |= ball[std::countr_zero(nb)];
      next[v] = acc;
    }
    ball = next;
  }
}

ExtensionResult exists_extension(const Graph& g, std::uint32_t r, std::uint32_t k,
                                 const SearchOptions& options) {
  check_radius(r);
  const auto start = Clock::now();
  ExtensionResult result;
  if (g.order() + k > 64 || search_bits(g.order(), k) > 63)
    throw DomainError("search space too large: " + std::to_string(search_bits(g.order(), k)) +
                      " candidate edge bits (limit 63, host order limit 64)");
  if (options.prune.order_bound && g.order() + k < min_asc_order(r)) {
    result.elapsed_ms = ms_since(start);
    return result;
  }
  const CandidateSpace space(g, r, k, options.prune);
  const auto bits = space.bits();

#ifdef _OPENMP
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#endif
  std::atomic<std::uint64_t> candidates{0}, evaluated{0};
  std::atomic<bool> aborted{false};

  for (std::uint32_t e = 0; e <= bits && !aborted; ++e) {
    const std::uint64_t total = binomial(bits, e);
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    std::atomic<std::uint64_t> best{kNone};

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
      if (aborted.load(std::memory_order_relaxed)) continue;
      const std::uint64_t first = static_cast<std::uint64_t>(c) * kChunk;
      const std::uint64_t count = std::min(kChunk, total - first);
      std::uint64_t mask = unrank(first, e);
      if (mask >= best.load(std::memory_order_relaxed)) continue;
      std::uint64_t local_eval = 0, seen = 0;
      for (; seen < count; ++seen) {
        if ((seen & 1023) == 0 && mask >= best.load(std::memory_order_relaxed)) break;
        if (space.admissible(mask)) {
          ++local_eval;
          if (space.accepts(mask)) {
            auto cur = best.load();
            while (mask < cur && !best.compare_exchange_weak(cur, mask)) {
            }
            ++seen;
            break;
          }
        }
        if (seen + 1 < count) mask = e == 0 ? mask : next_same_popcount(mask);
      }
      evaluated += local_eval;
      const auto total_seen = (candidates += seen);
      if (total_seen >= options.budget.max_candidates ||
          ms_since(start) > options.budget.max_seconds * 1000.0)
        aborted = true;
    }

    if (best != kNone && !aborted) {
      result.status = SearchStatus::found;
      result.witness = space.embedding(g, best);
      break;
    }
  }
  if (aborted) {
    result.status = SearchStatus::aborted;
    result.witness.reset();
  }
  result.candidates = candidates;
  result.evaluated = evaluated;
  result.elapsed_ms = ms_since(start);
  return result;
}

ExtensionResult naive_reference(const Graph& g, std::uint32_t r, std::uint32_t k) {
  check_radius(r);
  const auto start = Clock::now();
  const auto bits = search_bits(g.order(), k);
  if (bits > 24) throw DomainError("naive_reference is capped at 24 candidate edge bits");
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Edge> pairs;
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = 0; j < n; ++j) pairs.emplace_back(n + i, j);
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = i + 1; j < k; ++j) pairs.emplace_back(n + i, n + j);

  ExtensionResult result;
  const auto base = g.edges();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    ++result.candidates;
    Graph host(n + k, base);
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((mask >> b) & 1U) host.add_edge(pairs[b].first, pairs[b].second);
    if (!host.connected()) continue;
    ++result.evaluated;
    if (asc_verdict(profile_from_ecc(reference::eccentricities(host))).is_r_asc(r)) {
      Embedding e;
      e.guest = g;
      e.host = host;
      e.map.resize(n);
      for (Vertex v = 0; v < n; ++v) e.map[v] = v;
      for (Vertex i = 0; i < k; ++i) e.added.push_back({"n" + std::to_string(i + 1), n + i});
      e.method = "exhaustive";
      e.r = r;
      verify_embedding(e);
      result.status = SearchStatus::found;
      result.witness = std::move(e);
      break;
    }
  }
  result.elapsed_ms = ms_since(start);
  return result;
}

IndexCertificate exact_index(const Graph& g, std::uint32_t r, std::uint32_t max_k,
                             const SearchOptions& options) {
  check_radius(r);
  if (g.order() == 0) throw PreconditionError("guest must be nonempty");
  const auto start = Clock::now();
  IndexCertificate cert;
  cert.guest = g;
  cert.guest_id = content_hash(g);
  cert.r = r;
  cert.status = IndexStatus::lower_bound;
  for (std::uint32_t k = 0; k <= max_k; ++k) {
    KRecord rec;
    rec.k = k;
    if (options.prune.order_bound && g.order() + k < min_asc_order(r)) {
      rec.reason = "order_bound";
      cert.records.push_back(rec);
      cert.exhausted_k = static_cast<int>(k);
      continue;
    }
    if (g.order() + k > 64 || search_bits(g.order(), k) > 63) {
      rec.reason = "too_large";
      rec.result = SearchStatus::aborted;
      cert.records.push_back(rec);
      cert.status = IndexStatus::aborted;
      cert.k = k;
      break;
    }
    rec.reason = "search";
    auto res = exists_extension(g, r, k, options);
    rec.result = res.status;
    rec.candidates = res.candidates;
    rec.elapsed_ms = res.elapsed_ms;
    cert.records.push_back(rec);
    cert.candidates_examined += res.candidates;
    if (res.status == SearchStatus::found) {
      cert.status = IndexStatus::exact;
      cert.k = k;
      cert.witness = std::move(res.witness);
      break;
    }
    if (res.status == SearchStatus::aborted) {
      cert.status = IndexStatus::aborted;
      cert.k = k;
      break;
    }
    cert.exhausted_k = static_cast<int>(k);
  }
  if (cert.status == IndexStatus::lower_bound) cert.k = static_cast<std::uint32_t>(cert.exhausted_k + 1);
  cert.elapsed_ms = ms_since(start);
  return cert;
}

SmallestOrderResult smallest_asc_order(std::uint32_t r, std::uint32_t max_n, std::uint32_t min_n) {
  check_radius(r);
  if (max_n > kMaxEnumerationOrder)
    throw DomainError("smallest_asc_order enumerates orders up to " +
                      std::to_string(kMaxEnumerationOrder));
  if (min_n == 0) min_n = min_asc_order(r);
  min_n = std::max<std::uint32_t>(min_n, 1);
  SmallestOrderResult out;
  out.first_order = min_n;
  out.order = max_n + 1;
  if (min_n > max_n) return out;

  auto test_order = [&](const std::vector<Graph>& parents, std::uint32_t m) -> bool {
    std::uint64_t tested = 0;
    std::array<std::uint64_t, 64> rows{};
    const Vertex nv = m - 1;
    for (const auto& p : parents) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << nv); ++mask) {
        // A vertex of degree m-1 has eccentricity 1, so the radius would be 1.
        ++tested;
        if (std::popcount(mask) == static_cast<int>(nv)) continue;
        bool dominating = false;
        for (Vertex v = 0; v < nv; ++v) {
          rows[v] = p.row(v)[0] | (((mask >> v) & 1U) << nv);
          dominating |= std::popcount(rows[v]) == static_cast<int>(nv);
        }
        rows[nv] = mask;
        if (dominating) continue;
        if (small_is_r_asc(rows.data(), m, r)) {
          out.found = true;
          out.order = m;
          out.witness = Graph(m);
          for (Vertex u = 0; u < m; ++u)
            for (Vertex v = u + 1; v < m; ++v)
              if ((rows[u] >> v) & 1U) out.witness.add_edge(u, v);
          out.tested.push_back(tested);
          return true;
        }
      }
    }
    out.tested.push_back(tested);
    return false;
  };

  if (min_n == 1) out.tested.push_back(1);  // K_1 has radius 0
  std::vector<Graph> level{Graph(1)};
  for (std::uint32_t m = 2; m <= max_n; ++m) {
    if (m >= min_n && test_order(level, m)) return out;
    if (m == max_n) break;
    level = extend_connected(level);
  }
  return out;
}

}  // namespace asc
