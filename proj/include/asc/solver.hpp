#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asc/constructions.hpp"
#include "asc/graph.hpp"

namespace asc {

struct Budget {
  std::uint64_t max_candidates = 100'000'000;
  double max_seconds = 300.0;
};

/// Each pruning rule can be switched off to cross-check it against the others.
struct PruneOptions {
  bool symmetry = true;      ///< guest-neighborhood codes of new vertices non-decreasing
  bool connectivity = true;  ///< every new vertex and guest component is attached
  bool ecc_bound = true;     ///< stop the ball sweep as soon as a verdict is forced
  bool order_bound = true;   ///< skip hosts smaller than min_asc_order(r)
};

struct SearchOptions {
  Budget budget;
  PruneOptions prune;
  int threads = 0;  ///< 0 keeps the OpenMP default
};

enum class SearchStatus { found, exhausted, aborted };

std::string_view search_status_name(SearchStatus s);

struct ExtensionResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<Embedding> witness;
  std::uint64_t candidates = 0;  ///< edge subsets visited
  std::uint64_t evaluated = 0;   ///< subsets that reached the distance test
  double elapsed_ms = 0.0;
};

/// Smallest host order that can be r-ASC: 2r+1 for r >= 3, 4 for r = 2 (P_4).
std::uint32_t min_asc_order(std::uint32_t r);

/// Bits of the candidate space: k*n guest-new pairs plus k(k-1)/2 new-new pairs.
std::uint64_t search_bits(std::size_t n, std::uint32_t k);

/// Searches every host obtained by adding k vertices and any edges incident to
/// them. Candidates go by increasing edge count, then increasing bit pattern;
/// the first r-ASC host is returned. Requires search_bits <= 63.
ExtensionResult exists_extension(const Graph& g, std::uint32_t r, std::uint32_t k,
                                 const SearchOptions& options = {});

/// Unpruned enumeration in plain numeric order through the general Graph
/// path; for cross-checking only. Requires search_bits <= 24.
ExtensionResult naive_reference(const Graph& g, std::uint32_t r, std::uint32_t k);

enum class IndexStatus { exact, lower_bound, aborted };

std::string_view index_status_name(IndexStatus s);

struct KRecord {
  std::uint32_t k = 0;
  std::string reason;  ///< "order_bound", "search" or "too_large"
  SearchStatus result = SearchStatus::exhausted;
  std::uint64_t candidates = 0;
  double elapsed_ms = 0.0;
};

struct IndexCertificate {
  Graph guest;
  std::string guest_id;
  std::uint32_t r = 0;
  IndexStatus status = IndexStatus::lower_bound;
  std::uint32_t k = 0;  ///< exact: the index; lower_bound: the bound; aborted: k being searched
  std::optional<Embedding> witness;
  int exhausted_k = -1;  ///< largest k with every candidate rejected, -1 if none
  std::uint64_t candidates_examined = 0;
  double elapsed_ms = 0.0;
  std::vector<KRecord> records;
};

/// Tries k = 0..max_k in turn.
IndexCertificate exact_index(const Graph& g, std::uint32_t r, std::uint32_t max_k,
                             const SearchOptions& options = {});

struct SmallestOrderResult {
  bool found = false;
  std::uint32_t order = 0;  ///< found: smallest order; otherwise max_n + 1 (a lower bound)
  Graph witness;
  std::uint32_t first_order = 0;  ///< first order that was tested exhaustively
  std::vector<std::uint64_t> tested;  ///< graphs tested at first_order, first_order+1, ...
};

inline constexpr std::uint32_t kMaxEnumerationOrder = 9;

/// Tests every connected graph of order min_n..max_n (0 means min_asc_order(r)).
SmallestOrderResult smallest_asc_order(std::uint32_t r, std::uint32_t max_n,
                                       std::uint32_t min_n = 0);

/// r-ASC test on at most 64 vertices, one adjacency word per vertex.
bool small_is_r_asc(const std::uint64_t* rows, std::uint32_t order, std::uint32_t r);

}  // namespace asc
