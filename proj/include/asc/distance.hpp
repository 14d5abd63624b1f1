#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "asc/graph.hpp"

namespace asc {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Row-major order x order matrix of hop distances.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t order)
      : order_(order), d_(order * order, kUnreachable) {}

  std::size_t order() const noexcept { return order_; }
  std::uint32_t operator()(Vertex u, Vertex v) const noexcept { return d_[u * order_ + v]; }
  std::uint32_t& at(Vertex u, Vertex v) noexcept { return d_[u * order_ + v]; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<std::uint32_t> d_;
};

struct EccProfile {
  std::vector<std::uint32_t> ecc;
  std::uint32_t radius = 0;
  std::uint32_t diameter = 0;
  std::vector<Vertex> center;
  std::vector<Vertex> periphery;
};

enum class EccKernel {
  automatic,     ///< picks by estimated cost
  bit_parallel,  ///< all sources at once, one bitset ball per vertex
  bfs,           ///< one queue BFS per source
};

/// BFS from every vertex; parallel over sources.
DistanceMatrix distance_matrix(const Graph& g);

/// Single-source BFS distances.
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source);

/// Per-vertex eccentricities. Throws DisconnectedError on disconnected input.
std::vector<std::uint32_t> eccentricities(const Graph& g, EccKernel kernel = EccKernel::automatic);

/// Throws DisconnectedError when g is disconnected and DomainError when empty.
EccProfile ecc_profile(const Graph& g, EccKernel kernel = EccKernel::automatic);

EccProfile profile_from_ecc(std::vector<std::uint32_t> ecc);

namespace reference {

// Serial, allocation-heavy versions kept as cross-checks for the kernels above.
DistanceMatrix distance_matrix(const Graph& g);
std::vector<std::uint32_t> eccentricities(const Graph& g);

}  // namespace reference

}  // namespace asc
