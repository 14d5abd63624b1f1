#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "asc/graph.hpp"

namespace asc {

/// graph6 is supported for orders 0..62 (single-byte order field).
inline constexpr std::size_t kMaxGraph6Order = 62;

/// Parses one graph6 string. An optional ">>graph6<<" header and trailing
/// whitespace are accepted. Errors carry the byte offset.
Graph parse_graph6(std::string_view text);

/// Canonical minimal-length encoding. Throws DomainError above order 62.
std::string write_graph6(const Graph& g);

/// "n m" header, then m lines "u v"; '#' starts a comment.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Stable 64-bit content hash (FNV-1a over order and edge list), as hex.
std::string content_hash(const Graph& g);

}  // namespace asc
