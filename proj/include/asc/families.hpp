#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asc/graph.hpp"

namespace asc {

enum class FamilyKind {
  path,
  cycle,
  complete,
  star,                ///< K_{1,n}: center 0, leaves 1..n
  complete_bipartite,  ///< K_{a,b}: parts 0..a-1 and a..a+b-1
  cocktail_party,      ///< CP(n): K_{2n} minus the matching {i, i+n}
  k1_join_matchings,   ///< K_1 + tP_2: apex 0, pairs (1,2), (3,4), ...
  caterpillar,         ///< path v_1..v_{n-1} plus leaf v_n at v_k
  gadget_c_star,       ///< C_m plus a pendant vertex m at vertex 0
  gadget_c_prime,      ///< C_m plus vertex m adjacent to 0 and 1
  gadget_c8_double,    ///< C_8 plus vertex 8 adjacent to 0..4
  petersen,            ///< outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5
};

struct FamilySpec {
  FamilyKind kind;
  std::vector<int> params;
};

std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> family_from_name(std::string_view name);

/// Documentation of the "name:params" mini-grammar, one line per family.
std::string family_grammar();

/// Parses "name:p1,p2". Throws ParseError citing the grammar.
FamilySpec parse_family(std::string_view text);
std::string format_family(const FamilySpec& spec);

/// Throws DomainError naming the violated bound.
Graph build_family(const FamilySpec& spec);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);

enum class CombineOp { join, disjoint_union, complement };

/// Binary ops need g2; complement must not get one. g1's vertices come first.
Graph combine(CombineOp op, const Graph& g1, const Graph* g2 = nullptr);

inline Graph join(const Graph& a, const Graph& b) { return combine(CombineOp::join, a, &b); }
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  return combine(CombineOp::disjoint_union, a, &b);
}
inline Graph complement(const Graph& g) { return combine(CombineOp::complement, g); }

/// t disjoint copies of g.
Graph copies(const Graph& g, std::size_t t);

}  // namespace asc
