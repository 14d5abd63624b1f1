#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "asc/distance.hpp"
#include "asc/graph.hpp"

namespace asc {

struct AscVerdict {
  bool is_asc = false;
  std::uint32_t radius = 0;
  std::vector<Vertex> non_central;
  std::vector<std::uint32_t> ecc_of_non_central;  // parallel to non_central

  bool is_r_asc(std::uint32_t r) const noexcept { return is_asc && radius == r; }
};

/// Throws DisconnectedError on disconnected input.
AscVerdict asc_verdict(const Graph& g);
AscVerdict asc_verdict(const EccProfile& profile);

/// Vertices at distance ecc(u) from u. Requires g connected.
std::vector<Vertex> ecc_set(const Graph& g, Vertex u);
/// Vertices at distance exactly 2 from u.
std::vector<Vertex> n2_set(const Graph& g, Vertex u);

struct DiametricalStructure {
  std::uint32_t diameter = 0;
  std::vector<std::array<Vertex, 2>> pairs;
  std::vector<std::array<Vertex, 3>> triples;
};

DiametricalStructure diametrical_structure(const Graph& g);

enum class TheoremTag { new_added, no_triple, isolated_vertex, p3, union_of_complete };

std::string_view theorem_name(TheoremTag tag);

/// Outcome of one sufficient-condition check.
///
/// vertices, by tag:
///   new_added:         (u, v, u', v')
///   isolated_vertex:   (u, v, w)
///   p3:                (u, v, w1, w2, w3)
///   no_triple:         empty when it holds, else the first diametrical triple
///   union_of_complete: empty when it holds, else the first violating pair (u, v)
struct ConditionWitness {
  TheoremTag tag;
  std::vector<Vertex> vertices;
  bool holds = false;
};

/// 2-self-centered graph with a diametrical pair u, v and u' in N(u)\N(v),
/// v' in N(v)\N(u) such that N(u) & N(v) lies in Ecc(u') & Ecc(v').
ConditionWitness check_new_added(const Graph& g);
/// Diameter 2: some u, v of a diametrical triple leave an isolated vertex w in
/// G[Ecc(u) & Ecc(v)].
ConditionWitness check_isolated_vertex(const Graph& g);
/// Diameter 2: some u, v of a diametrical triple have an induced P_3 in
/// G[Ecc(u) & Ecc(v)].
ConditionWitness check_p3(const Graph& g);
/// Diameter 2: no three vertices are pairwise at distance 2.
ConditionWitness check_no_triple(const Graph& g);
/// Diameter 2: for every non-adjacent u, v the set S = Ecc(u) & Ecc(v) induces
/// a nonempty disjoint union of cliques of order >= 2, every neighbor outside S
/// of a vertex of S lies in N(u) & N(v), and check_new_added fails.
ConditionWitness check_union_of_complete(const Graph& g);

/// Re-tests the hypothesis on the cited vertices (or globally, for the
/// universally quantified tags).
bool recheck(const Graph& g, const ConditionWitness& w);

enum class Diam2Verdict { exactly_3, exactly_4, bounds_3_4 };

std::string_view verdict_name(Diam2Verdict v);

struct Diam2Classification {
  Diam2Verdict verdict = Diam2Verdict::bounds_3_4;
  /// Every checker outcome in evaluation order: new_added, isolated_vertex,
  /// p3, no_triple, union_of_complete.
  std::vector<ConditionWitness> justification;
  /// Tags whose hypotheses fixed the verdict.
  std::vector<TheoremTag> applied;
};

/// Requires a connected graph of diameter exactly 2.
Diam2Classification classify_diam2(const Graph& g);

}  // namespace asc
