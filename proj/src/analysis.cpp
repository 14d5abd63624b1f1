#include "asc/analysis.hpp"

#include <algorithm>

#include "asc/errors.hpp"

namespace asc {

namespace {

struct Distances {
  DistanceMatrix d;
  EccProfile profile;
};

Distances connected_distances(const Graph& g) {
  Distances out{distance_matrix(g), {}};
  out.profile = ecc_profile(g);
  return out;
}

Distances diameter_two(const Graph& g) {
  auto out = connected_distances(g);
  if (out.profile.diameter != 2)
    throw PreconditionError("requires diameter 2, graph has diameter " +
                            std::to_string(out.profile.diameter));
  return out;
}

// Ecc(u) & Ecc(v) for a non-adjacent pair in a diameter-2 graph.
std::vector<Vertex> common_eccentric(const DistanceMatrix& d, Vertex u, Vertex v) {
  std::vector<Vertex> s;
  for (Vertex w = 0; w < d.order(); ++w)
    if (d(u, w) == 2 && d(v, w) == 2) s.push_back(w);
  return s;
}

bool contains(const std::vector<Vertex>& sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

bool new_added_holds_at(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v, Vertex up,
                        Vertex vp) {
  if (d(u, v) != 2) return false;
  if (!g.adjacent(u, up) || g.adjacent(v, up)) return false;
  if (!g.adjacent(v, vp) || g.adjacent(u, vp)) return false;
  for (Vertex c = 0; c < g.order(); ++c)
    if (g.adjacent(u, c) && g.adjacent(v, c) && (d(up, c) != 2 || d(vp, c) != 2)) return false;
  return true;
}

bool isolated_holds_at(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v, Vertex w) {
  if (d(u, v) != 2) return false;
  auto s = common_eccentric(d, u, v);
  if (!contains(s, w)) return false;
  return std::none_of(s.begin(), s.end(), [&](Vertex t) { return g.adjacent(w, t); });
}

bool p3_holds_at(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v, Vertex w1, Vertex w2,
                 Vertex w3) {
  if (d(u, v) != 2) return false;
  auto s = common_eccentric(d, u, v);
  if (!contains(s, w1) || !contains(s, w2) || !contains(s, w3)) return false;
  return w1 != w3 && g.adjacent(w1, w2) && g.adjacent(w2, w3) && !g.adjacent(w1, w3);
}

// Returns true when (u, v) satisfies the per-pair clause of union_of_complete.
bool union_pair_ok(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v) {
  auto s = common_eccentric(d, u, v);
  if (s.empty()) return false;
  auto in_s = [&](Vertex t) { return contains(s, t); };
  // Components of G[S] are cliques iff adjacency inside S is transitive:
  // every pair with a common S-neighbor is adjacent. Check directly.
  for (Vertex a : s) {
    std::size_t inside = 0;
    for (Vertex b : s) {
      if (a == b || !g.adjacent(a, b)) continue;
      ++inside;
      for (Vertex c : s)
        if (c != a && c != b && g.adjacent(b, c) && !g.adjacent(a, c)) return false;
    }
    if (inside == 0) return false;  // singleton component
    for (Vertex t = 0; t < g.order(); ++t)
      if (g.adjacent(a, t) && !in_s(t) && !(g.adjacent(u, t) && g.adjacent(v, t))) return false;
  }
  return true;
}

}  // namespace

AscVerdict asc_verdict(const EccProfile& p) {
  AscVerdict verdict;
  verdict.radius = p.radius;
  for (Vertex v = 0; v < p.ecc.size(); ++v)
    if (p.ecc[v] != p.radius) {
      verdict.non_central.push_back(v);
      verdict.ecc_of_non_central.push_back(p.ecc[v]);
    }
  verdict.is_asc = verdict.non_central.size() == 2;
  return verdict;
}

AscVerdict asc_verdict(const Graph& g) { return asc_verdict(ecc_profile(g)); }

std::vector<Vertex> ecc_set(const Graph& g, Vertex u) {
  if (u >= g.order()) throw ArgumentError("vertex out of range");
  auto dist = bfs_distances(g, u);
  const auto far = *std::max_element(dist.begin(), dist.end());
  if (far == kUnreachable) throw DisconnectedError();
  std::vector<Vertex> out;
  if (far == 0) return out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (dist[v] == far) out.push_back(v);
  return out;
}

std::vector<Vertex> n2_set(const Graph& g, Vertex u) {
  if (u >= g.order()) throw ArgumentError("vertex out of range");
  auto dist = bfs_distances(g, u);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (dist[v] == 2) out.push_back(v);
  return out;
}

DiametricalStructure diametrical_structure(const Graph& g) {
  auto [d, profile] = connected_distances(g);
  DiametricalStructure out;
  out.diameter = profile.diameter;
  if (out.diameter == 0) return out;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (d(a, b) != out.diameter) continue;
      out.pairs.push_back({a, b});
      for (Vertex c = b + 1; c < n; ++c)
        if (d(a, c) == out.diameter && d(b, c) == out.diameter) out.triples.push_back({a, b, c});
    }
  return out;
}

std::string_view theorem_name(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::new_added: return "new_added";
    case TheoremTag::no_triple: return "no_triple";
    case TheoremTag::isolated_vertex: return "isolated_vertex";
    case TheoremTag::p3: return "p3";
    case TheoremTag::union_of_complete: return "union_of_complete";
  }
  return "?";
}

std::string_view verdict_name(Diam2Verdict v) {
  switch (v) {
    case Diam2Verdict::exactly_3: return "exactly_3";
    case Diam2Verdict::exactly_4: return "exactly_4";
    case Diam2Verdict::bounds_3_4: return "bounds_3_4";
  }
  return "?";
}

ConditionWitness check_new_added(const Graph& g) {
  auto [d, profile] = connected_distances(g);
  ConditionWitness out{TheoremTag::new_added, {}, false};
  if (profile.radius != 2 || profile.diameter != 2) return out;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (d(u, v) != 2) continue;
      for (Vertex up = 0; up < n; ++up)
        for (Vertex vp = 0; vp < n; ++vp)
          if (new_added_holds_at(g, d, u, v, up, vp)) {
            out.vertices = {u, v, up, vp};
            out.holds = true;
            return out;
          }
    }
  return out;
}

ConditionWitness check_isolated_vertex(const Graph& g) {
  auto [d, profile] = diameter_two(g);
  ConditionWitness out{TheoremTag::isolated_vertex, {}, false};
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (d(u, v) != 2) continue;
      for (Vertex w : common_eccentric(d, u, v))
        if (isolated_holds_at(g, d, u, v, w)) {
          out.vertices = {u, v, w};
          out.holds = true;
          return out;
        }
    }
  return out;
}

ConditionWitness check_p3(const Graph& g) {
  auto [d, profile] = diameter_two(g);
  ConditionWitness out{TheoremTag::p3, {}, false};
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (d(u, v) != 2) continue;
      auto s = common_eccentric(d, u, v);
      for (Vertex w1 : s)
        for (Vertex w2 : s)
          for (Vertex w3 : s)
            if (w1 != w3 && g.adjacent(w1, w2) && g.adjacent(w2, w3) && !g.adjacent(w1, w3)) {
              out.vertices = {u, v, w1, w2, w3};
              out.holds = true;
              return out;
            }
    }
  return out;
}

ConditionWitness check_no_triple(const Graph& g) {
  diameter_two(g);
  auto structure = diametrical_structure(g);
  ConditionWitness out{TheoremTag::no_triple, {}, structure.triples.empty()};
  if (!out.holds) {
    const auto& t = structure.triples.front();
    out.vertices = {t[0], t[1], t[2]};
  }
  return out;
}

ConditionWitness check_union_of_complete(const Graph& g) {
  auto [d, profile] = diameter_two(g);
  ConditionWitness out{TheoremTag::union_of_complete, {}, false};
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) && !union_pair_ok(g, d, u, v)) {
        out.vertices = {u, v};
        return out;
      }
  if (auto na = check_new_added(g); na.holds) {
    out.vertices = na.vertices;
    return out;
  }
  out.holds = true;
  return out;
}

bool recheck(const Graph& g, const ConditionWitness& w) {
  const auto& x = w.vertices;
  for (Vertex v : x)
    if (v >= g.order()) return false;
  switch (w.tag) {
    case TheoremTag::new_added: {
      auto [d, profile] = connected_distances(g);
      return profile.radius == 2 && profile.diameter == 2 && x.size() == 4 &&
             new_added_holds_at(g, d, x[0], x[1], x[2], x[3]);
    }
    case TheoremTag::isolated_vertex: {
      auto [d, profile] = diameter_two(g);
      return x.size() == 3 && isolated_holds_at(g, d, x[0], x[1], x[2]);
    }
    case TheoremTag::p3: {
      auto [d, profile] = diameter_two(g);
      return x.size() == 5 && p3_holds_at(g, d, x[0], x[1], x[2], x[3], x[4]);
    }
    case TheoremTag::no_triple:
      return check_no_triple(g).holds;
    case TheoremTag::union_of_complete:
      return check_union_of_complete(g).holds;
  }
  return false;
}

Diam2Classification classify_diam2(const Graph& g) {
  diameter_two(g);
  Diam2Classification out;
  out.justification = {check_new_added(g), check_isolated_vertex(g), check_p3(g),
                       check_no_triple(g), check_union_of_complete(g)};
  const auto& j = out.justification;
  const bool new_added = j[0].holds;
  bool three = false, four = false;
  for (std::size_t i = 0; i < 3; ++i)
    if (j[i].holds) {
      three = true;
      out.applied.push_back(j[i].tag);
    }
  if (j[3].holds && !new_added) {
    four = true;
    out.applied.push_back(TheoremTag::no_triple);
  }
  if (j[4].holds) {
    four = true;
    out.applied.push_back(TheoremTag::union_of_complete);
  }
  if (three && four)
    throw InternalError("classify_diam2: both exactly_3 and exactly_4 hypotheses hold");
  out.verdict = three ? Diam2Verdict::exactly_3
                      : (four ? Diam2Verdict::exactly_4 : Diam2Verdict::bounds_3_4);
  return out;
}

}  // namespace asc
