#include "asc/families.hpp"

#include <array>
#include <charconv>

#include "asc/errors.hpp"

namespace asc {

namespace {

struct FamilyInfo {
  FamilyKind kind;
  std::string_view name;
  std::size_t arity;
  std::string_view usage;
};

constexpr std::array kFamilies{
    FamilyInfo{FamilyKind::path, "path", 1, "path:n            P_n, n >= 1"},
    FamilyInfo{FamilyKind::cycle, "cycle", 1, "cycle:n           C_n, n >= 3"},
    FamilyInfo{FamilyKind::complete, "complete", 1, "complete:n        K_n, n >= 1"},
    FamilyInfo{FamilyKind::star, "star", 1, "star:n            K_{1,n}, n >= 1"},
    FamilyInfo{FamilyKind::complete_bipartite, "complete_bipartite", 2,
               "complete_bipartite:a,b  K_{a,b}, a,b >= 1"},
    FamilyInfo{FamilyKind::cocktail_party, "cocktail_party", 1, "cocktail_party:n  CP(n), n >= 1"},
    FamilyInfo{FamilyKind::k1_join_matchings, "k1_join_matchings", 1,
               "k1_join_matchings:t  K_1 + tP_2, t >= 1"},
    FamilyInfo{FamilyKind::caterpillar, "caterpillar", 2,
               "caterpillar:n,k   tree of diameter n-2, n >= 4, 2 <= k <= n-2"},
    FamilyInfo{FamilyKind::gadget_c_star, "gadget_c_star", 1,
               "gadget_c_star:m   C_m plus a pendant vertex, m even, m >= 4"},
    FamilyInfo{FamilyKind::gadget_c_prime, "gadget_c_prime", 1,
               "gadget_c_prime:m  C_m plus a vertex on two consecutive vertices, m >= 3"},
    FamilyInfo{FamilyKind::gadget_c8_double, "gadget_c8_double", 0,
               "gadget_c8_double  C_8 plus a vertex on five consecutive vertices"},
    FamilyInfo{FamilyKind::petersen, "petersen", 0, "petersen          the Petersen graph"},
};

const FamilyInfo& info(FamilyKind kind) {
  for (const auto& f : kFamilies)
    if (f.kind == kind) return f;
  throw DomainError("unknown family kind");
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

std::string_view family_name(FamilyKind kind) { return info(kind).name; }

std::optional<FamilyKind> family_from_name(std::string_view name) {
  for (const auto& f : kFamilies)
    if (f.name == name) return f.kind;
  return std::nullopt;
}

std::string family_grammar() {
  std::string out = "family spec: name[:p1[,p2]]\n";
  for (const auto& f : kFamilies) out += "  " + std::string(f.usage) + "\n";
  return out;
}

FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  const auto name = text.substr(0, colon);
  auto kind = family_from_name(name);
  if (!kind)
    throw ParseError("unknown family \"" + std::string(name) + "\"; " + family_grammar(), 0);
  FamilySpec spec{*kind, {}};
  if (colon != std::string_view::npos) {
    std::size_t pos = colon + 1;
    while (true) {
      const auto comma = text.find(',', pos);
      const auto item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
      int value = 0;
      auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (item.empty() || ec != std::errc{} || p != item.data() + item.size())
        throw ParseError("bad family parameter \"" + std::string(item) + "\"; " + family_grammar(),
                         pos);
      spec.params.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  const auto arity = info(*kind).arity;
  // C''_8 also accepts an explicit ":8".
  const bool c8_with_param = *kind == FamilyKind::gadget_c8_double && spec.params.size() == 1 &&
                             spec.params[0] == 8;
  if (spec.params.size() != arity && !c8_with_param)
    throw ParseError("family " + std::string(name) + " takes " + std::to_string(arity) +
                         " parameter(s); " + family_grammar(),
                     colon == std::string_view::npos ? text.size() : colon);
  if (c8_with_param) spec.params.clear();
  return spec;
}

std::string format_family(const FamilySpec& spec) {
  std::string out(family_name(spec.kind));
  for (std::size_t i = 0; i < spec.params.size(); ++i)
    out += (i == 0 ? ":" : ",") + std::to_string(spec.params[i]);
  return out;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle requires n >= 3");
  Graph g = path_graph(n);
  g.add_edge(static_cast<Vertex>(n - 1), 0);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph build_family(const FamilySpec& spec) {
  const auto& fi = info(spec.kind);
  require(spec.params.size() == fi.arity,
          std::string(fi.name) + " takes " + std::to_string(fi.arity) + " parameter(s)");
  auto p = [&](std::size_t i) { return spec.params[i]; };
  switch (spec.kind) {
    case FamilyKind::path:
      require(p(0) >= 1, "path requires n >= 1");
      return path_graph(p(0));
    case FamilyKind::cycle:
      require(p(0) >= 3, "cycle requires n >= 3");
      return cycle_graph(p(0));
    case FamilyKind::complete:
      require(p(0) >= 1, "complete requires n >= 1");
      return complete_graph(p(0));
    case FamilyKind::star: {
      require(p(0) >= 1, "star requires n >= 1");
      Graph g(p(0) + 1);
      for (Vertex v = 1; v <= static_cast<Vertex>(p(0)); ++v) g.add_edge(0, v);
      return g;
    }
    case FamilyKind::complete_bipartite: {
      require(p(0) >= 1 && p(1) >= 1, "complete_bipartite requires a >= 1 and b >= 1");
      const auto a = static_cast<Vertex>(p(0)), b = static_cast<Vertex>(p(1));
      Graph g(a + b);
      for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
      return g;
    }
    case FamilyKind::cocktail_party: {
      require(p(0) >= 1, "cocktail_party requires n >= 1");
      const auto n = static_cast<Vertex>(p(0));
      Graph g = complete_graph(2 * n);
      for (Vertex i = 0; i < n; ++i) g.remove_edge(i, i + n);
      return g;
    }
    case FamilyKind::k1_join_matchings:
      require(p(0) >= 1, "k1_join_matchings requires t >= 1");
      return join(complete_graph(1), copies(path_graph(2), p(0)));
    case FamilyKind::caterpillar: {
      const int n = p(0), k = p(1);
      require(n >= 4, "caterpillar requires n >= 4");
      require(k >= 2 && k <= n - 2, "caterpillar requires 2 <= k <= n-2");
      Graph g = disjoint_union(path_graph(n - 1), complete_graph(1));
      g.add_edge(static_cast<Vertex>(k - 1), static_cast<Vertex>(n - 1));
      return g;
    }
    case FamilyKind::gadget_c_star: {
      const int m = p(0);
      require(m >= 4 && m % 2 == 0, "gadget_c_star requires an even cycle length m >= 4");
      Graph g = disjoint_union(cycle_graph(m), complete_graph(1));
      g.add_edge(0, static_cast<Vertex>(m));
      return g;
    }
    case FamilyKind::gadget_c_prime: {
      const int m = p(0);
      require(m >= 3, "gadget_c_prime requires m >= 3");
      Graph g = disjoint_union(cycle_graph(m), complete_graph(1));
      g.add_edge(0, static_cast<Vertex>(m));
      g.add_edge(1, static_cast<Vertex>(m));
      return g;
    }
    case FamilyKind::gadget_c8_double: {
      Graph g = disjoint_union(cycle_graph(8), complete_graph(1));
      for (Vertex v = 0; v < 5; ++v) g.add_edge(v, 8);
      return g;
    }
    case FamilyKind::petersen: {
      Graph g(10);
      for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
        g.add_edge(i, i + 5);
      }
      return g;
    }
  }
  throw DomainError("unknown family kind");
}

Graph combine(CombineOp op, const Graph& g1, const Graph* g2) {
  const bool binary = op != CombineOp::complement;
  if (binary != (g2 != nullptr))
    throw ArgumentError(binary ? "join/disjoint_union need two graphs"
                               : "complement takes exactly one graph");
  if (op == CombineOp::complement) {
    Graph g(g1.order());
    for (Vertex u = 0; u < g1.order(); ++u)
      for (Vertex v = u + 1; v < g1.order(); ++v)
        if (!g1.adjacent(u, v)) g.add_edge(u, v);
    return g;
  }
  const auto n1 = static_cast<Vertex>(g1.order());
  Graph g(g1.order() + g2->order());
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2->edges()) g.add_edge(u + n1, v + n1);
  if (op == CombineOp::join)
    for (Vertex u = 0; u < n1; ++u)
      for (Vertex v = 0; v < g2->order(); ++v) g.add_edge(u, v + n1);
  return g;
}

Graph copies(const Graph& g, std::size_t t) {
  Graph out(0);
  for (std::size_t i = 0; i < t; ++i) out = disjoint_union(out, g);
  return out;
}

}  // namespace asc
