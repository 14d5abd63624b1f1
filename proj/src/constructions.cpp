#include "asc/constructions.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "asc/analysis.hpp"
#include "asc/distance.hpp"
#include "asc/errors.hpp"
#include "asc/families.hpp"

namespace asc {

namespace {

/// Host under construction: guest vertices keep their labels, added vertices
/// are appended in creation order.
class HostBuilder {
 public:
  explicit HostBuilder(const Graph& guest) : guest_(guest), edges_(guest.edges()) {}

  Vertex add(std::string role) {
    const auto v = static_cast<Vertex>(guest_.order() + added_.size());
    added_.push_back({std::move(role), v});
    return v;
  }

  void edge(Vertex a, Vertex b) { edges_.emplace_back(a, b); }

  Embedding finish(std::string method, std::uint32_t r) {
    Embedding e;
    e.guest = guest_;
    e.host = Graph(guest_.order() + added_.size(), edges_);
    e.map.resize(guest_.order());
    for (Vertex v = 0; v < guest_.order(); ++v) e.map[v] = v;
    e.added = std::move(added_);
    e.method = std::move(method);
    e.r = r;
    verify_embedding(e);
    return e;
  }

 private:
  const Graph& guest_;
  std::vector<Edge> edges_;
  std::vector<AddedVertex> added_;
};

std::vector<Vertex> chain(HostBuilder& b, const std::string& prefix, std::uint32_t count) {
  std::vector<Vertex> out(count + 1);  // index 0 unused so out[i] is prefix_i
  for (std::uint32_t i = 1; i <= count; ++i) out[i] = b.add(prefix + std::to_string(i));
  return out;
}

void require_r(std::uint32_t r, std::uint32_t min) {
  if (r < min) throw DomainError("r must be at least " + std::to_string(min));
}

std::string witness_text(const ConditionWitness& w) {
  std::string s = std::string(theorem_name(w.tag)) + (w.holds ? " holds" : " fails");
  if (!w.vertices.empty()) {
    s += " at (";
    for (std::size_t i = 0; i < w.vertices.size(); ++i)
      s += (i ? ", " : "") + std::to_string(w.vertices[i]);
    s += ")";
  }
  return s;
}

// Builds a host whose guest-vertex labels are 0..n-1 from an explicit edge list
// on the full host vertex set.
Embedding fixed_host(const Graph& guest, std::size_t host_order, const std::vector<Edge>& edges,
                     const std::vector<std::string>& roles, std::string method) {
  HostBuilder b(guest);
  for (const auto& role : roles) b.add(role);
  if (guest.order() + roles.size() != host_order)
    throw InternalError("fixture order mismatch for " + method);
  for (auto [u, v] : edges) {
    const bool inside = u < guest.order() && v < guest.order();
    if (!inside) b.edge(u, v);
  }
  return b.finish(std::move(method), 3);
}

// C*_6 laid out as the sequence p, c0, c1, ..., c5; the first n sequence
// positions host P_n (p is the pendant at c0).
Embedding path_in_c6_star(std::size_t n) {
  const Graph guest = path_graph(n);
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < 7; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(6, 1);
  const char* names[] = {"p", "c0", "c1", "c2", "c3", "c4", "c5"};
  std::vector<std::string> roles(names + n, names + 7);
  return fixed_host(guest, 7, edges, roles, "path");
}

// v is 1-based: v(i) is the host label of guest vertex v_i.
Vertex v1(std::size_t i) { return static_cast<Vertex>(i - 1); }

// Shared template of the P_9 host and the hosts for n >= 10 (paths and cycles):
// x ~ v1, v2, v7, v8, v9; y ~ v1, v4; xy; both x and y ~ v_k for k >= 10.
Embedding two_apex_host(const Graph& guest, std::string method) {
  const auto n = guest.order();
  HostBuilder b(guest);
  const Vertex x = b.add("x");
  const Vertex y = b.add("y");
  for (std::size_t i : {1, 2, 7, 8, 9}) b.edge(x, v1(i));
  for (std::size_t i : {1, 4}) b.edge(y, v1(i));
  b.edge(x, y);
  for (std::size_t k = 10; k <= n; ++k) {
    b.edge(x, v1(k));
    b.edge(y, v1(k));
  }
  return b.finish(std::move(method), 3);
}

Embedding relabel_method(Embedding e, std::string method) {
  e.method = std::move(method);
  return e;
}

// Recognizers return iso[v] = family label of g's vertex v.
std::optional<std::vector<Vertex>> as_path(const Graph& g) {
  const auto n = g.order();
  if (!g.connected() || g.size() != n - 1 || g.max_degree() > 2) return std::nullopt;
  std::vector<Vertex> iso(n);
  Vertex start = 0;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) <= 1) {
      start = v;
      break;
    }
  Vertex prev = static_cast<Vertex>(n), cur = start;
  for (Vertex i = 0; i < n; ++i) {
    iso[cur] = i;
    Vertex next = cur;
    for (Vertex nb : g.neighbors(cur))
      if (nb != prev) next = nb;
    prev = cur;
    cur = next;
  }
  return iso;
}

std::optional<std::vector<Vertex>> as_cycle(const Graph& g) {
  const auto n = g.order();
  if (n < 3 || !g.connected() || g.size() != n) return std::nullopt;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != 2) return std::nullopt;
  std::vector<Vertex> iso(n);
  Vertex prev = n, cur = 0;
  for (Vertex i = 0; i < n; ++i) {
    iso[cur] = i;
    auto nbs = g.neighbors(cur);
    Vertex next = nbs[0] == prev ? nbs[1] : nbs[0];
    prev = cur;
    cur = next;
  }
  return iso;
}

bool is_complete(const Graph& g) {
  const auto n = g.order();
  return g.size() == n * (n - 1) / 2;
}

// Tree of diameter n-2: longest path v_1..v_{n-1} plus a leaf at v_k.
std::optional<std::pair<std::size_t, std::vector<Vertex>>> as_caterpillar(const Graph& g) {
  const auto n = g.order();
  if (n < 10 || !g.connected() || g.size() != n - 1) return std::nullopt;
  auto d0 = bfs_distances(g, 0);
  const Vertex a = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  auto da = bfs_distances(g, a);
  const Vertex z = static_cast<Vertex>(std::max_element(da.begin(), da.end()) - da.begin());
  if (da[z] != n - 2) return std::nullopt;
  auto dz = bfs_distances(g, z);
  std::vector<Vertex> iso(n, n);
  Vertex leaf = n;
  for (Vertex v = 0; v < n; ++v) {
    if (da[v] + dz[v] == n - 2)
      iso[v] = da[v];
    else
      leaf = v;
  }
  if (leaf == n) return std::nullopt;
  const Vertex host = g.neighbors(leaf).front();
  const std::size_t k = iso[host] + 1;
  iso[leaf] = static_cast<Vertex>(n - 1);
  return std::make_pair(k, iso);
}

// Re-expresses a family embedding in terms of g's labels: g's vertex v is the
// family's vertex iso[v].
Embedding compose(const Graph& g, const std::vector<Vertex>& iso, Embedding fam) {
  std::vector<Vertex> map(g.order());
  for (Vertex v = 0; v < g.order(); ++v) map[v] = fam.map[iso[v]];
  fam.guest = g;
  fam.map = std::move(map);
  verify_embedding(fam);
  return fam;
}

// Host on C_{2r} plus a pendant where guest vertices fill some cycle
// positions as twin classes and every other position is a new vertex.
// Non-isolated guest vertices split into two classes at adjacent positions 0
// and 1 by 2-colouring a BFS forest, so each has a neighbor in the other
// class; isolated ones become twins of the new vertex at position 3. An
// edgeless guest uses positions 0 and 2 instead. Host distances then match
// the cycle, except between guest vertices (at most 3).
Embedding cycle_blowup(const Graph& g, std::uint32_t r, std::string method) {
  const auto n = static_cast<Vertex>(g.order());
  const std::uint32_t len = 2 * r;
  std::vector<std::uint32_t> pos(n, 3);
  std::vector<bool> occupied(len, false);
  std::uint32_t pendant_at = 2;
  if (g.isolated_vertices().size() == n) {
    for (Vertex v = 0; v < n; ++v) pos[v] = v == 0 ? 0 : 2;
    occupied[0] = occupied[2] = true;
    pendant_at = 1;
  } else {
    std::vector<bool> seen(n, false);
    for (Vertex root = 0; root < n; ++root) {
      if (seen[root] || g.degree(root) == 0) continue;
      seen[root] = true;
      pos[root] = 0;
      std::vector<Vertex> queue{root};
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (Vertex u : g.neighbors(queue[i]))
          if (!seen[u]) {
            seen[u] = true;
            pos[u] = 1 - pos[queue[i]];
            queue.push_back(u);
          }
    }
    occupied[0] = occupied[1] = true;
  }

  HostBuilder b(g);
  std::vector<std::optional<Vertex>> c(len);
  for (std::uint32_t p = 0; p < len; ++p)
    if (!occupied[p]) c[p] = b.add("c" + std::to_string(p));
  b.edge(b.add("w"), *c[pendant_at]);
  for (std::uint32_t p = 0; p < len; ++p)
    if (c[p] && c[(p + 1) % len]) b.edge(*c[p], *c[(p + 1) % len]);
  for (Vertex v = 0; v < n; ++v)
    for (std::uint32_t q : {(pos[v] + len - 1) % len, (pos[v] + 1) % len})
      if (c[q]) b.edge(v, *c[q]);
  return b.finish(std::move(method), r);
}

}  // namespace

std::string embedding_problem(const Embedding& e) {
  if (e.host.order() != e.guest.order() + e.added.size())
    return "host order " + std::to_string(e.host.order()) + " != guest order " +
           std::to_string(e.guest.order()) + " + " + std::to_string(e.added.size()) + " added";
  std::vector<bool> used(e.host.order(), false);
  try {
    if (!induced_check(e.host, e.map, e.guest)) return "guest is not induced by the map";
  } catch (const ArgumentError& ex) {
    return ex.what();
  }
  for (Vertex v : e.map) used[v] = true;
  for (const auto& a : e.added) {
    if (a.vertex >= e.host.order() || used[a.vertex])
      return "added vertex " + a.role + " collides with the guest image";
    used[a.vertex] = true;
  }
  if (!e.host.connected()) return "host is disconnected";
  const auto verdict = asc_verdict(e.host);
  if (!verdict.is_r_asc(e.r))
    return "host is not " + std::to_string(e.r) + "-ASC (radius " + std::to_string(verdict.radius) +
           ", " + std::to_string(verdict.non_central.size()) + " non-central vertices)";
  return {};
}

void verify_embedding(const Embedding& e) {
  if (auto why = embedding_problem(e); !why.empty())
    throw InternalError("embedding '" + e.method + "' failed self-verification: " + why);
}

Embedding embed_hat(const Graph& g, std::uint32_t r) {
  require_r(r, 2);
  if (g.order() == 0) throw PreconditionError("guest must be nonempty");
  HostBuilder b(g);
  const Vertex w = b.add("w");
  auto xs = chain(b, "x", r - 1);
  auto ys = chain(b, "y", r - 1);
  const Vertex wp = b.add("w'");
  for (Vertex v = 0; v < g.order(); ++v) {
    b.edge(w, v);
    b.edge(xs[1], v);
    b.edge(ys[1], v);
  }
  for (std::uint32_t i = 1; i < r - 1; ++i) {
    b.edge(xs[i], xs[i + 1]);
    b.edge(ys[i], ys[i + 1]);
  }
  b.edge(xs[r - 1], wp);
  b.edge(ys[r - 1], wp);
  return b.finish("hat", r);
}

Embedding embed_connected(const Graph& g, std::uint32_t r) {
  require_r(r, 3);
  if (g.order() < 2) throw PreconditionError("guest must have order >= 2");
  if (!g.connected()) throw PreconditionError("guest must be connected");
  return cycle_blowup(g, r, "connected");
}

Embedding embed_general(const Graph& g, std::uint32_t r) {
  require_r(r, 3);
  if (g.order() < 2) throw PreconditionError("guest must have order >= 2 (use hat for K_1)");
  return cycle_blowup(g, r, "general");
}

Embedding embed_complete(std::size_t n) {
  if (n < 1) throw DomainError("complete graph requires n >= 1");
  const Graph guest = complete_graph(n);
  if (n == 1) {
    // C*_6 with the guest vertex as the pendant.
    HostBuilder b(guest);
    auto cs = chain(b, "c", 6);
    b.edge(0, cs[1]);
    for (int i = 1; i < 6; ++i) b.edge(cs[i], cs[i + 1]);
    b.edge(cs[6], cs[1]);
    return b.finish("complete", 3);
  }
  // Guest clique 0..n-2 plus v = n-1.
  HostBuilder b(guest);
  const Vertex v = static_cast<Vertex>(n - 1);
  const Vertex a = b.add("a"), bb = b.add("b"), d = b.add("d"), gg = b.add("g"), u = b.add("u");
  b.edge(a, bb);
  b.edge(bb, v);
  b.edge(bb, d);
  b.edge(d, gg);
  b.edge(gg, u);
  for (Vertex c = 0; c + 1 < n; ++c) b.edge(u, c);
  return b.finish("complete", 3);
}

Embedding embed_diam2_four(const Graph& g) {
  if (!g.connected()) throw PreconditionError("guest must be connected");
  const auto profile = ecc_profile(g);
  if (profile.diameter != 2)
    throw PreconditionError("guest must have diameter 2, has " + std::to_string(profile.diameter));
  const Vertex v = profile.periphery.front();
  const Vertex u = ecc_set(g, v).front();
  HostBuilder b(g);
  const Vertex w = b.add("w"), z = b.add("z"), y = b.add("y"), x = b.add("x");
  b.edge(w, z);
  b.edge(z, y);
  b.edge(y, x);
  b.edge(u, x);
  for (Vertex t = 0; t < g.order(); ++t)
    if (t != u && t != v) b.edge(w, t);
  return b.finish("diam2_four", 3);
}

Embedding embed_2sc_three(const Graph& g) {
  const auto c = check_new_added(g);
  if (!c.holds) throw PreconditionError("2sc_three requires " + witness_text(c));
  const Vertex u = c.vertices[0], v = c.vertices[1], up = c.vertices[2], vp = c.vertices[3];
  HostBuilder b(g);
  const Vertex x = b.add("x"), y = b.add("y"), z = b.add("z");
  b.edge(x, u);
  b.edge(y, v);
  b.edge(z, up);
  b.edge(z, vp);
  return b.finish("2sc_three", 3);
}

Embedding embed_triple_isolated(const Graph& g) {
  const auto c = check_isolated_vertex(g);
  if (!c.holds) throw PreconditionError("triple_isolated requires " + witness_text(c));
  const Vertex u = c.vertices[0], v = c.vertices[1], w = c.vertices[2];
  HostBuilder b(g);
  const Vertex x = b.add("x"), y = b.add("y"), z = b.add("z");
  b.edge(u, x);
  b.edge(v, z);
  b.edge(x, y);
  b.edge(y, z);
  const auto eu = ecc_set(g, u);
  for (Vertex s : ecc_set(g, v))
    if (s != w && std::binary_search(eu.begin(), eu.end(), s)) b.edge(x, s);
  return b.finish("triple_isolated", 3);
}

Embedding embed_triple_p3(const Graph& g) {
  const auto c = check_p3(g);
  if (!c.holds) throw PreconditionError("triple_p3 requires " + witness_text(c));
  const auto d = distance_matrix(g);
  const auto n = static_cast<Vertex>(g.order());
  auto in_s = [&](Vertex u, Vertex v, Vertex w) { return d(u, w) == 2 && d(v, w) == 2; };
  // x is joined to u, w3 and the common eccentric vertices outside N[w1].
  auto attach = [&](Vertex u, Vertex v, Vertex w1, Vertex w3) {
    std::vector<Vertex> xs{u, w3};
    for (Vertex s = 0; s < n; ++s)
      if (s != w3 && in_s(u, v, s) && s != w1 && !g.adjacent(s, w1)) xs.push_back(s);
    return xs;
  };
  auto covers = [&](Vertex v, Vertex w1, const std::vector<Vertex>& xs) {
    for (Vertex t = 0; t < n; ++t) {
      if (t == w1 || d(v, t) <= 1) continue;
      if (std::none_of(xs.begin(), xs.end(), [&](Vertex s) { return d(s, t) <= 1; })) return false;
    }
    return true;
  };
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (d(u, v) != 2) continue;
      for (Vertex w1 = 0; w1 < n; ++w1) {
        if (!in_s(u, v, w1)) continue;
        for (Vertex w2 : g.neighbors(w1)) {
          if (!in_s(u, v, w2)) continue;
          for (Vertex w3 : g.neighbors(w2)) {
            if (w3 == w1 || !in_s(u, v, w3) || g.adjacent(w1, w3)) continue;
            const auto xs = attach(u, v, w1, w3);
            if (!covers(v, w1, xs)) continue;  // some vertex besides w1 would be at distance 4 from y
            HostBuilder b(g);
            const Vertex x = b.add("x"), y = b.add("y"), z = b.add("z");
            b.edge(x, y);
            b.edge(y, z);
            b.edge(v, z);
            for (Vertex s : xs) b.edge(x, s);
            return b.finish("triple_p3", 3);
          }
        }
      }
    }
  throw PreconditionError("triple_p3: no induced P_3 witness leaves every vertex within 3 of y");
}

Embedding embed_path(std::size_t n) {
  if (n < 1) throw DomainError("path requires n >= 1");
  if (n <= 2) return relabel_method(embed_complete(n), "path");
  if (n <= 6) return path_in_c6_star(n);
  const Graph guest = path_graph(n);
  if (n == 7 || n == 8) {
    HostBuilder b(guest);
    const Vertex x = b.add("x");
    for (std::size_t i : {1, 2, 3, 7}) b.edge(x, v1(i));
    if (n == 8) b.edge(x, v1(8));
    return b.finish("path", 3);
  }
  return two_apex_host(guest, "path");
}

Embedding embed_cycle(std::size_t n) {
  if (n < 3) throw DomainError("cycle requires n >= 3");
  const Graph guest = cycle_graph(n);
  switch (n) {
    case 3:
      return relabel_method(embed_complete(3), "cycle");
    case 4:
      return relabel_method(embed_diam2_four(guest), "cycle");
    case 5: {
      HostBuilder b(guest);
      const Vertex t = b.add("t"), p = b.add("p"), q = b.add("q");
      b.edge(t, 0);
      b.edge(t, 1);
      b.edge(p, 2);
      b.edge(q, 4);
      return b.finish("cycle", 3);
    }
    case 6: {
      HostBuilder b(guest);
      b.edge(b.add("p"), 0);
      return b.finish("cycle", 3);
    }
    case 7: {
      HostBuilder b(guest);
      const Vertex t = b.add("t");
      b.edge(t, 0);
      b.edge(t, 1);
      return b.finish("cycle", 3);
    }
    case 8: {
      HostBuilder b(guest);
      const Vertex t = b.add("t");
      for (Vertex v = 0; v < 5; ++v) b.edge(t, v);
      return b.finish("cycle", 3);
    }
    case 9: {
      HostBuilder b(guest);
      const Vertex x = b.add("x"), y = b.add("y");
      for (std::size_t i = 3; i <= 7; ++i) b.edge(x, v1(i));
      b.edge(y, v1(6));
      b.edge(y, v1(9));
      b.edge(x, y);
      return b.finish("cycle", 3);
    }
    default:
      return two_apex_host(guest, "cycle");
  }
}

Embedding embed_tree_caterpillar(std::size_t n, std::size_t k) {
  if (n < 10) throw DomainError("tree_caterpillar requires n >= 10");
  if (k < 2 || k > n - 2) throw DomainError("tree_caterpillar requires 2 <= k <= n-2");
  const Graph guest = build_family({FamilyKind::caterpillar, {int(n), int(k)}});
  HostBuilder b(guest);
  const Vertex x = b.add("x"), y = b.add("y");
  b.edge(x, y);
  for (std::size_t i : {std::size_t{1}, std::size_t{2}}) b.edge(x, v1(i));
  for (std::size_t i = 7; i <= n - 1; ++i) b.edge(x, v1(i));
  for (std::size_t j : {std::size_t{1}, std::size_t{4}}) b.edge(y, v1(j));
  for (std::size_t j = 10; j <= n; ++j)
    if (!(j == n && k == 6)) b.edge(y, v1(j));
  if (k != 5) b.edge(x, v1(n));
  return b.finish("tree_caterpillar", 3);
}

Embedding embed_auto(const Graph& g, std::uint32_t r) {
  require_r(r, 2);
  if (g.order() == 0) throw PreconditionError("guest must be nonempty");
  std::optional<Embedding> best;
  auto consider = [&](const std::function<Embedding()>& build) {
    try {
      Embedding e = build();
      if (!best || e.added_count() < best->added_count()) best = std::move(e);
    } catch (const PreconditionError&) {
    } catch (const DomainError&) {
    }
  };

  if (g.connected() && asc_verdict(g).is_r_asc(r)) {
    Embedding e;
    e.guest = g;
    e.host = g;
    e.map.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) e.map[v] = v;
    e.method = "identity";
    e.r = r;
    verify_embedding(e);
    return e;
  }

  if (r == 3) {
    if (auto iso = as_path(g)) consider([&] { return compose(g, *iso, embed_path(g.order())); });
    if (auto iso = as_cycle(g)) consider([&] { return compose(g, *iso, embed_cycle(g.order())); });
    if (is_complete(g)) consider([&] { return relabel_method(embed_complete(g.order()), "complete"); });
    if (auto cat = as_caterpillar(g))
      consider([&] {
        return compose(g, cat->second, embed_tree_caterpillar(g.order(), cat->first));
      });
    const bool diam2 = g.connected() && g.order() >= 2 && ecc_profile(g).diameter == 2;
    if (diam2) {
      consider([&] { return embed_2sc_three(g); });
      consider([&] { return embed_triple_isolated(g); });
      consider([&] { return embed_triple_p3(g); });
      consider([&] { return embed_diam2_four(g); });
    }
  }
  if (r >= 3 && g.order() >= 2) {
    if (g.connected())
      consider([&] { return embed_connected(g, r); });
    else
      consider([&] { return embed_general(g, r); });
  }
  consider([&] { return embed_hat(g, r); });
  return std::move(*best);
}

std::vector<std::string> embedding_methods() {
  return {"auto", "hat", "connected", "general", "diam2_four", "2sc_three", "triple_isolated",
          "triple_p3"};
}

Embedding embed_by_method(const Graph& g, std::uint32_t r, const std::string& method) {
  auto only_r3 = [&] {
    if (r != 3) throw DomainError("method " + method + " builds 3-ASC hosts only (r = 3)");
  };
  if (method == "auto") return embed_auto(g, r);
  if (method == "hat") return embed_hat(g, r);
  if (method == "connected") return embed_connected(g, r);
  if (method == "general") return embed_general(g, r);
  const auto methods = embedding_methods();
  if (std::find(methods.begin(), methods.end(), method) == methods.end())
    throw ArgumentError("unknown method \"" + method + "\"");
  only_r3();
  if (method == "diam2_four") return embed_diam2_four(g);
  if (method == "2sc_three") return embed_2sc_three(g);
  if (method == "triple_isolated") return embed_triple_isolated(g);
  if (method == "triple_p3") return embed_triple_p3(g);
  throw ArgumentError("unknown method \"" + method + "\"");
}

}  // namespace asc
