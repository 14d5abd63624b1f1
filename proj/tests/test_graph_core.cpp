#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "asc/distance.hpp"
#include "asc/errors.hpp"
#include "asc/families.hpp"
#include "asc/graph.hpp"
#include "asc/graph_io.hpp"
#include "oracle.hpp"

using namespace asc;

namespace {

Graph fam(const char* text) { return build_family(parse_family(text)); }

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("basic operations") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    g.add_edge(3, 4);
    CHECK(g.size() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK(g.degree(1) == 1);
    CHECK(g.isolated_vertices() == std::vector<Vertex>{2});
    CHECK(g.components().size() == 3);
    CHECK_FALSE(g.connected());
    CHECK_THROWS_AS(g.add_edge(2, 2), ArgumentError);
    g.remove_edge(0, 1);
    CHECK(g.size() == 1);
  }

  TEST_CASE("edges are sorted and rows span more than one word") {
    Graph g(130);
    g.add_edge(129, 0);
    g.add_edge(64, 65);
    g.add_edge(3, 70);
    CHECK(g.words_per_row() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 129}, {3, 70}, {64, 65}});
  }

  TEST_CASE("permuted and induced") {
    const Graph p = path_graph(4);
    const std::vector<Vertex> perm{3, 2, 1, 0};
    CHECK(p.permuted(perm) == p);
    const std::vector<Vertex> sub{0, 2, 3};
    const Graph h = p.induced(sub);
    CHECK(h.order() == 3);
    CHECK(h.edges() == std::vector<Edge>{{1, 2}});
  }

  TEST_CASE("families") {
    const Graph c6 = fam("cycle:6");
    CHECK(c6.order() == 6);
    CHECK(c6.size() == 6);
    for (Vertex v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);

    const Graph cs = fam("gadget_c_star:6");
    CHECK(cs.order() == 7);
    CHECK(cs.size() == 7);

    const Graph cat = fam("caterpillar:10,5");
    CHECK(cat.order() == 10);
    CHECK(cat.size() == 9);
    CHECK(cat.connected());
    CHECK(oracle::diameter(oracle::floyd_warshall(cat)) == 8);

    const Graph pg = fam("petersen");
    CHECK(pg.order() == 10);
    CHECK(pg.size() == 15);
    CHECK(pg.min_degree() == 3);
    CHECK(pg.max_degree() == 3);

    CHECK(fam("cocktail_party:3").size() == 12);
    CHECK(fam("complete_bipartite:2,3").size() == 6);
    CHECK(fam("star:3").degree(0) == 3);
    CHECK(fam("gadget_c8_double").degree(8) == 5);
  }

  TEST_CASE("family errors") {
    CHECK_THROWS_AS(parse_family("nosuch:3"), ParseError);
    CHECK_THROWS_AS(parse_family("cycle:x"), ParseError);
    CHECK_THROWS_AS(fam("cycle:2"), DomainError);
    CHECK_THROWS_AS(fam("caterpillar:10,9"), DomainError);
    CHECK(format_family(parse_family("caterpillar:12,6")) == "caterpillar:12,6");
  }

  TEST_CASE("combine") {
    const Graph j = join(complete_graph(1), copies(path_graph(2), 3));
    CHECK(j.order() == 7);
    CHECK(j.degree(0) == 6);
    CHECK(j == fam("k1_join_matchings:3"));

    const Graph u = disjoint_union(path_graph(2), path_graph(2));
    CHECK(u.order() == 4);
    CHECK(u.size() == 2);
    CHECK_FALSE(u.connected());

    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
      const Graph g = oracle::random_graph(9, 0.4, rng);
      CHECK(complement(complement(g)) == g);
      CHECK(complement(g).size() + g.size() == 36);
    }
    CHECK_THROWS_AS(combine(CombineOp::join, path_graph(2)), ArgumentError);
    CHECK_THROWS_AS(combine(CombineOp::complement, path_graph(2), &u), ArgumentError);
  }

  TEST_CASE("induced_check") {
    const Graph host = fam("gadget_c_star:6");
    const Graph guest = path_graph(6);
    const std::vector<Vertex> map{6, 0, 1, 2, 3, 4};
    CHECK(induced_check(host, map, guest));

    // Brute force over all injective maps. Only dropping vertex 1 or 5 leaves
    // a path, and P_6 has two automorphisms, so four maps.
    std::vector<Vertex> pick(7);
    std::iota(pick.begin(), pick.end(), 0);
    int found = 0;
    do {
      bool ok = true;
      for (Vertex a = 0; a < 6 && ok; ++a)
        for (Vertex b = a + 1; b < 6 && ok; ++b)
          ok = guest.adjacent(a, b) == host.adjacent(pick[a], pick[b]);
      if (ok) {
        ++found;
        CHECK(induced_check(host, std::span(pick).first(6), guest));
      }
    } while (std::next_permutation(pick.begin(), pick.end()));
    CHECK(found == 4);

    const std::vector<Vertex> tri{0, 1, 2};
    CHECK_FALSE(induced_check(complete_graph(3), tri, path_graph(3)));
    std::vector<Vertex> id(10);
    std::iota(id.begin(), id.end(), 0);
    CHECK(induced_check(fam("petersen"), id, fam("petersen")));
    const std::vector<Vertex> dup{0, 0, 1};
    CHECK_THROWS_AS(induced_check(complete_graph(3), dup, path_graph(3)), ArgumentError);
    const std::vector<Vertex> far{0, 1, 7};
    CHECK_THROWS_AS(induced_check(complete_graph(3), far, path_graph(3)), ArgumentError);
  }
}

TEST_SUITE("graph_io") {
  TEST_CASE("graph6 fixed strings") {
    CHECK(write_graph6(complete_graph(1)) == "@");
    CHECK(write_graph6(complete_graph(2)) == "A_");
    CHECK(write_graph6(Graph(0)) == "?");
    CHECK(parse_graph6(">>graph6<<A_\n") == complete_graph(2));
  }

  TEST_CASE("graph6 errors carry offsets") {
    try {
      parse_graph6("A_x");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 2);
    }
    try {
      parse_graph6("A\x7f");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 1);
    }
    // K_2 with a nonzero padding bit.
    CHECK_THROWS_AS(parse_graph6("A`"), ParseError);
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);
    CHECK_THROWS_AS(write_graph6(Graph(63)), DomainError);
  }

  TEST_CASE("graph6 round trip") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
      std::uniform_int_distribution<std::size_t> n_dist(0, 62);
      const Graph g = oracle::random_graph(n_dist(rng), 0.3, rng);
      CHECK(parse_graph6(write_graph6(g)) == g);
    }
  }

  TEST_CASE("edge list") {
    const Graph g = parse_edge_list("# comment\n4 3\n0 1\n1 2 # trailing\n2 3\n");
    CHECK(g == path_graph(4));
    CHECK(parse_edge_list(write_edge_list(fam("petersen"))) == fam("petersen"));
    std::istringstream in("3 1\n0 2\n");
    CHECK(parse_edge_list(in).size() == 1);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("x"), ParseError);
  }

  TEST_CASE("content hash is label-sensitive but stable") {
    CHECK(content_hash(path_graph(5)) == content_hash(path_graph(5)));
    CHECK(content_hash(path_graph(5)) != content_hash(cycle_graph(5)));
    CHECK(content_hash(path_graph(5)).size() == 16);
  }
}

TEST_SUITE("distance") {
  TEST_CASE("small examples") {
    const auto d = distance_matrix(path_graph(4));
    CHECK(d(0, 3) == 3);
    const auto c6 = distance_matrix(cycle_graph(6));
    for (Vertex u = 0; u < 6; ++u) CHECK(c6(u, (u + 3) % 6) == 3);
    const auto two = distance_matrix(empty_graph(2));
    CHECK(two(0, 1) == kUnreachable);
    CHECK(two(0, 0) == 0);

    const auto p = ecc_profile(path_graph(4));
    CHECK(p.ecc == std::vector<std::uint32_t>{3, 2, 2, 3});
    CHECK(p.radius == 2);
    CHECK(p.diameter == 3);
    CHECK(p.center == std::vector<Vertex>{1, 2});
    CHECK(p.periphery == std::vector<Vertex>{0, 3});

    const auto q = ecc_profile(cycle_graph(6));
    CHECK(q.center.size() == 6);
    CHECK(q.radius == 3);

    const auto s = ecc_profile(fam("gadget_c_star:6"));
    CHECK(std::count(s.ecc.begin(), s.ecc.end(), 4U) == 2);
    CHECK(std::count(s.ecc.begin(), s.ecc.end(), 3U) == 5);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(eccentricities(empty_graph(2)), DisconnectedError);
    CHECK_THROWS_AS(ecc_profile(empty_graph(3), EccKernel::bfs), DisconnectedError);
    CHECK_THROWS_AS(ecc_profile(empty_graph(3), EccKernel::bit_parallel), DisconnectedError);
    CHECK_THROWS_AS(ecc_profile(Graph(0)), DomainError);
    CHECK(ecc_profile(Graph(1)).ecc == std::vector<std::uint32_t>{0});
  }

  TEST_CASE("kernels agree with Floyd-Warshall on random graphs") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> n_dist(1, 90);
    std::uniform_real_distribution<double> p_dist(0.0, 0.25);
    int connected = 0;
    for (int i = 0; i < 1000; ++i) {
      const Graph g = oracle::random_graph(n_dist(rng), p_dist(rng), rng);
      const auto fw = oracle::floyd_warshall(g);
      const auto dm = distance_matrix(g);
      const auto ref = reference::distance_matrix(g);
      REQUIRE(dm == ref);
      bool same = true;
      for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v)
          same = same && (fw[u][v] >= oracle::kInf ? dm(u, v) == kUnreachable : dm(u, v) == fw[u][v]);
      REQUIRE(same);
      const auto e = oracle::ecc(g);
      if (e.empty()) {
        CHECK_THROWS_AS(eccentricities(g, EccKernel::bit_parallel), DisconnectedError);
        CHECK_THROWS_AS(eccentricities(g, EccKernel::bfs), DisconnectedError);
        continue;
      }
      ++connected;
      REQUIRE(eccentricities(g, EccKernel::bit_parallel) == e);
      REQUIRE(eccentricities(g, EccKernel::bfs) == e);
      REQUIRE(eccentricities(g, EccKernel::automatic) == e);
      REQUIRE(reference::eccentricities(g) == e);
    }
    CHECK(connected > 100);
  }

  TEST_CASE("profile invariants") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
      const Graph g = oracle::random_connected_graph(3 + i % 40, 0.08, rng);
      const auto p = ecc_profile(g);
      CHECK(p.radius <= p.diameter);
      CHECK(p.diameter <= 2 * p.radius);
      CHECK_FALSE(p.center.empty());
      CHECK_FALSE(p.periphery.empty());
      for (Vertex v : p.center) CHECK(p.ecc[v] == p.radius);
      for (Vertex v : p.periphery) CHECK(p.ecc[v] == p.diameter);
      for (auto [u, v] : g.edges()) {
        const auto a = p.ecc[u], b = p.ecc[v];
        CHECK((a > b ? a - b : b - a) <= 1);
      }
    }
  }

  TEST_CASE("bfs_distances") {
    const auto d = bfs_distances(cycle_graph(7), 0);
    CHECK(d == std::vector<std::uint32_t>{0, 1, 2, 3, 3, 2, 1});
  }
}
