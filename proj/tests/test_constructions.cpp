#include <doctest.h>

#include <random>
#include <set>

#include "asc/analysis.hpp"
#include "asc/constructions.hpp"
#include "asc/errors.hpp"
#include "asc/families.hpp"
#include "asc/graph_io.hpp"
#include "corpus.hpp"
#include "oracle.hpp"

using namespace asc;

namespace {

Graph fam(const char* text) { return build_family(parse_family(text)); }

// Checks an embedding with the oracle only: injective map, induced copy,
// added vertices are exactly the rest, host is r-ASC.
bool oracle_valid(const Embedding& e) {
  if (e.map.size() != e.guest.order()) return false;
  if (e.host.order() != e.guest.order() + e.added.size()) return false;
  std::set<Vertex> image(e.map.begin(), e.map.end());
  if (image.size() != e.map.size()) return false;
  for (const auto& a : e.added)
    if (a.vertex >= e.host.order() || image.count(a.vertex)) return false;
  for (Vertex a = 0; a < e.guest.order(); ++a)
    for (Vertex b = a + 1; b < e.guest.order(); ++b)
      if (e.guest.adjacent(a, b) != e.host.adjacent(e.map[a], e.map[b])) return false;
  return oracle::is_r_asc(e.host, e.r);
}

bool diameter_two(const Graph& g) {
  return g.connected() && oracle::diameter(oracle::floyd_warshall(g)) == 2;
}

}  // namespace

TEST_CASE("hat, connected and general on the corpus") {
  const auto graphs = corpus::graphs(120, 3);
  for (std::uint32_t r = 2; r <= 4; ++r)
    for (const auto& g : graphs) {
      const auto hat = embed_hat(g, r);
      REQUIRE(oracle_valid(hat));
      CHECK(hat.added_count() == 2 * r);
      if (r < 3 || g.order() < 2) continue;
      const auto gen = embed_general(g, r);
      REQUIRE(oracle_valid(gen));
      CHECK(gen.added_count() == 2 * r - 1);
      if (g.connected()) {
        const auto con = embed_connected(g, r);
        REQUIRE(oracle_valid(con));
        CHECK(con.added_count() == 2 * r - 1);
      }
    }
}

TEST_CASE("2r-1 constructions on edgeless, mixed and long guests") {
  std::mt19937_64 rng(8);
  std::vector<Graph> guests{empty_graph(2), empty_graph(5), path_graph(5), path_graph(40),
                            disjoint_union(path_graph(4), empty_graph(3)),
                            disjoint_union(cycle_graph(7), complete_graph(1))};
  for (int i = 0; i < 60; ++i) guests.push_back(oracle::random_graph(2 + i % 30, 0.05 * (i % 8), rng));
  for (const auto& g : guests)
    for (std::uint32_t r = 3; r <= 7; ++r) {
      const auto e = embed_general(g, r);
      REQUIRE(oracle_valid(e));
      CHECK(e.added_count() == 2 * r - 1);
    }
  // Guests on which joining second neighbors to y1 shortcuts the cycle.
  CHECK(oracle_valid(embed_connected(path_graph(5), 4)));
  CHECK(oracle_valid(embed_connected(parse_graph6("DqG"), 3)));
}

TEST_CASE("complete graphs") {
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto e = embed_complete(n);
    REQUIRE(oracle_valid(e));
    CHECK(e.added_count() == (n == 1 ? 6U : 5U));
  }
  CHECK_THROWS_AS(embed_complete(0), DomainError);
}

TEST_CASE("paths and cycles") {
  for (std::size_t n = 1; n <= 30; ++n) {
    const auto e = embed_path(n);
    REQUIRE(oracle_valid(e));
    const std::size_t want = n <= 5 ? 7 - n : n <= 8 ? 1 : 2;
    CHECK(e.added_count() == want);
  }
  for (std::size_t n = 3; n <= 30; ++n) {
    const auto e = embed_cycle(n);
    REQUIRE(oracle_valid(e));
    const std::size_t want = n <= 5 ? 8 - n : n <= 8 ? 1 : 2;
    CHECK(e.added_count() == want);
  }
  CHECK_THROWS_AS(embed_cycle(2), DomainError);
  CHECK_THROWS_AS(embed_path(0), DomainError);
}

TEST_CASE("caterpillars") {
  for (std::size_t n = 10; n <= 16; ++n)
    for (std::size_t k = 2; k <= n - 2; ++k) {
      const auto e = embed_tree_caterpillar(n, k);
      REQUIRE(oracle_valid(e));
      CHECK(e.added_count() == 2);
      CHECK(e.guest == build_family({FamilyKind::caterpillar, {int(n), int(k)}}));
    }
  CHECK_THROWS_AS(embed_tree_caterpillar(9, 4), DomainError);
  CHECK_THROWS_AS(embed_tree_caterpillar(12, 11), DomainError);
}

TEST_CASE("diameter-2 constructions") {
  const auto pg = embed_2sc_three(fam("petersen"));
  REQUIRE(oracle_valid(pg));
  CHECK(pg.host.order() == 13);

  const auto star = embed_triple_isolated(fam("star:3"));
  REQUIRE(oracle_valid(star));
  CHECK(star.added_count() == 3);

  CHECK_THROWS_AS(embed_2sc_three(complement(cycle_graph(7))), PreconditionError);
  CHECK_THROWS_AS(embed_2sc_three(cycle_graph(4)), PreconditionError);
  CHECK_THROWS_AS(embed_diam2_four(cycle_graph(6)), PreconditionError);

  int p3_seen = 0, iso_seen = 0, na_seen = 0;
  for (std::uint32_t n = 3; n <= 7; ++n)
    for (const auto& g : connected_graphs(n)) {
      if (!diameter_two(g)) continue;
      const auto four = embed_diam2_four(g);
      REQUIRE(oracle_valid(four));
      CHECK(four.added_count() == 4);
      if (check_new_added(g).holds) {
        ++na_seen;
        const auto e = embed_2sc_three(g);
        REQUIRE(oracle_valid(e));
        CHECK(e.added_count() == 3);
      }
      if (check_isolated_vertex(g).holds) {
        ++iso_seen;
        const auto e = embed_triple_isolated(g);
        REQUIRE(oracle_valid(e));
        CHECK(e.added_count() == 3);
      }
      if (check_p3(g).holds) {
        ++p3_seen;
        const auto e = embed_triple_p3(g);
        REQUIRE(oracle_valid(e));
        CHECK(e.added_count() == 3);
      }
    }
  CHECK(na_seen > 0);
  CHECK(iso_seen > 0);
  CHECK(p3_seen > 0);
}

TEST_CASE("triple_p3 witness choice") {
  // The first witness leaves a neighbor of w1 at distance 4 from y; a later one works.
  const Graph first_fails = parse_graph6("FsbF?");
  const auto e = embed_triple_p3(first_fails);
  REQUIRE(oracle_valid(e));
  CHECK(e.added_count() == 3);

  // No witness works here, although 3 added vertices suffice.
  const Graph none = parse_graph6("GsbDFK");
  REQUIRE(check_p3(none).holds);
  CHECK_THROWS_AS(embed_triple_p3(none), PreconditionError);
  const auto other = embed_triple_isolated(none);
  REQUIRE(oracle_valid(other));
  CHECK(other.added_count() == 3);

  int seen = 0, refused = 0;
  for (const auto& g : connected_graphs(8)) {
    if (!diameter_two(g) || !check_p3(g).holds) continue;
    ++seen;
    try {
      const auto h = embed_triple_p3(g);
      REQUIRE(oracle_valid(h));
    } catch (const PreconditionError&) {
      ++refused;
      CHECK(embed_auto(g, 3).added_count() == 3);
    }
  }
  CHECK(seen > 500);
  CHECK(refused == 1);
}

TEST_CASE("embed_auto is no worse than any applicable construction") {
  for (const auto& g : corpus::graphs(120, 4)) {
    const auto best = embed_auto(g, 3);
    REQUIRE(oracle_valid(best));
    CHECK(best.added_count() <= 6);
    if (oracle::is_r_asc(g, 3)) CHECK(best.added_count() == 0);
    for (const auto& m : embedding_methods()) {
      std::size_t other = 0;
      try {
        other = embed_by_method(g, 3, m).added_count();
      } catch (const PreconditionError&) {
        continue;
      } catch (const DomainError&) {
        continue;
      }
      CHECK(best.added_count() <= other);
    }
  }
  CHECK(embed_auto(fam("gadget_c_star:6"), 3).added_count() == 0);
  CHECK(embed_auto(path_graph(9), 3).added_count() == 2);
  CHECK(embed_auto(fam("petersen"), 3).added_count() == 3);
  CHECK(embed_auto(fam("caterpillar:12,6"), 3).added_count() == 2);
}

TEST_CASE("determinism and self-verification") {
  const Graph g = fam("caterpillar:11,4");
  const auto a = embed_auto(g, 3);
  const auto b = embed_auto(g, 3);
  CHECK(a.host == b.host);
  CHECK(a.map == b.map);
  CHECK(a.added == b.added);
  CHECK(embedding_problem(a).empty());

  auto broken = a;
  const auto [u, v] = broken.host.edges().front();
  broken.host.remove_edge(u, v);
  CHECK_FALSE(embedding_problem(broken).empty());
  CHECK_THROWS_AS(verify_embedding(broken), InternalError);

  auto bad_map = embed_hat(path_graph(3), 3);
  bad_map.map[1] = bad_map.map[0];
  CHECK_FALSE(embedding_problem(bad_map).empty());

  auto bad_r = embed_hat(path_graph(3), 3);
  bad_r.r = 4;
  CHECK_FALSE(embedding_problem(bad_r).empty());
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(embed_hat(Graph(0), 3), PreconditionError);
  CHECK_THROWS_AS(embed_hat(path_graph(3), 1), DomainError);
  CHECK_THROWS_AS(embed_connected(empty_graph(3), 3), PreconditionError);
  CHECK_THROWS_AS(embed_connected(path_graph(3), 2), DomainError);
  CHECK_THROWS_AS(embed_general(Graph(1), 3), PreconditionError);
  CHECK_THROWS_AS(embed_by_method(path_graph(3), 3, "nosuch"), ArgumentError);
  CHECK_THROWS_AS(embed_by_method(path_graph(3), 4, "nosuch"), ArgumentError);
  CHECK_THROWS_AS(embed_by_method(fam("petersen"), 4, "2sc_three"), DomainError);
}
