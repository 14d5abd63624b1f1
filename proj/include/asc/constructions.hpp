#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asc/graph.hpp"

namespace asc {

struct AddedVertex {
  std::string role;
  Vertex vertex;

  friend bool operator==(const AddedVertex&, const AddedVertex&) = default;
};

/// A host graph containing the guest as an induced subgraph.
struct Embedding {
  Graph guest;
  Graph host;
  std::vector<Vertex> map;  // guest vertex -> host vertex
  std::vector<AddedVertex> added;
  std::string method;
  std::uint32_t r = 0;

  std::size_t added_count() const noexcept { return added.size(); }
};

/// Checks order arithmetic, the induced embedding and that the host is r-ASC.
/// Returns an empty string when valid, otherwise the first failed invariant.
std::string embedding_problem(const Embedding& e);

/// Throws InternalError when embedding_problem is non-empty.
void verify_embedding(const Embedding& e);

/// Adds w, x1..x{r-1}, y1..y{r-1}, w'. Any nonempty guest, r >= 2.
Embedding embed_hat(const Graph& g, std::uint32_t r);

/// 2r-1 added vertices; g connected of order >= 2, r >= 3.
Embedding embed_connected(const Graph& g, std::uint32_t r);

/// 2r-1 added vertices for any guest of order >= 2, r >= 3.
Embedding embed_general(const Graph& g, std::uint32_t r);

/// 3-ASC host for K_n: 6 added for n = 1, 5 otherwise.
Embedding embed_complete(std::size_t n);

/// 4 added vertices; g connected with diameter 2.
Embedding embed_diam2_four(const Graph& g);

/// 3 added vertices; the guest must pass check_new_added.
Embedding embed_2sc_three(const Graph& g);

/// 3 added vertices; the guest must pass check_isolated_vertex.
Embedding embed_triple_isolated(const Graph& g);

/// 3 added vertices; the guest must pass check_p3. Tries every induced P_3
/// witness and throws PreconditionError when none gives a 3-ASC host.
Embedding embed_triple_p3(const Graph& g);

/// 3-ASC host for P_n with the optimal number of added vertices.
Embedding embed_path(std::size_t n);

/// 3-ASC host for C_n with the optimal number of added vertices.
Embedding embed_cycle(std::size_t n);

/// 2 added vertices for the caterpillar family member (n, k), n >= 10.
Embedding embed_tree_caterpillar(std::size_t n, std::size_t k);

/// Cheapest applicable construction (no search).
Embedding embed_auto(const Graph& g, std::uint32_t r);

/// Tags accepted by embed_by_method: hat, connected, general, diam2_four,
/// 2sc_three, triple_isolated, triple_p3, auto.
Embedding embed_by_method(const Graph& g, std::uint32_t r, const std::string& method);
std::vector<std::string> embedding_methods();

}  // namespace asc
