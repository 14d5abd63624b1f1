#pragma once

#include <string>

#include <json.hpp>

#include "asc/analysis.hpp"
#include "asc/constructions.hpp"
#include "asc/distance.hpp"
#include "asc/graph.hpp"
#include "asc/solver.hpp"

namespace asc {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Stores g under "<key>_graph6", or "<key>_edges" (edge-list text) when the
/// order is beyond graph6 support.
void put_graph(Json& j, const std::string& key, const Graph& g);
Graph get_graph(const Json& j, const std::string& key);

Json info_report(const Graph& g);
Json check_report(const Graph& g, std::uint32_t r);
Json witness_json(const ConditionWitness& w);
Json classify_report(const Graph& g);
Json embedding_report(const Embedding& e);
Json certificate_report(const IndexCertificate& c, std::uint32_t max_k,
                        const SearchOptions& options = {});
Json smallest_report(const SmallestOrderResult& s, std::uint32_t r, std::uint32_t max_n);

Embedding embedding_from_json(const Json& j);

struct VerifyOutcome {
  bool valid = false;
  std::string kind;
  std::string detail;
};

/// Recomputes the facts of any report from its own content.
VerifyOutcome verify_report(const Json& j);

}  // namespace asc
