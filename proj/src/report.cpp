#include "asc/report.hpp"

#include "asc/errors.hpp"
#include "asc/families.hpp"
#include "asc/graph_io.hpp"

namespace asc {

namespace {

Json header(const std::string& kind) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

Json profile_json(const EccProfile& p) {
  Json j;
  j["radius"] = p.radius;
  j["diameter"] = p.diameter;
  j["center"] = p.center;
  j["periphery"] = p.periphery;
  j["eccentricities"] = p.ecc;
  return j;
}

VerifyOutcome outcome(bool valid, std::string kind, std::string detail = {}) {
  return {valid, std::move(kind), std::move(detail)};
}

// Compares the recomputed report with the given one, ignoring timing fields.
VerifyOutcome compare(const Json& given, Json fresh, const std::string& kind) {
  Json a = given;
  for (const char* key : {"elapsed_ms", "records"}) {
    a.erase(key);
    fresh.erase(key);
  }
  if (a == fresh) return outcome(true, kind);
  for (auto it = fresh.begin(); it != fresh.end(); ++it)
    if (!a.contains(it.key()) || a[it.key()] != it.value())
      return outcome(false, kind, "field \"" + it.key() + "\" does not match recomputation");
  return outcome(false, kind, "report has fields the recomputation does not produce");
}

}  // namespace

void put_graph(Json& j, const std::string& key, const Graph& g) {
  if (g.order() <= kMaxGraph6Order)
    j[key + "_graph6"] = write_graph6(g);
  else
    j[key + "_edges"] = write_edge_list(g);
}

Graph get_graph(const Json& j, const std::string& key) {
  if (j.contains(key + "_graph6")) return parse_graph6(j.at(key + "_graph6").get<std::string>());
  if (j.contains(key + "_edges")) return parse_edge_list(j.at(key + "_edges").get<std::string>());
  throw ParseError("report has no \"" + key + "_graph6\" or \"" + key + "_edges\" field", 0);
}

Json info_report(const Graph& g) {
  Json j = header("info");
  put_graph(j, "graph", g);
  j["order"] = g.order();
  j["size"] = g.size();
  j["connected"] = g.connected();
  if (g.connected()) j["profile"] = profile_json(ecc_profile(g));
  return j;
}

Json check_report(const Graph& g, std::uint32_t r) {
  const auto v = asc_verdict(g);
  Json j = header("check");
  put_graph(j, "graph", g);
  j["r"] = r;
  j["is_asc"] = v.is_asc;
  j["is_r_asc"] = v.is_r_asc(r);
  j["radius"] = v.radius;
  j["non_central"] = v.non_central;
  j["ecc_of_non_central"] = v.ecc_of_non_central;
  return j;
}

Json witness_json(const ConditionWitness& w) {
  Json j;
  j["theorem"] = std::string(theorem_name(w.tag));
  j["holds"] = w.holds;
  j["witness"] = w.vertices;
  return j;
}

Json classify_report(const Graph& g) {
  const auto c = classify_diam2(g);
  Json j = header("classify");
  put_graph(j, "graph", g);
  j["verdict"] = std::string(verdict_name(c.verdict));
  Json applied = Json::array();
  for (auto t : c.applied) applied.push_back(std::string(theorem_name(t)));
  j["applied"] = applied;
  Json checks = Json::array();
  for (const auto& w : c.justification) checks.push_back(witness_json(w));
  j["checks"] = checks;
  return j;
}

Json embedding_report(const Embedding& e) {
  Json j = header("embedding");
  j["method"] = e.method;
  j["r"] = e.r;
  Json added = Json::array();
  for (const auto& a : e.added) added.push_back({{"role", a.role}, {"vertex", a.vertex}});
  j["added"] = added;
  j["map"] = e.map;
  put_graph(j, "host", e.host);
  put_graph(j, "guest", e.guest);
  return j;
}

Embedding embedding_from_json(const Json& j) {
  Embedding e;
  e.method = j.at("method").get<std::string>();
  e.r = j.at("r").get<std::uint32_t>();
  for (const auto& a : j.at("added"))
    e.added.push_back({a.at("role").get<std::string>(), a.at("vertex").get<Vertex>()});
  e.map = j.at("map").get<std::vector<Vertex>>();
  e.host = get_graph(j, "host");
  e.guest = get_graph(j, "guest");
  return e;
}

Json certificate_report(const IndexCertificate& c, std::uint32_t max_k,
                        const SearchOptions& options) {
  Json j = header("certificate");
  j["guest_id"] = c.guest_id;
  put_graph(j, "guest", c.guest);
  j["r"] = c.r;
  j["max_k"] = max_k;
  j["status"] = std::string(index_status_name(c.status));
  j["k"] = c.k;
  if (c.witness) {
    put_graph(j, "witness", c.witness->host);
    j["witness_map"] = c.witness->map;
    j["witness_method"] = c.witness->method;
  }
  j["exhausted_k"] = c.exhausted_k;
  j["options"] = {{"max_candidates", options.budget.max_candidates},
                  {"max_seconds", options.budget.max_seconds},
                  {"symmetry", options.prune.symmetry},
                  {"connectivity", options.prune.connectivity},
                  {"ecc_bound", options.prune.ecc_bound},
                  {"order_bound", options.prune.order_bound}};
  // Which k values were ruled out by exhaustive search rather than the order bound.
  Json searched = Json::array();
  for (const auto& rec : c.records)
    if (rec.reason == "search" && rec.result == SearchStatus::exhausted) searched.push_back(rec.k);
  j["exhausted_by_search"] = searched;
  j["candidates_examined"] = c.candidates_examined;
  j["elapsed_ms"] = c.elapsed_ms;
  Json records = Json::array();
  for (const auto& rec : c.records)
    records.push_back({{"k", rec.k},
                       {"reason", rec.reason},
                       {"result", std::string(search_status_name(rec.result))},
                       {"candidates", rec.candidates},
                       {"elapsed_ms", rec.elapsed_ms}});
  j["records"] = records;
  return j;
}

Json smallest_report(const SmallestOrderResult& s, std::uint32_t r, std::uint32_t max_n) {
  Json j = header("smallest");
  j["r"] = r;
  j["max_n"] = max_n;
  j["first_order"] = s.first_order;
  j["found"] = s.found;
  j["order"] = s.order;
  if (s.found) put_graph(j, "witness", s.witness);
  j["tested"] = s.tested;
  return j;
}

VerifyOutcome verify_report(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) return outcome(false, "?", "missing \"kind\"");
  const auto kind = j.at("kind").get<std::string>();
  if (j.value("schema", 0) != kSchemaVersion)
    return outcome(false, kind, "unsupported schema version");
  try {
    if (kind == "info") return compare(j, info_report(get_graph(j, "graph")), kind);
    if (kind == "check")
      return compare(j, check_report(get_graph(j, "graph"), j.at("r").get<std::uint32_t>()), kind);
    if (kind == "classify") return compare(j, classify_report(get_graph(j, "graph")), kind);
    if (kind == "embedding") {
      const auto e = embedding_from_json(j);
      const auto why = embedding_problem(e);
      return outcome(why.empty(), kind, why);
    }
    if (kind == "certificate") {
      const auto guest = get_graph(j, "guest");
      const auto r = j.at("r").get<std::uint32_t>();
      const auto status = j.at("status").get<std::string>();
      if (status == "exact") {
        Embedding e;
        e.guest = guest;
        e.host = get_graph(j, "witness");
        e.map = j.at("witness_map").get<std::vector<Vertex>>();
        e.r = r;
        e.method = j.value("witness_method", "exhaustive");
        std::vector<bool> used(e.host.order(), false);
        for (Vertex v : e.map)
          if (v < used.size()) used[v] = true;
        for (Vertex v = 0; v < e.host.order(); ++v)
          if (!used[v]) e.added.push_back({"n", v});
        if (e.added.size() != j.at("k").get<std::size_t>())
          return outcome(false, kind, "witness does not add k vertices");
        if (auto why = embedding_problem(e); !why.empty()) return outcome(false, kind, why);
      }
      // Re-run the exhaustive part of the claim with the recorded options.
      SearchOptions opts;
      if (j.contains("options")) {
        const auto& o = j.at("options");
        opts.budget.max_candidates = o.value("max_candidates", opts.budget.max_candidates);
        opts.budget.max_seconds = o.value("max_seconds", opts.budget.max_seconds);
        opts.prune.symmetry = o.value("symmetry", true);
        opts.prune.connectivity = o.value("connectivity", true);
        opts.prune.ecc_bound = o.value("ecc_bound", true);
        opts.prune.order_bound = o.value("order_bound", true);
      }
      const auto exhausted = j.at("exhausted_k").get<int>();
      if (status == "exact" && exhausted != static_cast<int>(j.at("k").get<std::uint32_t>()) - 1)
        return outcome(false, kind, "exact(k) requires exhausted_k = k-1");
      if (status == "lower_bound" && exhausted + 1 != static_cast<int>(j.at("k").get<std::uint32_t>()))
        return outcome(false, kind, "lower_bound(k) requires exhausted_k = k-1");
      if (exhausted >= 0) {
        const auto redo = exact_index(guest, r, static_cast<std::uint32_t>(exhausted), opts);
        if (redo.status != IndexStatus::lower_bound || redo.exhausted_k != exhausted)
          return outcome(false, kind,
                         "re-running the search up to k = " + std::to_string(exhausted) + " gave " +
                             std::string(index_status_name(redo.status)) + "(" +
                             std::to_string(redo.k) + ")");
      }
      if (j.at("guest_id").get<std::string>() != content_hash(guest))
        return outcome(false, kind, "guest_id does not match the guest graph");
      return outcome(true, kind);
    }
    if (kind == "smallest") {
      const auto r = j.at("r").get<std::uint32_t>();
      const auto max_n = j.at("max_n").get<std::uint32_t>();
      const auto first = j.at("first_order").get<std::uint32_t>();
      return compare(j, smallest_report(smallest_asc_order(r, max_n, first), r, max_n), kind);
    }
    if (kind == "gen") {
      const auto g = get_graph(j, "graph");
      if (j.contains("family")) {
        const auto built = build_family(parse_family(j.at("family").get<std::string>()));
        if (!(built == g)) return outcome(false, kind, "graph differs from the family spec");
      }
      return outcome(true, kind);
    }
    if (kind == "bench") {
      for (const auto& item : j.at("ecc"))
        if (item.contains("host_radius")) {
          const auto n = item.at("path_order").get<std::size_t>();
          const auto host = embed_path(n).host;
          const auto p = ecc_profile(host);
          if (p.radius != item.at("host_radius").get<std::uint32_t>() ||
              p.diameter != item.at("host_diameter").get<std::uint32_t>())
            return outcome(false, kind, "host radius/diameter differ");
        }
      return outcome(true, kind);
    }
  } catch (const nlohmann::json::exception& ex) {
    return outcome(false, kind, std::string("malformed report: ") + ex.what());
  } catch (const Error& ex) {
    return outcome(false, kind, ex.what());
  }
  return outcome(false, kind, "unknown report kind");
}

}  // namespace asc
