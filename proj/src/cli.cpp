#include "asc/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "asc/analysis.hpp"
#include "asc/constructions.hpp"
#include "asc/distance.hpp"
#include "asc/errors.hpp"
#include "asc/families.hpp"
#include "asc/graph_io.hpp"
#include "asc/report.hpp"
#include "asc/solver.hpp"

namespace asc::cli {

namespace {

struct Options {
  std::string graph6;
  std::string edges;
  std::string family;
  std::uint32_t r = 3;
  int max_k = -1;
  std::string method = "auto";
  std::uint64_t budget = Budget{}.max_candidates;
  double time_limit = Budget{}.max_seconds;
  std::string output;
  bool json = false;
  int threads = 0;
  bool no_symmetry = false;
  bool no_connectivity = false;
  bool no_ecc_bound = false;
  bool no_order_bound = false;
  std::string format = "graph6";
  std::string input;
  std::uint32_t max_n = 7;
  std::uint32_t min_n = 0;
  std::size_t bench_n = 10000;
};

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream f(path);
  if (!f) throw ArgumentError("cannot open \"" + path + "\"");
  return read_all(f);
}

Graph load_graph(const Options& o, std::istream& in) {
  const int sources = !o.graph6.empty() + !o.edges.empty() + !o.family.empty();
  if (sources != 1)
    throw ArgumentError("exactly one of --graph6, --edges, --family is required");
  if (!o.family.empty()) return build_family(parse_family(o.family));
  if (!o.edges.empty()) return parse_edge_list(read_source(o.edges, in));
  if (o.graph6 == "-") {
    std::string line;
    while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
    }
    return parse_graph6(line);
  }
  return parse_graph6(o.graph6);
}

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  s.budget.max_candidates = o.budget;
  s.budget.max_seconds = o.time_limit;
  s.prune.symmetry = !o.no_symmetry;
  s.prune.connectivity = !o.no_connectivity;
  s.prune.ecc_bound = !o.no_ecc_bound;
  s.prune.order_bound = !o.no_order_bound;
  s.threads = o.threads;
  return s;
}

std::string join_list(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string tuple_text(const std::vector<Vertex>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

std::string graph_text(const Graph& g) {
  return g.order() <= kMaxGraph6Order ? write_graph6(g) : "(order " + std::to_string(g.order()) + ", see edge list)";
}

void plain_info(std::ostream& out, const Graph& g) {
  out << "order: " << g.order() << "\n";
  out << "size: " << g.size() << "\n";
  out << "connected: " << (g.connected() ? "yes" : "no") << "\n";
  if (!g.connected()) {
    out << "radius: infinite\ndiameter: infinite\n";
    return;
  }
  const auto p = ecc_profile(g);
  out << "radius: " << p.radius << "\n";
  out << "diameter: " << p.diameter << "\n";
  out << "center: " << join_list(p.center) << "\n";
  out << "periphery: " << join_list(p.periphery) << "\n";
  out << "eccentricities: " << join_list(p.ecc) << "\n";
}

void plain_check(std::ostream& out, const Graph& g, std::uint32_t r) {
  const auto v = asc_verdict(g);
  const auto count = std::to_string(v.non_central.size()) + " vertices";
  if (v.is_r_asc(r))
    out << r << "-ASC (r=" << r << "), non-central: " << count << "\n";
  else if (v.is_asc)
    out << v.radius << "-ASC, not " << r << "-ASC (r=" << r << "), non-central: " << count << "\n";
  else
    out << "not ASC (radius " << v.radius << "), non-central: " << count << "\n";
  if (!v.non_central.empty())
    out << "non-central vertices: " << join_list(v.non_central) << " (ecc "
        << join_list(v.ecc_of_non_central) << ")\n";
}

void plain_classify(std::ostream& out, const Graph& g) {
  const auto c = classify_diam2(g);
  out << "verdict: " << verdict_name(c.verdict) << "\n";
  out << "applied:";
  if (c.applied.empty()) out << " none";
  for (auto t : c.applied) out << " " << theorem_name(t);
  out << "\n";
  for (const auto& w : c.justification) {
    out << theorem_name(w.tag) << ": " << (w.holds ? "holds" : "fails");
    if (!w.vertices.empty()) out << " " << tuple_text(w.vertices);
    out << "\n";
  }
}

void plain_embedding(std::ostream& out, const Embedding& e) {
  out << "method: " << e.method << "\n";
  out << "r: " << e.r << "\n";
  out << "guest order: " << e.guest.order() << "\n";
  out << "added: " << e.added_count() << "\n";
  out << "host order: " << e.host.order() << "\n";
  out << "roles:";
  for (const auto& a : e.added) out << " " << a.role << "=" << a.vertex;
  out << "\n";
  out << "map: " << join_list(e.map) << "\n";
  if (e.host.order() <= kMaxGraph6Order)
    out << "host graph6: " << write_graph6(e.host) << "\n";
  else
    out << "host edge list:\n" << write_edge_list(e.host);
}

std::string status_text(const IndexCertificate& c) {
  return std::string(index_status_name(c.status)) + "(" + std::to_string(c.k) + ")";
}

void plain_certificate(std::ostream& out, const IndexCertificate& c) {
  out << "status: " << status_text(c) << "\n";
  out << "r: " << c.r << "\n";
  out << "guest: " << graph_text(c.guest) << " (id " << c.guest_id << ")\n";
  out << "exhausted_k: " << c.exhausted_k << "\n";
  out << "candidates examined: " << c.candidates_examined << "\n";
  for (const auto& rec : c.records) {
    out << "  k=" << rec.k << " " << rec.reason;
    if (rec.reason == "search")
      out << " " << search_status_name(rec.result) << ", " << rec.candidates << " candidates";
    out << "\n";
  }
  if (c.witness) {
    out << "witness host: " << graph_text(c.witness->host) << "\n";
    out << "witness map: " << join_list(c.witness->map) << "\n";
  }
}

void plain_smallest(std::ostream& out, const SmallestOrderResult& s, std::uint32_t r) {
  if (s.found)
    out << "smallest " << r << "-ASC order: " << s.order << "\nwitness: " << write_graph6(s.witness)
        << "\n";
  else
    out << "no " << r << "-ASC graph of order <= " << s.order - 1 << " (lower bound " << s.order
        << ")\n";
  out << "orders searched from " << s.first_order << ", graphs tested per order:";
  for (auto t : s.tested) out << " " << t;
  out << "\n";
}

double time_ms(const std::function<void()>& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

Json bench_report(std::size_t n, int threads) {
#ifdef _OPENMP
  const int saved = omp_get_max_threads();
  omp_set_num_threads(threads > 0 ? threads : 1);
#endif
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "bench";
  j["threads"] = threads > 0 ? threads : 1;
  const auto host = embed_path(n).host;
  Json ecc = Json::array();
  for (auto [kernel, name] : {std::pair{EccKernel::automatic, "automatic"},
                              std::pair{EccKernel::bit_parallel, "bit_parallel"},
                              std::pair{EccKernel::bfs, "bfs"}}) {
    EccProfile p;
    const double ms = time_ms([&] { p = ecc_profile(host, kernel); });
    ecc.push_back({{"path_order", n},
                   {"host_order", host.order()},
                   {"kernel", name},
                   {"host_radius", p.radius},
                   {"host_diameter", p.diameter},
                   {"ms", ms}});
  }
  j["ecc"] = ecc;
  SearchOptions opts;
  opts.threads = threads > 0 ? threads : 1;
  const auto res = exists_extension(path_graph(9), 3, 2, opts);
  const double per_s = res.elapsed_ms > 0 ? res.candidates / (res.elapsed_ms / 1000.0) : 0.0;
  j["solver"] = {{"instance", "path:9"},
                 {"r", 3},
                 {"k", 2},
                 {"result", std::string(search_status_name(res.status))},
                 {"candidates", res.candidates},
                 {"evaluated", res.evaluated},
                 {"ms", res.elapsed_ms},
                 {"candidates_per_s", per_s}};
#ifdef _OPENMP
  omp_set_num_threads(saved);
#endif
  return j;
}

void plain_bench(std::ostream& out, const Json& j) {
  const auto& first = j["ecc"][0];
  out << "ecc_profile on the path:" << first["path_order"] << " host (order " << first["host_order"]
      << ", radius " << first["host_radius"] << ", diameter " << first["host_diameter"] << "), "
      << j["threads"] << " thread(s)\n";
  for (const auto& e : j["ecc"])
    out << "  " << e["kernel"].get<std::string>() << ": " << e["ms"].get<double>() << " ms\n";
  const auto& s = j["solver"];
  out << "solver path:9 r=3 k=2: " << s["result"].get<std::string>() << ", " << s["candidates"]
      << " candidates in " << s["ms"].get<double>() << " ms ("
      << s["candidates_per_s"].get<double>() << " candidates/s)\n";
}

class Emitter {
 public:
  Emitter(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  std::ostream& stream() { return o_.output.empty() ? out_ : buffer_; }

  void finish() {
    if (o_.output.empty()) return;
    std::ofstream f(o_.output);
    if (!f) throw ArgumentError("cannot write \"" + o_.output + "\"");
    f << buffer_.str();
  }

 private:
  const Options& o_;
  std::ostream& out_;
  std::ostringstream buffer_;
};

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("--graph6", o.graph6, "graph6 string, or - to read one line from stdin");
  sub->add_option("--edges", o.edges, "edge-list file (\"n m\" header), or - for stdin");
  sub->add_option("--family", o.family, "family spec name:params, see the list below");
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_flag("--json", o.json, "emit a JSON report");
  sub->add_option("--output", o.output, "write the report to this file");
}

void add_search(CLI::App* sub, Options& o) {
  sub->add_option("--budget", o.budget, "candidate budget per k")->capture_default_str();
  sub->add_option("--time-limit", o.time_limit, "seconds per k")->capture_default_str();
  sub->add_option("--threads", o.threads, "solver threads (0 = OpenMP default)");
  sub->add_flag("--no-symmetry", o.no_symmetry, "disable new-vertex symmetry pruning");
  sub->add_flag("--no-connectivity", o.no_connectivity, "disable connectivity pruning");
  sub->add_flag("--no-ecc-bound", o.no_ecc_bound, "disable early eccentricity exits");
  sub->add_flag("--no-order-bound", o.no_order_bound, "search k below the order bound too");
}

int execute(const std::string& cmd, const Options& o, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Emitter emit(o, out);
  auto& os = emit.stream();
  int code = kOk;

  if (cmd == "info" || cmd == "check" || cmd == "classify" || cmd == "embed" || cmd == "index" ||
      cmd == "gen") {
    const Graph g = load_graph(o, in);
    if (cmd == "info") {
      if (o.json)
        os << info_report(g).dump(2) << "\n";
      else
        plain_info(os, g);
    } else if (cmd == "check") {
      if (o.json)
        os << check_report(g, o.r).dump(2) << "\n";
      else
        plain_check(os, g, o.r);
    } else if (cmd == "classify") {
      if (o.json)
        os << classify_report(g).dump(2) << "\n";
      else
        plain_classify(os, g);
    } else if (cmd == "embed") {
      const auto e = embed_by_method(g, o.r, o.method);
      if (o.json) {
        auto j = embedding_report(e);
        if (!o.output.empty() && e.host.order() > kMaxGraph6Order) {
          const auto path = o.output + ".host.edges";
          std::ofstream f(path);
          if (!f) throw ArgumentError("cannot write \"" + path + "\"");
          f << write_edge_list(e.host);
          j["host_edge_file"] = path;
        }
        os << j.dump(2) << "\n";
      } else {
        plain_embedding(os, e);
      }
    } else if (cmd == "index") {
      const auto max_k = o.max_k >= 0 ? static_cast<std::uint32_t>(o.max_k) : 2 * o.r;
      const auto opts = search_options(o);
      const auto c = exact_index(g, o.r, max_k, opts);
      if (o.json)
        os << certificate_report(c, max_k, opts).dump(2) << "\n";
      else
        plain_certificate(os, c);
      if (c.status == IndexStatus::aborted) {
        err << "search aborted at k = " << c.k << " (budget)\n";
        code = kAborted;
      }
    } else {
      if (o.json) {
        Json j;
        j["schema"] = kSchemaVersion;
        j["kind"] = "gen";
        if (!o.family.empty()) j["family"] = format_family(parse_family(o.family));
        put_graph(j, "graph", g);
        os << j.dump(2) << "\n";
      } else if (o.format == "graph6") {
        os << write_graph6(g) << "\n";
      } else if (o.format == "edges") {
        os << write_edge_list(g);
      } else {
        throw ArgumentError("--format must be graph6 or edges");
      }
    }
  } else if (cmd == "smallest") {
    const auto s = smallest_asc_order(o.r, o.max_n, o.min_n);
    if (o.json)
      os << smallest_report(s, o.r, o.max_n).dump(2) << "\n";
    else
      plain_smallest(os, s, o.r);
  } else if (cmd == "verify") {
    const auto text = read_source(o.input, in);
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
      throw ParseError(std::string("invalid JSON: ") + ex.what(), ex.byte);
    }
    const auto v = verify_report(j);
    if (o.json) {
      Json r;
      r["schema"] = kSchemaVersion;
      r["kind"] = "verify";
      r["of"] = v.kind;
      r["verdict"] = v.valid ? "valid" : "invalid";
      if (!v.detail.empty()) r["detail"] = v.detail;
      os << r.dump(2) << "\n";
    } else {
      os << (v.valid ? "valid" : "invalid") << " (" << v.kind << ")";
      if (!v.detail.empty()) os << ": " << v.detail;
      os << "\n";
    }
    if (!v.valid) code = kFailure;
  } else if (cmd == "bench") {
    const auto j = bench_report(o.bench_n, o.threads);
    if (o.json)
      os << j.dump(2) << "\n";
    else
      plain_bench(os, j);
  }
  emit.finish();
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Almost self-centered graph toolkit: eccentricity checks, embeddings, exact indices"};
  app.footer("\n" + family_grammar());
  app.require_subcommand(1);

  auto* info = app.add_subcommand("info", "radius, diameter, center, periphery, eccentricities");
  add_input(info, o);
  add_common(info, o);

  auto* check = app.add_subcommand("check", "is the graph r-ASC?");
  add_input(check, o);
  add_common(check, o);
  check->add_option("--r", o.r, "target radius")->capture_default_str();

  auto* classify = app.add_subcommand("classify", "3-ASC index class of a diameter-2 graph");
  add_input(classify, o);
  add_common(classify, o);

  auto* embed = app.add_subcommand("embed", "build an r-ASC host containing the graph");
  add_input(embed, o);
  add_common(embed, o);
  embed->add_option("--r", o.r, "target radius")->capture_default_str();
  embed->add_option("--method", o.method, "construction")
      ->check(CLI::IsMember(embedding_methods()))
      ->capture_default_str();

  auto* index = app.add_subcommand("index", "exact r-ASC index by exhaustive search");
  add_input(index, o);
  add_common(index, o);
  add_search(index, o);
  index->add_option("--r", o.r, "target radius")->capture_default_str();
  index->add_option("--max-k", o.max_k, "largest number of added vertices to try (default 2r)");

  auto* smallest = app.add_subcommand("smallest", "smallest order of an r-ASC graph");
  add_common(smallest, o);
  smallest->add_option("--r", o.r, "target radius")->capture_default_str();
  smallest->add_option("--max-n", o.max_n, "largest order to enumerate (<= 9)")
      ->capture_default_str();
  smallest->add_option("--min-n", o.min_n, "first order to test (default: the order bound)");

  auto* gen = app.add_subcommand("gen", "print a graph in graph6 or edge-list form");
  add_input(gen, o);
  add_common(gen, o);
  gen->add_option("--format", o.format, "graph6 or edges")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "re-check a JSON report from its own content");
  add_common(verify, o);
  verify->add_option("input", o.input, "report file, or - for stdin")->required();

  auto* bench = app.add_subcommand("bench", "eccentricity and solver throughput");
  add_common(bench, o);
  bench->add_option("--n", o.bench_n, "path order for the host")->capture_default_str();
  bench->add_option("--threads", o.threads, "threads (default 1)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kFailure;
  }

#ifdef _OPENMP
  if (o.threads > 0) omp_set_num_threads(o.threads);
#endif
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return execute(cmd, o, in, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const DisconnectedError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kFailure;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kFailure;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kFailure;
  } catch (const ArgumentError& e) {
    err << "argument error: " << e.what() << "\n";
    return kFailure;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace asc::cli
