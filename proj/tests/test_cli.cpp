#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "asc/cli.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = asc::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("asc_test_" + std::to_string(::getpid()) + "_" + name);
}

// Set ASC_UPDATE_GOLDEN=1 to rewrite the expected files after a deliberate change.
void check_golden(const std::string& name, const std::vector<std::string>& args) {
  const auto r = run(args);
  REQUIRE(r.code == 0);
  const fs::path path = fs::path(ASC_GOLDEN_DIR) / (name + ".txt");
  if (std::getenv("ASC_UPDATE_GOLDEN")) {
    std::ofstream(path) << r.out;
    return;
  }
  REQUIRE_MESSAGE(fs::exists(path), "missing golden file " << path);
  CHECK(r.out == slurp(path));
}

Json json_of(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = run(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

std::string verify_text(const std::string& report) {
  const auto path = temp_file("report.json");
  std::ofstream(path) << report;
  const auto r = run({"verify", path.string()});
  fs::remove(path);
  return r.out;
}

}  // namespace

TEST_CASE("golden outputs") {
  check_golden("info_petersen", {"info", "--family", "petersen"});
  check_golden("info_petersen_json", {"info", "--family", "petersen", "--json"});
  check_golden("info_disconnected", {"info", "--graph6", "B?"});
  check_golden("check_c_star6", {"check", "--family", "gadget_c_star:6"});
  check_golden("check_c_star6_json", {"check", "--family", "gadget_c_star:6", "--json"});
  check_golden("check_c6", {"check", "--family", "cycle:6"});
  check_golden("classify_petersen", {"classify", "--family", "petersen"});
  check_golden("classify_petersen_json", {"classify", "--family", "petersen", "--json"});
  check_golden("classify_c4", {"classify", "--family", "cycle:4"});
  check_golden("embed_p9", {"embed", "--family", "path:9"});
  check_golden("embed_p9_json", {"embed", "--family", "path:9", "--json"});
  check_golden("embed_petersen", {"embed", "--family", "petersen", "--method", "2sc_three"});
  check_golden("gen_c5", {"gen", "--family", "cycle:5"});
  check_golden("gen_c5_edges", {"gen", "--family", "cycle:5", "--format", "edges"});
  check_golden("gen_c5_json", {"gen", "--family", "cycle:5", "--json"});
}

TEST_CASE("documented command lines") {
  const auto check = run({"check", "--family", "gadget_c_star:6"});
  CHECK(check.code == 0);
  CHECK(check.out.rfind("3-ASC (r=3), non-central: 2 vertices\n", 0) == 0);

  const auto index = json_of({"index", "--family", "path:9", "--r", "3", "--max-k", "2"});
  CHECK(index["status"] == "exact");
  CHECK(index["k"] == 2);
  CHECK(index["exhausted_k"] == 1);

  const auto classify = run({"classify", "--family", "petersen"});
  CHECK(classify.code == 0);
  CHECK(classify.out.find("verdict: exactly_3") != std::string::npos);
  CHECK(classify.out.find("applied: new_added") != std::string::npos);
}

TEST_CASE("plain and JSON outputs carry the same facts") {
  for (const auto* fam : {"petersen", "path:6", "gadget_c_star:6", "cycle:7", "caterpillar:10,4"}) {
    const std::vector<std::string> src{"--family", fam};
    auto args = [&](const char* cmd) {
      std::vector<std::string> a{cmd};
      a.insert(a.end(), src.begin(), src.end());
      return a;
    };
    const auto info = json_of(args("info"));
    const auto info_plain = run(args("info")).out;
    CHECK(info_plain.find("order: " + std::to_string(info["order"].get<int>()) + "\n") != std::string::npos);
    CHECK(info_plain.find("radius: " + std::to_string(info["profile"]["radius"].get<int>()) + "\n") !=
          std::string::npos);
    CHECK(info_plain.find("diameter: " + std::to_string(info["profile"]["diameter"].get<int>()) + "\n") !=
          std::string::npos);

    const auto chk = json_of(args("check"));
    const auto chk_plain = run(args("check")).out;
    CHECK((chk_plain.rfind("3-ASC", 0) == 0) == chk["is_r_asc"].get<bool>());
    CHECK(chk_plain.find("non-central: " + std::to_string(chk["non_central"].size()) + " vertices") !=
          std::string::npos);

    const auto emb = json_of(args("embed"));
    const auto emb_plain = run(args("embed")).out;
    CHECK(emb_plain.find("host graph6: " + emb["host_graph6"].get<std::string>() + "\n") !=
          std::string::npos);
    CHECK(emb_plain.find("added: " + std::to_string(emb["added"].size()) + "\n") != std::string::npos);
    CHECK(emb_plain.find("method: " + emb["method"].get<std::string>() + "\n") != std::string::npos);
  }
  const auto cls = json_of({"classify", "--family", "cocktail_party:3"});
  const auto cls_plain = run({"classify", "--family", "cocktail_party:3"}).out;
  CHECK(cls_plain.find("verdict: " + cls["verdict"].get<std::string>() + "\n") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"info", "--graph6", "A_x"}).code == asc::cli::kParse);
  CHECK(run({"info", "--family", "nosuch:3"}).code == asc::cli::kParse);
  CHECK(run({"info", "--edges", "-"}, "3 5\n0 1\n").code == asc::cli::kParse);
  CHECK(run({"verify", "-"}, "{not json").code == asc::cli::kParse);

  CHECK(run({"info", "--family", "cycle:5", "--graph6", "A_"}).code == asc::cli::kFailure);
  CHECK(run({"info"}).code == asc::cli::kFailure);
  CHECK(run({"info", "--family", "cycle:2"}).code == asc::cli::kFailure);
  CHECK(run({"classify", "--family", "cycle:6"}).code == asc::cli::kFailure);
  CHECK(run({"check", "--graph6", "B?"}).code == asc::cli::kFailure);
  CHECK(run({"embed", "--family", "cycle:4", "--method", "nosuch"}).code == asc::cli::kFailure);
  CHECK(run({"index", "--family", "path:3", "--r", "1"}).code == asc::cli::kFailure);
  CHECK(run({"nosuch"}).code == asc::cli::kFailure);

  const auto abort = run({"index", "--family", "k1_join_matchings:3", "--max-k", "4", "--budget", "40000"});
  CHECK(abort.code == asc::cli::kAborted);
  CHECK(abort.out.find("status: aborted") != std::string::npos);

  const auto err = run({"classify", "--family", "cycle:6"}).err;
  CHECK(err.find("diameter 2") != std::string::npos);
  const auto parse = run({"info", "--family", "nosuch"}).err;
  CHECK(parse.find("path:") != std::string::npos);  // cites the grammar
}

TEST_CASE("help lists the family grammar") {
  const auto r = run({"gen", "--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("caterpillar") != std::string::npos);
}

TEST_CASE("stdin input and --output") {
  const auto r = run({"info", "--graph6", "-"}, "Dhc\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("radius: 2") != std::string::npos);

  const auto e = run({"check", "--edges", "-"}, "4 3\n0 1\n1 2\n2 3\n");
  CHECK(e.code == 0);

  const auto path = temp_file("out.json");
  const auto o = run({"embed", "--family", "cycle:9", "--json", "--output", path.string()});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  CHECK(Json::parse(slurp(path))["kind"] == "embedding");
  fs::remove(path);
}

TEST_CASE("every JSON report verifies") {
  const std::vector<std::vector<std::string>> commands{
      {"info", "--family", "petersen"},
      {"info", "--graph6", "B?"},
      {"check", "--family", "gadget_c_star:6"},
      {"check", "--family", "cycle:6", "--r", "2"},
      {"classify", "--family", "petersen"},
      {"classify", "--family", "k1_join_matchings:3"},
      {"embed", "--family", "path:9"},
      {"embed", "--family", "cycle:4", "--method", "hat", "--r", "4"},
      {"embed", "--family", "star:3", "--method", "triple_isolated"},
      {"index", "--family", "cycle:4"},
      {"index", "--family", "path:9", "--max-k", "2"},
      {"index", "--family", "path:3", "--max-k", "2"},
      {"smallest", "--r", "2", "--max-n", "5", "--min-n", "1"},
      {"gen", "--family", "caterpillar:12,6"},
      {"bench", "--n", "300"},
  };
  for (auto args : commands) {
    CAPTURE(args[0]);
    args.push_back("--json");
    const auto r = run(args);
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["schema"] == 1);
    CHECK(verify_text(r.out).rfind("valid", 0) == 0);
  }
}

TEST_CASE("verify rejects tampered reports") {
  auto emb = json_of({"embed", "--family", "path:9"});
  emb["host_graph6"] = "J??????????";
  CHECK(verify_text(emb.dump()).rfind("invalid", 0) == 0);

  auto cert = json_of({"index", "--family", "cycle:4"});
  cert["k"] = 3;
  CHECK(verify_text(cert.dump()).rfind("invalid", 0) == 0);

  // Claiming a lower bound that the search refutes.
  auto lb = json_of({"index", "--family", "cycle:4"});
  lb["status"] = "lower_bound";
  lb["k"] = 5;
  lb["exhausted_k"] = 4;
  lb.erase("witness_graph6");
  CHECK(verify_text(lb.dump()).rfind("invalid", 0) == 0);

  auto chk = json_of({"check", "--family", "cycle:6"});
  chk["is_asc"] = true;
  CHECK(verify_text(chk.dump()).rfind("invalid", 0) == 0);

  auto cls = json_of({"classify", "--family", "cycle:4"});
  cls["verdict"] = "exactly_3";
  CHECK(verify_text(cls.dump()).rfind("invalid", 0) == 0);

  const auto path = temp_file("tampered.json");
  std::ofstream(path) << chk.dump();
  CHECK(run({"verify", path.string()}).code == asc::cli::kFailure);
  fs::remove(path);
}

TEST_CASE("index output does not depend on the thread count") {
  auto strip = [](Json j) {
    j.erase("elapsed_ms");
    j.erase("records");
    j["options"].erase("threads");
    return j;
  };
  const auto a = json_of({"index", "--family", "cycle:5", "--threads", "1"});
  const auto b = json_of({"index", "--family", "cycle:5", "--threads", "2"});
  CHECK(strip(a) == strip(b));
}
