#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tpg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& f) {
  std::ifstream in(f, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const auto d = fs::temp_directory_path() / ("tpg_cli_" + name);
  fs::remove_all(d);
  return d;
}

}  // namespace

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"normals"}).code == 2);
  CHECK(invoke({"--format", "yaml", "catalog"}).code == 2);
  CHECK(invoke({"--jobs", "0", "catalog"}).code == 2);

  const auto r = invoke({"catalog", "--only", "G3", "--only", "G99"});
  CHECK(r.code == 2);
  CHECK(r.err.find("G99") != std::string::npos);
  CHECK(r.out.empty());

  CHECK(invoke({"normals", "G0"}).code == 2);
  CHECK(invoke({"obstruct", "S4"}).code == 2);
  CHECK(invoke({"dihedral", "table", "7A"}).code == 2);
  CHECK(invoke({"verify", "/nonexistent/x.json"}).code == 2);
}

TEST_CASE("catalog and normals") {
  const auto r = invoke({"--format", "json", "catalog", "--only", "G3"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "tpg-catalog/1");
  REQUIRE(j["groups"].size() == 1);
  CHECK(j["groups"][0]["order"] == 160);
  CHECK(j["groups"][0]["normal_subgroups_index_gt_12"] == 0);

  const auto n = invoke({"--format", "json", "normals", "G4"});
  REQUIRE(n.code == 0);
  const auto k = nlohmann::json::parse(n.out);
  REQUIRE(k["normals"].size() == 1);
  CHECK(k["normals"][0]["normal_order"] == 2);
  CHECK(k["normals"][0]["type"] == "S5");

  // The printed words of this row give a different subgroup.
  CHECK(invoke({"--verify", "normals", "G4"}).code == 1);
  CHECK(invoke({"--verify", "normals", "G3"}).code == 0);
}

TEST_CASE("obstruct then verify") {
  const auto dir = scratch("obstruct");
  const auto r = invoke({"--out", dir.string(), "obstruct", "S6"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("klein <(1,2),(3,4),(5,6)>") != std::string::npos);
  const auto cert = dir / "S6.cert.json";
  REQUIRE(fs::exists(cert));
  CHECK(invoke({"verify", cert.string()}).code == 0);

  auto j = nlohmann::ordered_json::parse(slurp(cert));
  j["subgroup"][0] = "(1,2,3)";
  const auto bad = dir / "bad.cert.json";
  std::ofstream(bad) << j.dump(2);
  const auto v = invoke({"verify", bad.string()});
  CHECK(v.code == 1);
  CHECK_FALSE(v.err.empty());

  std::ofstream(dir / "junk.json") << "{ not json";
  CHECK(invoke({"verify", (dir / "junk.json").string()}).code == 2);
}

TEST_CASE("dihedral and enumerate") {
  CHECK(invoke({"dihedral", "verify"}).code == 0);
  const auto t = invoke({"dihedral", "table", "2B"});
  CHECK(t.code == 0);
  CHECK(nlohmann::json::parse(t.out).is_object());

  const auto dir = scratch("enumerate");
  fs::create_directories(dir);
  std::ofstream(dir / "a3.pres") << "gens a b c;\nrel (ab)^2; rel (ac)^3; rel (bc)^3;\n";
  const auto e = invoke({"--format", "json", "enumerate", (dir / "a3.pres").string()});
  REQUIRE(e.code == 0);
  CHECK(nlohmann::json::parse(e.out)["index"] == 24);
  const auto s = invoke({"--format", "json", "enumerate", (dir / "a3.pres").string(), "--subgroup", "a", "--subgroup", "c"});
  CHECK(nlohmann::json::parse(s.out)["index"] == 4);

  std::ofstream(dir / "bad.pres") << "gens a b c; rel (ad)^2;";
  CHECK(invoke({"enumerate", (dir / "bad.pres").string()}).code == 2);
}

TEST_CASE("classify is deterministic") {
  const auto d1 = scratch("classify1"), d2 = scratch("classify2");
  REQUIRE(invoke({"--out", d1.string(), "classify"}).code == 0);
  REQUIRE(invoke({"--out", d2.string(), "--jobs", "2", "classify"}).code == 0);
  const auto j1 = slurp(d1 / "classification.json");
  CHECK(!j1.empty());
  CHECK(j1 == slurp(d2 / "classification.json"));
  CHECK(slurp(d1 / "tables.md") == slurp(d2 / "tables.md"));
  const auto j = nlohmann::json::parse(j1);
  CHECK(j["schema"] == "tpg-classification/1");
  CHECK(j["excluded"].size() == 10);
}
