#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "qbern/errors.hpp"
#include "qbern/suite.hpp"

using namespace qbern;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string source_dir() {
  const char* dir = std::getenv("QBERN_SOURCE_DIR");
  return dir ? dir : ".";
}

}  // namespace

TEST_CASE("beta tables") {
  Outcome r = run({"beta", "--kind", "classical", "--max-n", "3", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,kind,value,padic,real\n0,classical,1,,\n1,classical,-1/2,,\n2,classical,1/6,,\n3,classical,0,,\n");

  r = run({"beta", "--kind", "carlitz", "--q", "2", "--max-n", "2"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][1]["value"] == "-1/3");
  CHECK(j["rows"][2]["value"] == "2/21");

  r = run({"beta", "--kind", "modified", "--q", "6", "--max-n", "1"});
  REQUIRE(r.code == 0);
  const Json m = Json::parse(r.out);
  CHECK(m["rows"][1]["value"] == "-1/5 + 1/25·L");
  CHECK(m["rows"][1]["padic"]["valuation"] == "0");
  CHECK(m["rows"][1]["padic"]["digits"].size() == 8);
}

TEST_CASE("volkenborn profiles") {
  Outcome r = run({"volkenborn", "--function", "character(0)", "--level", "3"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["levels"][1]["delta_valuation"] == "+inf");
  CHECK(j["levels"][2]["delta_valuation"] == "+inf");

  r = run({"volkenborn", "--function", "bracket^1", "--p", "3", "--q", "4", "--level", "5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("bracket^1,5,") != std::string::npos);

  CHECK(run({"volkenborn", "--function", "bracket^1", "--level", "30"}).code == 3);
  CHECK(run({"volkenborn", "--function", "cosine"}).code == 2);
}

TEST_CASE("amn grid") {
  Outcome r = run({"amn", "--p", "3", "--q", "4", "--max-m", "1", "--max-n", "2"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  REQUIRE(j["rows"].size() == 4);
  CHECK(j["rows"][0]["m"] == "0");
  CHECK(j["rows"][0]["n"] == "1");
  for (const Json& row : j["rows"]) CHECK(row["valuation_bound"] == "true");
  CHECK(run({"amn", "--q", "1/0"}).code == 2);
  CHECK(run({"amn", "--q", "2"}).code == 2);
  CHECK(run({"amn", "--p", "4"}).code == 2);
}

TEST_CASE("argument errors map to exit code 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(run({"verify", "--tol", "zero"}).code == 2);
  CHECK(run({"verify", "--real-q", "3/2"}).code == 2);
  CHECK(run({"verify", "--config", "/nonexistent.json"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("suite filter") {
  Outcome r = run({"verify", "--p", "3", "--q", "4", "--suite", "convolution-identity"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["reports"].size() == 2 * 4 * 3);
  for (const Json& row : j["reports"]) CHECK(row["suite"] == "convolution-identity");
  CHECK(j["config"]["suites"] == Json::array({"convolution-identity"}));
  CHECK(j["errata"].size() >= 9);
}

TEST_CASE("config file with flag override") {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / "qbern_cli_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"p": 3, "q": "4", "max_m": 1, "max_n": 1, "suites": ["valuation"]})";
  }
  Outcome r = run({"verify", "--config", path.string(), "--max-n", "2"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["config"]["p"] == "3");
  CHECK(j["config"]["max_n"] == "2");
  CHECK(j["reports"].size() == 4);
  {
    std::ofstream f(path);
    f << R"({"p": 3, "colour": "blue"})";
  }
  CHECK(run({"verify", "--config", path.string()}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("output file and csv") {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / "qbern_cli_test_out.csv";
  Outcome r = run({"verify", "--suite", "limits", "--format", "csv", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  CHECK(header == "section,suite,identity,parameters,lhs,rhs,residual,agreement,required,verdict,note");
  std::filesystem::remove(path);
}

TEST_CASE("acceptance config verifies, deterministically across worker counts") {
  const std::string config = source_dir() + "/configs/acceptance.json";
  Outcome a = run({"verify", "--config", config});
  Outcome b = run({"verify", "--config", config, "--jobs", "4"});
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  CHECK(j["summary"]["fail"] == "0");
  std::vector<std::string> ids;
  for (const Json& e : j["errata"]) ids.push_back(e["id"]);
  for (const char* id : {"carlitz-beta3-printed-value", "convolution-index-offset", "same-q-symmetry",
                         "series-constant", "generating-function-constant-term", "generating-function-exponent"}) {
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  }
}

TEST_CASE("run_suite validation") {
  RunConfig c;
  c.level = 20;
  c.max_level = 20;
  CHECK_THROWS_AS(run_suite(c), ResourceError);
  c = RunConfig{};
  c.q = "2";
  CHECK_THROWS_AS(run_suite(c), ConfigError);
}
