#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {
  struct Result {
    int         status;
    std::string out;
    std::string err;
  };

  Result gis(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                status = gisemi::cli::run(args, out, err);
    return {status, out.str(), err.str()};
  }

  std::string const g1 = GISEMI_DATA_DIR "/g1.json";
}  // namespace

TEST_CASE("element commands") {
  CHECK(gis({"mul", "--graph", g1, "e f^-1", "f e^-1"}).out == "e e^-1\n");
  CHECK(gis({"reduce", "--graph", g1, "e^-1 e"}).out == "v2\n");
  CHECK(gis({"invert", "--builtin", "g1", "e f^-1"}).out == "f e^-1\n");
  CHECK(gis({"embed", "--graph", g1, "e f^-1"}).out == "[0 2][0 3]^-1\n");
  CHECK(gis({"embed", "--graph", g1, "e f^-1", "--p2"}).out == "[0 1 1 0][0 1 1 1 0]^-1\n");
  CHECK(gis({"poly", "reduce", "--arity", "2", "p0 p1 p1^-1 p0^-1"}).out == "[0 1][0 1]^-1\n");
  CHECK(gis({"poly", "reduce", "--arity", "omega", "p9^-1 p9"}).out == "[][]^-1\n");
  auto paths = gis({"paths", "--builtin", "rose:2", "--max-len", "1"});
  CHECK(paths.status == 0);
  CHECK(paths.out == "v\np0\np1\n");
}

TEST_CASE("input errors exit with status 2") {
  auto unknown = gis({"reduce", "--graph", g1, "e g"});
  CHECK(unknown.status == 2);
  CHECK(unknown.err.find("unknown identifier g") != std::string::npos);
  CHECK(unknown.err.find("line 1, column 3") != std::string::npos);

  CHECK(gis({"reduce", "e"}).status == 2);
  CHECK(gis({"reduce", "--graph", "/nonexistent.json", "e"}).status == 2);
  CHECK(gis({"poly", "reduce", "--arity", "2", "p2"}).status == 2);
  CHECK(gis({"poly", "reduce", "--arity", "two", "p0"}).status == 2);
  CHECK(gis({"verify", "nonsense", "--builtin", "g1"}).status == 2);
  CHECK(gis({"frobnicate"}).status == 2);

  auto dir = std::filesystem::temp_directory_path() / "gisemi_cli_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "broken.json") << "{\n  \"vertices\": [\"a\"\n  \"edges\": []\n}\n";
    std::ofstream(dir / "dangling.json")
        << R"({"vertices": ["a"], "edges": [{"id": "x", "src": "a", "dst": "b"}]})";
  }
  auto broken = gis({"paths", "--graph", (dir / "broken.json").string()});
  CHECK(broken.status == 2);
  CHECK(broken.err.find("line 3") != std::string::npos);
  auto dangling = gis({"paths", "--graph", (dir / "dangling.json").string()});
  CHECK(dangling.status == 2);
  CHECK(dangling.err.find("dangling endpoint b") != std::string::npos);
}

TEST_CASE("verify reports in text and json") {
  auto text = gis({"verify", "embedding", "--graph", g1, "--max-len", "2"});
  CHECK(text.status == 0);
  CHECK(text.out.find("status pass") != std::string::npos);

  auto json =
      gis({"verify", "embedding", "--builtin", "rose:2", "--max-len", "2", "--format", "json"});
  REQUIRE(json.status == 0);
  auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["suite"] == "embedding");
  CHECK(doc["status"] == "pass");
  auto const& e = doc["embeddings"][0];
  CHECK(e["graph"] == "rose:2");
  CHECK(e["arity"] == 3);
  CHECK(e["bound"] == 2);
  CHECK(e["elements_checked"] == 50);
  CHECK(e["pairs_checked"] == 2500);
  for (auto k : {"1", "2", "3", "4"}) {
    CHECK(e["case_histogram"][k].get<int>() > 0);
  }

  auto topo = gis({"verify", "topology", "--builtin", "ladder:3", "--max-len", "1", "--trunc", "3",
                   "--format", "json"});
  CHECK(topo.status == 0);
  CHECK(nlohmann::json::parse(topo.out)["topology"].size() > 0);
}
