#include <doctest.h>

#include "latval/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "latval");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = latval::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("count on a builtin cube") {
  auto r = run({"count", "--builtin", "cube:3", "--dilate", "3"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 64);
  CHECK(j["by_face_dim"]["3"] == 8);
  CHECK(j["by_face_dim"]["0"] == 8);
}

TEST_CASE("count on a JSON polytope") {
  auto p = temp_file("latval_tri.json", R"({"dim": 2, "vertices": [[0,0],[2,0],[0,2]]})");
  auto r = run({"count", "--polytope", p, "--dilate", "0..2"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["count"] == 1);
  CHECK(j[1]["count"] == 6);
  CHECK(j[2]["count"] == 15);
}

TEST_CASE("Reeve Ehrhart coefficients are rational strings") {
  auto r = run({"ehrhart", "--builtin", "reeve:3", "--family", "L"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["coeffs"] == nlohmann::json({"1/1", "3/2", "1/1", "1/2"}));
  CHECK(j["hstar"] == nlohmann::json({"1/1", "0/1", "2/1", "0/1"}));
}

TEST_CASE("malformed JSON reports the byte offset") {
  auto p = temp_file("latval_bad.json", R"({"vertices": [[0,0],[1,0)");
  auto r = run({"count", "--polytope", p});
  CHECK(r.code == 2);
  CHECK(r.err.find("byte") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"count"}).code == 2);
  CHECK(run({"count", "--builtin", "cube:9"}).code == 2);
  CHECK(run({"valuation", "--builtin", "cube:2", "--family", "Gk"}).code == 2);
  CHECK(run({"count", "--builtin", "cube:2", "--format", "xml"}).code == 2);
}

TEST_CASE("sampling paths need a seed") {
  unsetenv("LATVAL_SEED");
  auto r = run({"valuation", "--builtin", "cube:2", "--family", "A"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--seed") != std::string::npos);
  setenv("LATVAL_SEED", "12", 1);
  auto s = run({"valuation", "--builtin", "cube:2", "--family", "A", "--dilate", "3"});
  unsetenv("LATVAL_SEED");
  REQUIRE(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["value"].get<double>() == doctest::Approx(9.0));
  // exact route needs no seed
  CHECK(run({"valuation", "--builtin", "cube:2", "--family", "A", "--route", "exact"}).code == 0);
}

TEST_CASE("output is byte-identical for the same seed") {
  auto c = temp_file("latval_cone.json", R"({"generators": [[1,0,0,0],[1,1,0,0],[0,1,1,0],[0,0,1,1]], "ambient_dim": 4})");
  std::vector<std::string> args{"angles", "--cone", c, "--seed", "3", "--samples", "5000", "--what", "alpha,gamma"};
  auto a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  args.push_back("--threads");
  args.push_back("2");
  CHECK(run(args).out == a.out);
}

TEST_CASE("csv and json carry the same numbers") {
  auto c = temp_file("latval_oct.json", R"({"generators": [[1,0,0],[0,1,0],[0,0,1]]})");
  auto j = run({"angles", "--cone", c, "--seed", "1", "--what", "upsilon"});
  auto v = run({"angles", "--cone", c, "--seed", "1", "--what", "upsilon", "--format", "csv"});
  REQUIRE(j.code == 0);
  REQUIRE(v.code == 0);
  auto js = nlohmann::json::parse(j.out);
  std::istringstream in(v.out);
  std::string line;
  std::getline(in, line);  // header
  for (int k = 0; k <= 3; ++k) {
    std::getline(in, line);
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() >= 4);
    CHECK(std::stod(cells[2]) == js["upsilon"][k]["value"].get<double>());
    CHECK(std::stod(cells[3]) == js["upsilon"][k]["stderr"].get<double>());
  }
}

TEST_CASE("hstar from values") {
  auto r = run({"hstar", "--values", "1,4,10,20"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["hstar"] == nlohmann::json({"1/1", "0/1", "0/1", "0/1"}));
}

TEST_CASE("gauss-image exit code reflects the claim") {
  auto c = temp_file("latval_quad.json", R"({"generators": [[1,0],[0,1]]})");
  auto r = run({"gauss-image", "--cone", c, "--k", "1", "--seed", "2", "--trials", "500"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
}

TEST_CASE("--out writes a file") {
  const std::string path = temp_file("latval_out.json", "");
  auto r = run({"count", "--builtin", "simplex:3", "--dilate", "2", "--out", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  CHECK(j["count"] == 10);
}

TEST_CASE("help") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("gauss-image") != std::string::npos);
}
