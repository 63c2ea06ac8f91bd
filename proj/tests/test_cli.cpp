#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "jetgeom/cli.hpp"
#include "jetgeom/errors.hpp"
#include "jetgeom/serial.hpp"

using namespace jetgeom;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("jetgeom-test-" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& contents = "") const {
    fs::path p = path / name;
    if (!contents.empty()) {
      std::ofstream out(p);
      out << contents;
    }
    return p.string();
  }
};

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("variety files parse and round-trip") {
  // x0 x3 - x1 x2 in the flat single-generator form
  std::string text = R"({"vars": 4, "gens": [["1/1",[1,0,0,1]],["-1/1",[0,1,1,0]]]})";
  InputObject obj = parse_input_text(text);
  REQUIRE(std::holds_alternative<VarietySpec>(obj));
  const VarietySpec& spec = std::get<VarietySpec>(obj);
  CHECK(spec.ambient_dim == 3);
  REQUIRE(spec.gens.size() == 1);
  CHECK(spec.gens[0].term_count() == 2);

  // serialization round-trips exactly
  Json j = spec_to_json(spec);
  InputObject again = parse_input_text(j.dump());
  CHECK(std::get<VarietySpec>(again).gens[0] == spec.gens[0]);
  CHECK(spec_to_json(std::get<VarietySpec>(again)).dump() == j.dump());

  CHECK_THROWS_AS(parse_input_text(R"({"vars": 4, "gens": [["1/1",[1,0,0]]]})"), Error);  // short row
  CHECK_THROWS_AS(parse_input_text(R"({"vars": 4, "gens": [["1/1",[1,0,0,1]],["1/1",[0,0,0,1]]]})"),
                  Error);  // non-homogeneous
  CHECK_THROWS_AS(parse_input_text("not json"), Error);
}

TEST_CASE("generate, analyze, and classify through the CLI") {
  TempDir dir;
  std::string class1 = dir.file("class1.json");
  RunResult gen = run_cli({"gen", "1", "--n", "3", "--R", "1", "--lambda", "1,2,3", "-o", class1});
  REQUIRE(gen.code == 0);

  RunResult analyze =
      run_cli({"analyze", class1, "--point", "1,0,0,0,0,0", "--order", "5", "--format", "structured"});
  REQUIRE(analyze.code == 0);
  Json rep = Json::parse(analyze.out);
  CHECK(rep["class"]["tag"] == "CI_TWO_QUADRICS");
  CHECK(rep["class"]["number"] == 1);
  CHECK(rep["pencil"]["tag"] == "FOUR_DISTINCT");
  CHECK(rep["fubini"]["holds"] == true);
  CHECK(rep["witnesses"]["sigma"][0][1][1] == "-1");

  // text output carries the same facts
  RunResult text = run_cli({"analyze", class1, "--point", "1,0,0,0,0,0"});
  CHECK(text.code == 0);
  CHECK(text.out.find("CI_TWO_QUADRICS") != std::string::npos);
  CHECK(text.out.find("FOUR_DISTINCT") != std::string::npos);

  std::string lin = dir.file("lin.json");
  REQUIRE(run_cli({"gen", "7", "--n", "3", "-o", lin}).code == 0);
  RunResult linres = run_cli({"analyze", lin, "--point", "1,0,0,0,0,0", "--format", "structured"});
  CHECK(linres.code == 0);
  CHECK(Json::parse(linres.out)["class"]["tag"] == "LINEAR");
}

TEST_CASE("contact and splitting subcommands") {
  TempDir dir;
  std::string quad = dir.file("quad.json", R"({"vars": 4, "gens": [["1/1",[1,0,0,1]],["-1/1",[0,1,1,0]]]})");
  RunResult contained = run_cli({"contact", quad, "--line", "1,0,0,0;0,1,0,0", "--format", "structured"});
  REQUIRE(contained.code == 0);
  CHECK(Json::parse(contained.out)["contact"]["contained"] == true);

  std::string cubic = dir.file(
      "cubic.json", R"({"vars": 4, "gens": [["1",[3,0,0,0]],["1",[0,3,0,0]],["1",[0,0,3,0]],["1",[0,0,0,3]]]})");
  RunResult split = run_cli({"splitting", cubic, "--line", "1,-1,0,0;0,0,1,-1", "--format", "structured"});
  REQUIRE(split.code == 0);
  Json srep = Json::parse(split.out);
  CHECK(srep["splitting"]["degrees"] == Json::array({-1}));
  CHECK(srep["splitting"]["sumOk"] == true);
  CHECK(srep["splitting"]["coversImpossible"] == true);

  RunResult text = run_cli({"splitting", cubic, "--line", "1,-1,0,0;0,0,1,-1"});
  CHECK(text.out.find("(-1)") != std::string::npos);
}

TEST_CASE("pencil subcommand") {
  TempDir dir;
  std::string pencil = dir.file("pencil.json", R"({"n": 3,
    "A": [["1","0","0"],["0","1","0"],["0","0","1"]],
    "B": [["1","0","0"],["0","2","0"],["0","0","3"]]})");
  RunResult res = run_cli({"pencil", pencil, "--format", "structured"});
  REQUIRE(res.code == 0);
  Json rep = Json::parse(res.out);
  CHECK(rep["pencil"]["tag"] == "FOUR_DISTINCT");
  CHECK(rep["pencil"]["partition"] == Json::array({1, 1, 1, 1}));
  CHECK(rep["pencil"]["degenerateDual"] == false);
}

TEST_CASE("fubini subcommand on a chart file") {
  TempDir dir;
  std::string chart = dir.file("chart.json", R"({"n": 3, "c": 2, "order": 5, "jets": [
    [["1",[2,0,0]],["1",[0,2,0]],["1",[0,0,2]]],
    [["1",[3,0,0]]]
  ]})");
  RunResult res = run_cli({"fubini", chart, "--format", "structured"});
  REQUIRE(res.code == 0);
  Json rep = Json::parse(res.out);
  CHECK(rep["fubini"]["holds"] == false);
  CHECK(rep["fubini"]["residual"] == 1);
}

TEST_CASE("exit codes distinguish usage and mathematical failures") {
  TempDir dir;
  // missing file: I/O
  CHECK(run_cli({"analyze", dir.file("missing.json"), "--point", "1,0,0,0"}).code == 1);
  // malformed json
  std::string bad = dir.file("bad.json", "{oops");
  CHECK(run_cli({"analyze", bad, "--point", "1,0,0,0"}).code == 1);
  // singular point: math error
  std::string cone = dir.file("cone.json",
                              R"({"vars": 4, "gens": [["1",[0,2,0,0]],["1",[0,0,2,0]],["-1",[0,0,0,2]]]})");
  // (single generator as three terms)
  RunResult sing = run_cli({"analyze", cone, "--point", "1,0,0,0"});
  CHECK(sing.code == 2);
  CHECK_FALSE(sing.err.empty());
  // point not on the variety: math error
  std::string quad = dir.file("quad.json", R"({"vars": 4, "gens": [["1/1",[1,0,0,1]],["-1/1",[0,1,1,0]]]})");
  CHECK(run_cli({"analyze", quad, "--point", "1,1,1,0"}).code == 2);
  // unknown flag: usage
  CHECK(run_cli({"analyze", quad, "--frobnicate"}).code == 1);
}

TEST_CASE("structured output is byte-identical across runs") {
  TempDir dir;
  std::string class1 = dir.file("c1.json");
  REQUIRE(run_cli({"gen", "1", "--n", "3", "--R", "2", "--U", "1", "--V", "-1", "--W", "3", "--lambda",
                   "1,2,3", "--rho", "1,0,2", "-o", class1})
              .code == 0);
  std::vector<std::vector<std::string>> invocations = {
      {"analyze", class1, "--point", "1,0,0,0,0,0", "--format", "structured"},
      {"fubini", class1, "--point", "1,0,0,0,0,0", "--format", "structured"},
  };
  for (const auto& args : invocations) {
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
  }
  // regenerating the input file is also byte-stable
  std::string again = dir.file("c1b.json");
  REQUIRE(run_cli({"gen", "1", "--n", "3", "--R", "2", "--U", "1", "--V", "-1", "--W", "3", "--lambda",
                   "1,2,3", "--rho", "1,0,2", "-o", again})
              .code == 0);
  std::ifstream f1(class1), f2(again);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());
}
