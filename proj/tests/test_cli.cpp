#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "circlesys/cli.hpp"
#include "circlesys/io.hpp"

using namespace circlesys;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fixture(const std::string& name) { return std::string(CIRCLESYS_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("generate, realize, verify pipeline") {
  const Run g = run({"generate", "octahedron"});
  REQUIRE(g.code == 0);
  const Run r = run({"realize"}, g.out);
  REQUIRE(r.code == 0);
  const Run v = run({"verify"}, r.out);
  CHECK(v.code == 0);
  CHECK(parse_document(v.out)["ok"] == true);
}

TEST_CASE("bounds output") {
  CHECK(run({"bounds", "--n", "6"}).out == "{\"lower\":3.0,\"upper\":4.0}\n");
  CHECK(run({"bounds", "--n", "12"}).out == "{\"lower\":4.0,\"upper\":8.0}\n");
  CHECK(run({"bounds", "--n", "5"}).code == 2);
}

TEST_CASE("broken realization fails verification") {
  const Run v = run({"verify", fixture("broken.json")});
  CHECK(v.code == 1);
  CHECK(v.err.find("point_on_circle") != std::string::npos);
  CHECK_FALSE(parse_document(v.out)["violations"].empty());
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"realize"}, "not json").code == 2);
  CHECK(run({"geom", "arc-search", "--phi", "3.5"}).code == 2);
  // Valid input that fails a check.
  const Run aug = run({"generate", "augmented"});
  REQUIRE(aug.code == 0);
  CHECK(run({"realize"}, aug.out).code == 1);
  CHECK(run({"classify"}, run({"generate", "flower", "--c", "4"}).out).code == 1);
  CHECK(exit_code_for(Errc::NoConvergence) == 3);
  CHECK(exit_code_for(Errc::DegenerateArc) == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("classify and equiv") {
  const Run three = run({"generate", "canonical", "--class", "THREE_CROSSING"});
  const Run nested = run({"generate", "canonical", "--class", "FOUR_TOUCHING_NESTED"});
  CHECK(run({"classify"}, nested.out).out == "{\"class\":\"FOUR_TOUCHING_NESTED\"}\n");

  const auto dir = std::filesystem::temp_directory_path() / "circlesys_cli_test";
  std::filesystem::create_directories(dir);
  const std::string a = (dir / "a.json").string(), b = (dir / "b.json").string();
  std::ofstream(a) << three.out;
  std::ofstream(b) << nested.out;
  CHECK(Json::parse(run({"equiv", a, b}).out)["equivalent"] == false);
  CHECK(Json::parse(run({"equiv", a, a}).out)["equivalent"] == true);
  CHECK(Json::parse(run({"equiv", a, "-"}, three.out).out)["equivalent"] == true);
  std::filesystem::remove_all(dir);
}

TEST_CASE("geometry oracles") {
  const Run m = run({"geom", "inner-mate", "--r1", "1", "--r2", "0.5", "--phi", "3.141592653589793"});
  REQUIRE(m.code == 0);
  CHECK(Json::parse(m.out)["radius"].get<double>() == doctest::Approx(0.5));
  const Run p = run({"geom", "phi-max", "--r1", "3", "--r2", "1"});
  CHECK(Json::parse(p.out)["phi_max"].get<double>() == doctest::Approx(1.0471975511965976));
  const Run s = run({"geom", "arc-search", "--phi", "2.0", "--grid", "30"});
  CHECK(Json::parse(s.out)["feasible_found"] == false);
  const Run l = run({"geom", "lemma", "--side", "exterior", "--count", "500", "--seed", "9"});
  CHECK(Json::parse(l.out)["violations"] == 0);
  CHECK(Json::parse(l.out)["valid"] == 500);
  const Run d = run({"geom", "descartes"}, run({"generate", "canonical", "--class", "FOUR_TOUCHING_DISJOINT"}).out);
  REQUIRE(d.code == 0);
  CHECK(Json::parse(d.out)["defect"].get<double>() < 1e-12);
}

TEST_CASE("identical invocations give identical bytes") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"generate", "flower", "--c", "5"}, {"generate", "upper", "--c", "8"},
        {"generate", "augmented", "--kind", "bigadget"}, {"geom", "lemma", "--count", "300", "--seed", "4"},
        {"generate", "canonical", "--class", "FOUR_TOUCHING_DISJOINT", "--format", "svg"}}) {
    const Run first = run(args), second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
  }
  const std::string graph = run({"generate", "icosahedron", "--medial"}).out;
  CHECK(run({"realize"}, graph).out == run({"realize"}, graph).out);
  const std::string real = run({"realize"}, graph).out;
  CHECK(run({"render"}, real).out == run({"render"}, real).out);
}

TEST_CASE("output file and formats") {
  const auto path = (std::filesystem::temp_directory_path() / "circlesys_cli_out.svg").string();
  const Run r = run({"generate", "flower", "--c", "3", "--format", "svg", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().rfind("<svg", 0) == 0);
  std::remove(path.c_str());

  CHECK(run({"generate", "cube", "--format", "svg"}).code == 2);
  CHECK(run({"bounds", "--n", "6", "--format", "svg"}).code == 2);
  CHECK(run({"render", "--format", "json"}, run({"generate", "flower"}).out).code == 2);
  const Run packed = run({"render", "--no-labels"}, run({"generate", "flower", "--c", "3"}).out);
  CHECK(packed.out.find("<text") == std::string::npos);
}
