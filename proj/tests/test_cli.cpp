#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = triloc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("triloc_test_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("parse_angle") {
  using triloc::cli::parse_angle;
  using std::numbers::pi;
  CHECK(parse_angle("pi/4") == doctest::Approx(pi / 4));
  CHECK(parse_angle("2pi/3") == doctest::Approx(2 * pi / 3));
  CHECK(parse_angle("2*pi") == doctest::Approx(2 * pi));
  CHECK(parse_angle("-pi/2") == doctest::Approx(-pi / 2));
  CHECK(parse_angle("0.6216") == 0.6216);
  CHECK_THROWS(parse_angle("pie"));
  CHECK_THROWS(parse_angle("pi/0"));
}

TEST_CASE("compute: W state") {
  const auto r = run({"compute", "--family", "w"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["s_svetlichny"].get<double>() == doctest::Approx(4.3546).epsilon(1e-4));
  CHECK(j["pi_tangle"].get<double>() == doctest::Approx(0.549364).epsilon(1e-5));
  CHECK(j["chsh"]["bc"].get<double>() == doctest::Approx(1.885618).epsilon(1e-6));
  CHECK(j.contains("svetlichny"));
  CHECK(j["svetlichny"]["x"].size() == 3);
}

TEST_CASE("compute: GHZ class and ground state") {
  const auto r = run({"compute", "--family", "ghz", "--p", "0.8", "--theta", "pi/4", "--theta3", "pi/2"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["s_svetlichny"].get<double>() == doctest::Approx(4.5255).epsilon(1e-4));

  const auto g = run({"compute", "--family", "ground"});
  REQUIRE(g.code == 0);
  CHECK(json::parse(g.out)["pi_tangle"].get<double>() == 0.0);
}

TEST_CASE("compute: custom files") {
  const auto dir = scratch("custom");
  std::ofstream(dir / "bell.json") << R"({"dim": 4, "re": [[0.5,0,0,0.5],[0,0,0,0],[0,0,0,0],[0.5,0,0,0.5]],
                                          "im": [[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]})";
  const auto ok = run({"compute", "--family", "custom", "--file", (dir / "bell.json").string()});
  REQUIRE(ok.code == 0);
  CHECK(json::parse(ok.out)["chsh_ab"].get<double>() == doctest::Approx(2.0 * std::sqrt(2.0)));

  std::ofstream(dir / "broken.json") << "{\"dim\": 8, \"re\": [[1]]";
  CHECK(run({"compute", "--family", "custom", "--file", (dir / "broken.json").string()}).code == 2);
  CHECK(run({"compute", "--family", "custom", "--file", (dir / "missing.json").string()}).code == 2);
  CHECK(run({"compute", "--family", "ghz", "--theta", "banana"}).code == 2);
  CHECK(run({"compute", "--family", "nope"}).code == 2);
  CHECK(run({"compute", "--starts", "0"}).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("figure: unknown preset and table") {
  const auto dir = scratch("figure");
  const auto bad = run({"figure", "fig9", "-o", dir.string()});
  CHECK(bad.code == 3);
  CHECK(bad.err.find("fig9") != std::string::npos);

  const auto t = run({"figure", "table1", "-o", dir.string(), "--starts", "16"});
  REQUIRE(t.code == 0);
  const std::string csv = slurp(dir / "table1.csv");
  CHECK(csv.rfind("p,theta,theta3,s_svetlichny,s_bound\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
  const auto meta = json::parse(slurp(dir / "table1.json"));
  CHECK(meta.contains("version"));
  fs::remove_all(dir);
}

TEST_CASE("dynamics and zeno: CSV, sidecar and byte-identical reruns") {
  const auto dir = scratch("dynamics");
  const std::vector<std::string> args{"dynamics", "--r",      "0.1",    "--r",     "20", "--tau-max",
                                      "1",        "--steps",  "10",     "--starts", "8",  "-o",
                                      dir.string()};
  REQUIRE(run(args).code == 0);
  const std::string first = slurp(dir / "dynamics.csv");
  CHECK(first.rfind("tau,r,delta,s_svetlichny,s_bound,chsh_ab,pi_tangle,survival,error\n", 0) == 0);
  CHECK(std::count(first.begin(), first.end(), '\n') == 23);
  const auto meta = json::parse(slurp(dir / "dynamics.json"));
  for (const char* key : {"version", "config", "seed", "wall_clock_seconds", "error_rows"}) CHECK(meta.contains(key));
  CHECK(meta["error_rows"] == 0);
  REQUIRE(run(args).code == 0);
  CHECK(slurp(dir / "dynamics.csv") == first);

  CHECK(run({"zeno", "--r", "20", "--tau-max", "1", "--steps", "4", "-o", dir.string()}).code == 2);  // interval missing
  const auto z = run({"zeno", "--r", "20", "--tau-max", "1", "--steps", "4", "--measure-interval", "0.01", "--metrics",
                      "survival,pi_tangle", "-o", dir.string()});
  REQUIRE(z.code == 0);
  const std::string zcsv = slurp(dir / "zeno.csv");
  CHECK(zcsv.find("\n0,20,0,,,,") != std::string::npos);
  CHECK(json::parse(slurp(dir / "zeno.json"))["config"]["schedule"]["interval"] == 0.01);

  const auto j = run({"dynamics", "--r", "1", "--steps", "2", "--metrics", "survival", "--format", "json", "-o",
                      dir.string()});
  REQUIRE(j.code == 0);
  CHECK(json::parse(slurp(dir / "dynamics.json"))["data"].size() == 3);

  CHECK(run({"dynamics", "--r", "1", "--metrics", "entropy", "-o", dir.string()}).code == 2);
  CHECK(run({"dynamics", "--r", "2", "--r", "1", "-o", dir.string()}).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("validate: passes, fails under the perturbed bound, and is seed independent") {
  CHECK(run({"validate", "--random-states", "10"}).code == 0);
  const auto bad = run({"validate", "--perturb-bound", "--random-states", "10"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("\"passed\": false") != std::string::npos);
  CHECK(run({"validate", "--random-states", "10", "--seed", "7"}).code == 0);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--version"}).code == 0);
}

TEST_CASE("the installed binary runs") {
  const std::string cmd = std::string("\"") + TRILOC_BINARY + "\" figure nope > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 3);
}
