#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>

#include "spinorfact/suites.hpp"

using namespace spinorfact;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

/// Runs the CLI, capturing stdout and stderr together.
Run cli(const std::string& args) {
  std::string cmd = std::string(SPINORFACT_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path workdir(const std::string& name) {
  auto dir = fs::temp_directory_path() / "spinorfact-cli-test" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

io::Json json_file(const fs::path& p) { return io::Json::parse(io::read_file(p)); }

}  // namespace

TEST_CASE("verify writes a deterministic report") {
  auto dir = workdir("verify");
  auto a = cli("verify circular --out " + (dir / "a").string());
  auto b = cli("verify circular --out " + (dir / "b").string());
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(a.out.find("FAIL") == std::string::npos);
  auto ra = io::read_file(dir / "a" / "report-circular.json");
  CHECK(ra == io::read_file(dir / "b" / "report-circular.json"));
  auto j = io::Json::parse(ra);
  CHECK(j["suite"] == "circular");
  CHECK(j["passed"] == true);
  bool has_distance = false;
  for (const auto& c : j["checks"]) has_distance = has_distance || c["id"] == "circular.distances";
  CHECK(has_distance);
}

TEST_CASE("verify villarceau covers 25 family samples") {
  auto dir = workdir("vill");
  auto r = cli("verify villarceau --out " + dir.string());
  CHECK(r.code == 0);
  auto j = json_file(dir / "report-villarceau.json");
  for (const auto& c : j["checks"])
    if (c["id"] == "villarceau.family") CHECK(c["details"]["samples"] == 25);
}

TEST_CASE("exit codes") {
  auto dir = workdir("exit");
  CHECK(cli("verify nosuch --out " + dir.string()).code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("").code == 2);
  CHECK(cli("--field complex verify all").code == 2);
  CHECK(cli("--field float verify algebra").code == 2);
  io::write_file_atomic(dir / "bad.json", R"({"tolerance": 1})");
  CHECK(cli("--config " + (dir / "bad.json").string() + " verify algebra --out " + dir.string()).code == 2);
  io::write_file_atomic(dir / "strict.json", R"({"second_form_tol": 1e-15})");
  CHECK(cli("--config " + (dir / "strict.json").string() + " verify villarceau --out " + dir.string()).code == 1);
  CHECK(cli("--help").code == 0);
}

TEST_CASE("factor: singular remainders give varieties") {
  auto dir = workdir("factor");
  auto r = cli("factor villarceau --out " + dir.string());
  REQUIRE(r.code == 0);
  auto j = json_file(dir / "factor.json");
  CHECK(j["case"] == "singular_remainder");
  CHECK(j["variety"]["affine"]["dimension"] == 3);
  CHECK(j["variety"]["residuals"].size() == 1);
  CHECK(j["family"]["name"] == "villarceau");

  r = cli("factor circular-translation --out " + dir.string());
  REQUIRE(r.code == 0);
  j = json_file(dir / "factor.json");
  CHECK(j["variety"]["affine"]["dimension"] == 2);
  CHECK(j["variety"]["residuals"].empty());
}

TEST_CASE("factor: generic input from a JSON file") {
  auto dir = workdir("generic");
  auto c = SpinorPoly::linear(MV::blade("e12")) * SpinorPoly::linear(MV::blade("e13"));
  io::write_file_atomic(dir / "c.json", io::to_json(c).dump());
  auto r = cli("factor " + (dir / "c.json").string() + " --out " + dir.string());
  REQUIRE(r.code == 0);
  auto j = json_file(dir / "factor.json");
  CHECK(j["case"] == "generic");
  REQUIRE(j["factorizations"].size() == 1);
  CHECK(io::multivector_from_json<Rational>(j["factorizations"][0]["h2"]) == MV::blade("e13"));
  CHECK(io::multivector_from_json<Rational>(j["factorizations"][0]["h1"]) == MV::blade("e12"));

  io::write_file_atomic(dir / "odd.json", R"([{"e1":"1"},{"1":"1"}])");
  CHECK(cli("factor " + (dir / "odd.json").string() + " --out " + dir.string()).code == 2);
}

TEST_CASE("family output round-trips") {
  auto dir = workdir("family");
  auto r = cli("family villarceau --params 0,0,1/2 --out " + dir.string());
  REQUIRE(r.code == 0);
  auto rec = io::family_from_json(json_file(dir / "family.json"));
  CHECK(rec.h1 == MV::blade("e12"));
  CHECK(rec.h2 == MV::blade("e3+"));
  CHECK(cli("family villarceau --params 0,0,1 --out " + dir.string()).code == 2);
  CHECK(cli("family circular-translation --params 1,1 --out " + dir.string()).code == 0);
}

TEST_CASE("trajectory CSV") {
  auto dir = workdir("traj");
  auto r = cli("trajectory villarceau --point 1,0,0 --samples 256 --out " + dir.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("70/70") != std::string::npos);
  auto csv = io::read_file(dir / "trajectory.csv");
  std::size_t rows = 0;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#' && line[0] != 't') ++rows;
  CHECK(rows == 256);
  CHECK(cli("--field float trajectory villarceau --point 1,0,0 --samples 16 --out " + dir.string()).code == 0);
}

TEST_CASE("trajectory through an ideal point warns and writes a partial CSV") {
  auto dir = workdir("ideal");
  // preimage of infinity under C(0)
  auto c0 = motions::villarceau()(Rational(0));
  Point x = decode_point(sandwich(reverse(c0), MV::blade("e+") + MV::blade("e-")));
  std::string pt = to_string(x[0]) + "," + to_string(x[1]) + "," + to_string(x[2]);
  auto r = cli("trajectory villarceau --point " + pt + " --samples 5 --range -1,1 --out " + dir.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("warning: t=0 maps to the ideal point") != std::string::npos);
  auto csv = io::read_file(dir / "trajectory.csv");
  CHECK(csv.find("# ideal point at t=0") != std::string::npos);
  CHECK(csv.find("# ideal 1") != std::string::npos);
}

TEST_CASE("surface export and checks") {
  auto dir = workdir("surface");
  auto r = cli("surface villarceau --sphere-point 1/4,0,1/4 --point 1,1/3,-1/2 --out " + dir.string());
  CHECK(r.code == 0);
  CHECK(fs::exists(dir / "surface.obj"));
  CHECK(fs::exists(dir / "surface.csv"));
  auto j = json_file(dir / "surface-checks.json");
  CHECK(j["second_form"]["passed"] == true);
  CHECK(j["parameter_lines"]["circles"] == j["parameter_lines"]["tested"]);
  r = cli("surface villarceau --sphere-point 0,0,1/2 --point 1,0,0 --out " + dir.string());
  CHECK(r.code == 0);
  CHECK(io::read_file(dir / "surface.obj").find("\nf ") != std::string::npos);
}

TEST_CASE("nullpoints and classify") {
  auto dir = workdir("null");
  auto r = cli("nullpoints villarceau --out " + dir.string());
  REQUIRE(r.code == 0);
  auto j = json_file(dir / "nullpoints.json");
  CHECK(j["n1"]["1"] == "-1,0");
  for (const auto& s : j["scans"]) CHECK(s["all_singular"] == true);
  r = cli("nullpoints identity --out " + dir.string());
  CHECK(r.code == 0);
  CHECK(json_file(dir / "nullpoints.json")["degenerate"] == true);

  r = cli(R"(classify '{"1":"1"}' '{"e12":"-1"}')");
  CHECK(r.code == 0);
  CHECK(r.out.find("rotation") != std::string::npos);
  r = cli(R"(classify '{"1":"1"}' '{"e+-":"-1"}')");
  CHECK(r.out.find("scaling") != std::string::npos);
  CHECK(cli(R"(classify '{"e123+":"1","e123-":"1"}' '{"1":"1"}')").code == 2);
}
