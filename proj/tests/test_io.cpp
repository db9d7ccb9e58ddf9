#include <doctest.h>

#include <filesystem>

#include "spinorfact/suites.hpp"

using namespace spinorfact;
namespace fs = std::filesystem;

namespace {
MV b(std::string_view name) { return MV::blade(name); }

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "spinorfact-io-test";
  fs::create_directories(dir);
  return dir / name;
}
}  // namespace

TEST_SUITE("cli_io") {

TEST_CASE("multivector JSON round-trip") {
  RationalSampler rng(70);
  for (int n = 0; n < 50; ++n) {
    MV x = rng.multivector(8);
    auto j = io::to_json(x);
    auto text = j.dump();
    REQUIRE(io::multivector_from_json<Rational>(io::Json::parse(text)) == x);
    REQUIRE(io::to_json(io::multivector_from_json<Rational>(io::Json::parse(text))).dump() == text);
  }
  Multivector<double> d = Multivector<double>::blade("e12", 0.1) + Multivector<double>::blade("e3+", -1.0 / 3.0);
  CHECK(io::multivector_from_json<double>(io::Json::parse(io::to_json(d).dump())) == d);
  auto z = complexify(b("e12")) * ComplexRational(Rational(1, 3), Rational(-2));
  CHECK(io::multivector_from_json<ComplexRational>(io::to_json(z)) == z);
}

TEST_CASE("multivector JSON is canonical") {
  auto x = b("e3+") + b("e1") * Rational(2) + MV(Rational(-1, 2));
  CHECK(io::to_json(x).dump() == R"({"1":"-1/2","e1":"2","e3+":"1"})");
  CHECK(io::to_json(MV()).dump() == "{}");
}

TEST_CASE("malformed multivector JSON") {
  CHECK_THROWS_AS(io::multivector_from_json<Rational>(io::Json::parse(R"({"e21":"1"})")), Error);
  CHECK_THROWS_AS(io::multivector_from_json<Rational>(io::Json::parse(R"({"e12":1})")), Error);
  CHECK_THROWS_AS(io::multivector_from_json<Rational>(io::Json::parse(R"(["e12"])")), Error);
  CHECK_THROWS_AS(io::multivector_from_json<Rational>(io::Json::parse(R"({"e12":"1/0"})")), Error);
}

TEST_CASE("polynomial and family JSON round-trip") {
  for (const auto& c : {motions::circular_translation(), motions::villarceau(), motions::identity()}) {
    auto text = io::to_json(c).dump();
    REQUIRE(io::polynomial_from_json<Rational>(io::Json::parse(text)) == c);
  }
  auto j = io::family_to_json(villarceau_factorizations(), {0, 0, Rational(1, 2)});
  auto rec = io::family_from_json(io::Json::parse(j.dump()));
  CHECK(rec.family == "villarceau");
  CHECK(rec.params == std::vector<Rational>{0, 0, Rational(1, 2)});
  CHECK(rec.h1 == b("e12"));
  CHECK(rec.h2 == b("e3+"));
  CHECK(rec.product_ok);
  CHECK(rec.commutator_zero);
  CHECK(io::family_to_json(villarceau_factorizations(), rec.params).dump() == j.dump());
}

TEST_CASE("motions by name and from files") {
  CHECK(io::motion_by_name("circular-translation") == motions::circular_translation());
  CHECK(io::motion_by_name("villarceau") == motions::villarceau());
  CHECK_THROWS_AS(io::motion_by_name("nope"), Error);
  auto path = scratch("motion.json");
  io::write_file_atomic(path, io::to_json(motions::villarceau()).dump());
  CHECK(io::load_motion(path.string()) == motions::villarceau());
  io::write_file_atomic(path, "{not json");
  CHECK_THROWS_AS(io::load_motion(path.string()), Error);
}

TEST_CASE("point and list parsing") {
  CHECK(io::parse_point("1,-2/3,0") == Point{1, Rational(-2, 3), 0});
  CHECK_THROWS_AS(io::parse_point("1,2"), Error);
  CHECK_THROWS_AS(io::parse_point("1,x,2"), Error);
  CHECK(io::parse_rationals("1/2,3").size() == 2);
}

TEST_CASE("atomic writes") {
  auto path = scratch("atomic.txt");
  io::write_file_atomic(path, "first");
  io::write_file_atomic(path, "second");
  CHECK(io::read_file(path) == "second");
  for (const auto& e : fs::directory_iterator(path.parent_path()))
    CHECK(e.path().filename().string().find(".tmp") == std::string::npos);
  CHECK_THROWS_AS(io::read_file(scratch("missing.txt")), Error);
  CHECK_THROWS_AS(io::write_file_atomic("/proc/spinorfact/forbidden.txt", "x"), Error);
}

TEST_CASE("trajectory CSV marks ideal samples") {
  auto csv = io::trajectory_csv({{"0", PointD{1, 2, 3}}, {"1", std::nullopt}}, {"motion test"});
  CHECK(csv.find("# motion test\n") == 0);
  CHECK(csv.find("t,x,y,z\n0,1,2,3\n") != std::string::npos);
  CHECK(csv.find("# ideal point at t=1") != std::string::npos);
}

TEST_CASE("surface OBJ") {
  auto f = villarceau_family(Rational(1, 4), 0, Rational(1, 4));
  auto g = surface_grid(f, Point{1, Rational(1, 3), Rational(-1, 2)}, {-1, 1}, {-1, 1}, 3, 4);
  auto obj = io::surface_obj(g, {});
  std::size_t v = 0, faces = 0;
  std::istringstream in(obj);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("v ", 0) == 0) ++v;
    if (line.rfind("f ", 0) == 0) ++faces;
  }
  CHECK(v == 12);
  CHECK(faces == 6);
}

TEST_CASE("config validation") {
  auto c = Config::from_json(io::Json::parse(R"({"seed": 5, "grid": 21})"));
  CHECK(c.seed == 5);
  CHECK(c.grid == 21);
  CHECK(c.circularity_tol == 1e-9);
  CHECK_THROWS_AS(Config::from_json(io::Json::parse(R"({"sede": 5})")), Error);
  CHECK_THROWS_AS(Config::from_json(io::Json::parse(R"({"exp_tol": 0})")), Error);
  CHECK_THROWS_AS(Config::from_json(io::Json::parse(R"({"fd_step": -1e-4})")), Error);
  CHECK_THROWS_AS(Config::from_json(io::Json::parse("[1]")), Error);
  CHECK(Config::from_json(c.to_json()).to_json() == c.to_json());
}

TEST_CASE("suite reports") {
  Config c;
  c.random_elements = 20;
  auto r1 = run_suite("algebra", c);
  auto r2 = run_suite("algebra", c);
  CHECK(r1.passed());
  CHECK(r1.to_json().dump() == r2.to_json().dump());
  for (const auto& ch : r1.checks) {
    CHECK_FALSE(ch.id.empty());
    CHECK_FALSE(ch.claim.empty());
    CHECK_FALSE(ch.provenance.empty());
  }
  CHECK_THROWS_AS(run_suite("geometry", c), Error);
  CHECK_FALSE(Report{}.passed());
}

TEST_CASE("random sampler is deterministic") {
  RationalSampler a(9), b2(9), c(10);
  bool differs = false;
  for (int n = 0; n < 20; ++n) {
    auto x = a.rational();
    REQUIRE(x == b2.rational());
    differs = differs || x != c.rational();
  }
  CHECK(differs);
}

}
