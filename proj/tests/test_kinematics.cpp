#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "spinorfact/suites.hpp"

using namespace spinorfact;

namespace {
MV b(std::string_view name) { return MV::blade(name); }
const MV kOne(Rational(1));
}  // namespace

TEST_SUITE("kinematics") {

TEST_CASE("elementary motion classes") {
  auto r = classify_elementary(kOne, -b("e12"));
  CHECK(r.kind == MotionClass::Rotation);
  CHECK(r.witness == 1);
  auto eps_i = units::epsilon<Rational>() * units::i<Rational>();
  r = classify_elementary(kOne, -eps_i);
  CHECK(r.kind == MotionClass::Transversion);
  CHECK(r.witness == 0);
  r = classify_elementary(kOne, -b("e+-"));
  CHECK(r.kind == MotionClass::Scaling);
  CHECK(r.witness == -1);
  // a t + b with invertible a: h = a^-1 b
  r = classify_elementary(kOne * Rational(2), -b("e12") * Rational(2));
  CHECK(r.kind == MotionClass::Rotation);
  CHECK_THROWS_AS(classify_elementary(units::epsilon<Rational>(), kOne), Error);
  try {
    classify_elementary(kOne, kOne + b("e12") + b("e123+"));
    FAIL("expected WitnessNotReal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WitnessNotReal);
  }
}

TEST_CASE("circular translation coupler trajectory") {
  auto curve = trajectory_curve(motions::circular_translation(), Point{0, 0, 0});
  for (const auto& t : probe_parameters(10)) {
    auto p = curve.point(t);
    REQUIRE(p);
    Rational d = 1 + t * t;
    CHECK(*p == Point{2 / d, 2 * t / d, 0});
  }
  CHECK(coupler_trajectory_matches_formula(0, 0));
  CHECK(coupler_trajectory_matches_formula(3, 4));
  CHECK(coupler_trajectory_matches_formula(Rational(-2, 7), Rational(5, 3)));
  auto rp = curve.rational_parametrization();
  for (const auto& t : probe_parameters(5)) {
    auto p = *curve.point(t);
    for (int k = 0; k < 3; ++k) CHECK(rp[k](t) / rp[3](t) == p[k]);
  }
}

TEST_CASE("fixed axis and rotation centers") {
  auto curve = trajectory_curve(SpinorPoly::linear(b("e12")), Point{0, 0, 1});
  for (const auto& t : probe_parameters(5)) CHECK(curve.point(t) == Point{0, 0, 1});
  RationalSampler rng(17);
  for (int n = 0; n < 5; ++n) {
    Rational l = rng.rational(), m = rng.rational();
    auto f = circular_translation_family(l, m);
    CHECK(rotation_center_check(f.h1, crank_center(l, m)).passed());
    CHECK(rotation_center_check(f.h2, coupler_point(l, m)).passed());
    Point off = coupler_point(l, m);
    off[1] += 1;
    CHECK_FALSE(rotation_center_check(f.h2, off).constant);
  }
  CHECK_FALSE(rotation_center_check(circular_translation_family(0, 0).h2, Point{1, 1, 1}).constant);
}

TEST_CASE("parallelogram distances") {
  std::vector<Rational> ts = {0, 1, -1, Rational(1, 2), 3};
  auto r = parallelogram_distance_check(0, 0, 3, 4, ts);
  CHECK(r.passed());
  CHECK(r.samples > 0);
  CHECK(crank_center(0, 0) == Point{1, 0, 0});
  auto c2 = trajectory_curve(motions::circular_translation(), coupler_point(0, 0)).point(Rational(0));
  CHECK(c2 == Point{2, 0, 0});
  // squared distance of the two coupler points is constant: 3^2 + 4^2
  auto a = trajectory_curve(motions::circular_translation(), coupler_point(0, 0));
  auto c = trajectory_curve(motions::circular_translation(), coupler_point(3, 4));
  for (const auto& t : ts) {
    auto p = *a.point(t), q = *c.point(t);
    Rational d2 = 0;
    for (int k = 0; k < 3; ++k) d2 += (p[k] - q[k]) * (p[k] - q[k]);
    CHECK(d2 == 25);
  }
  CHECK(parallelogram_distance_check(1, 2, 1, 2, ts).passed());
}

TEST_CASE("exact cocircularity") {
  CHECK(cocircular({Point{1, 0, 0}, Point{0, 1, 0}, Point{-1, 0, 0}, Point{0, -1, 0}}));
  CHECK_FALSE(cocircular({Point{0, 0, 0}, Point{1, 0, 0}, Point{0, 1, 0}, Point{1, 1, 1}}));
  CHECK(cocircular({Point{0, 0, 0}, Point{1, 0, 0}, Point{0, 1, 0}, Point{1, 0, 0}}));
  RationalSampler rng(40);
  for (int n = 0; n < 60; ++n) {
    std::array<Point, 4> q = {rng.point(2, 1), rng.point(2, 1), rng.point(2, 1), rng.point(2, 1)};
    REQUIRE(cocircular(q) == oracle::cocircular({q[0], q[1], q[2], q[3]}));
  }
  CHECK(cocircularity_residual({PointD{1, 0, 0}, PointD{0, 1, 0}, PointD{-1, 0, 0}, PointD{0, -1, 0}}) < 1e-15);
  CHECK(cocircularity_residual({PointD{0, 0, 0}, PointD{1, 0, 0}, PointD{0, 1, 0}, PointD{1, 1, 1}}) > 1e-3);
}

TEST_CASE("Villarceau trajectories are circles") {
  RationalSampler rng(50);
  for (int n = 0; n < 10; ++n) {
    auto curve = trajectory_curve(motions::villarceau(), rng.point());
    std::vector<Point> pts;
    for (const auto& t : probe_parameters(12))
      if (auto p = curve.point(t); p && pts.size() < 5) pts.push_back(*p);
    REQUIRE(pts.size() == 5);
    CHECK(cocircular({pts[0], pts[1], pts[2], pts[3]}));
    CHECK(cocircular({pts[0], pts[1], pts[2], pts[4]}));
    CHECK(oracle::cocircular(pts));
  }
}

TEST_CASE("ideal samples are reported, not thrown") {
  // the point sent to infinity at t = 0
  auto c0 = motions::villarceau()(Rational(0));
  auto pre = sandwich(reverse(c0), detail::null_infinity<Rational>());
  Point x = decode_point(pre);
  auto curve = trajectory_curve(motions::villarceau(), x);
  CHECK_FALSE(curve.point(Rational(0)));
  CHECK(curve.point(Rational(1)));
  auto s = curve.sample(std::vector<Rational>{0, 1});
  CHECK_FALSE(s[0].point);
  CHECK(s[1].point);
}

TEST_CASE("circle fitting and comparison") {
  auto c = circle_through(PointD{1, 0, 0}, PointD{0, 1, 0}, PointD{-1, 0, 0});
  REQUIRE(c);
  CHECK(std::abs(c->radius - 1) < 1e-12);
  CHECK(std::abs(c->center[0]) < 1e-12);
  CHECK_FALSE(circle_through(PointD{0, 0, 0}, PointD{1, 1, 1}, PointD{2, 2, 2}));
  Circle a{{0, 0, 0}, {0, 0, 1}, 1};
  Circle far{{5, 0, 0}, {0, 0, 1}, 1};
  Circle linked{{1, 0, 0}, {0, 1, 0}, 1};
  Circle meet{{1, 0, 0}, {0, 0, 1}, 1};
  CHECK(compare_circles(a, far, {{4, 0, 0}, {6, 0, 0}, {5, 1, 0}}, 1e-6).relation == CircleRelation::Disjoint);
  CHECK(compare_circles(a, linked, {{0, 0, 0}, {2, 0, 0}, {1, 0, 1}}, 1e-6).relation == CircleRelation::Disjoint);
  CHECK(compare_circles(a, meet, {{0, 0, 0}, {2, 0, 0}, {1, 1, 0}}, 1e-6).relation == CircleRelation::Crossing);
  CHECK(compare_circles(a, a, {{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}}, 1e-6).relation == CircleRelation::Identical);
}

TEST_CASE("Hopf disjointness sampling and its detector") {
  RationalSampler rng(60);
  std::vector<std::pair<Point, Point>> same;
  for (int n = 0; n < 5; ++n) {
    Point p = rng.point();
    if (auto q = trajectory_curve(motions::villarceau(), p).point(Rational(1, 3))) same.emplace_back(p, *q);
  }
  auto r = hopf_disjointness(same, probe_parameters(5), 1e-6);
  CHECK(r.identical == same.size());
  CHECK(r.passed());
  // orbits of one point under two different rotations share that point
  std::vector<std::pair<Point, Point>> pairs = {{Point{1, 2, 3}, Point{1, 2, 3}}, {Point{2, 0, 1}, Point{2, 0, 1}}};
  auto rot_a = SpinorPoly::linear(b("e12"));
  auto rot_b = SpinorPoly::linear(b("e13"));
  auto bad = hopf_disjointness(pairs, probe_parameters(5), 1e-6, rot_a * rot_a, rot_b * rot_b);
  CHECK(bad.crossing == pairs.size());
  CHECK_FALSE(bad.passed());
}

TEST_CASE("trajectory surfaces") {
  Point x{1, 0, 0};
  auto f0 = villarceau_family(0, 0, Rational(1, 2));
  auto f1 = villarceau_family(Rational(1, 4), 0, Rational(1, 4));
  auto curve = trajectory_curve(motions::villarceau(), x);
  for (const auto& t : probe_parameters(6)) {
    CHECK(surface_point(f0, x, t, t) == curve.point(t));
    CHECK(surface_point(f1, x, t, t) == curve.point(t));
  }
  Point y{1, Rational(1, 3), Rational(-1, 2)};
  for (const auto& fixed : probe_parameters(3)) {
    std::vector<Point> line;
    for (const auto& s : probe_parameters(6))
      if (auto p = surface_point(f1, y, s, fixed)) line.push_back(*p);
    REQUIRE(line.size() >= 4);
    CHECK(cocircular({line[0], line[1], line[2], line[3]}));
    CHECK(oracle::cocircular(line));
  }
  auto grid = surface_grid(f1, y, {-1, 1}, {-1, 1}, 5, 7);
  CHECK(grid.nodes.size() == 5);
  CHECK(grid.nodes[0].size() == 7);
  CHECK(grid.diagonal.size() == 7);
  auto e = grid.evaluate(0.5, 0.5);
  auto exact = surface_point(f1, y, Rational(1, 2), Rational(1, 2));
  REQUIRE(e);
  REQUIRE(exact);
  for (int k = 0; k < 3; ++k) CHECK(std::abs((*e)[k] - (*exact)[k].get_d()) < 1e-12);
}

TEST_CASE("second fundamental form test") {
  auto f = villarceau_family(Rational(1, 4), 0, Rational(1, 4));
  auto grid = surface_grid(f, Point{1, Rational(1, 3), Rational(-1, 2)}, {-2, 2}, {-2, 2}, 41, 41);
  auto r = second_fundamental_offdiag(grid, 1e-4);
  CHECK(r.nodes_checked > 1000);
  CHECK(r.max_relative < 1e-6);
  SurfaceFn saddle = [](double u, double v) { return std::optional<PointD>(PointD{u, v, u * u * u - 3 * u * v * v}); };
  CHECK(second_fundamental_offdiag(saddle, grid.s_values, grid.t_values, 1e-4).max_relative > 1e-2);
  SurfaceFn plane = [](double u, double v) { return std::optional<PointD>(PointD{u + v, u - v, 2 * u}); };
  CHECK(second_fundamental_offdiag(plane, grid.s_values, grid.t_values, 1e-4).max_relative < 1e-6);
  // a torus parametrized by curvature lines
  SurfaceFn torus = [](double u, double v) {
    return std::optional<PointD>(PointD{(2 + std::cos(v)) * std::cos(u), (2 + std::cos(v)) * std::sin(u), std::sin(v)});
  };
  CHECK(second_fundamental_offdiag(torus, grid.s_values, grid.t_values, 1e-4).max_relative < 1e-6);
}

TEST_CASE("null points and secant invertibility") {
  auto v = null_point_analysis(motions::villarceau(), 10);
  auto [n1, n2] = villarceau_null_points();
  CHECK(v.n1 == n1);
  CHECK(v.n2 == n2);
  CHECK(is_zero(v.null_n1));
  CHECK(is_zero(v.null_n2));
  CHECK(v.secant.all_singular());
  CHECK(v.tangent_n1.all_singular());
  CHECK(v.tangent_n2.all_singular());
  CHECK(v.secant.samples == 10);

  auto c = null_point_analysis(motions::circular_translation(), 10);
  auto [m1, m2] = circular_translation_null_points();
  CHECK(projectively_equal(c.n1, m1));
  CHECK(projectively_equal(c.n2, m2));
  CHECK(c.secant.all_singular());

  auto id = null_point_analysis(motions::identity(), 10);
  CHECK(id.degenerate);
  CHECK_THROWS_AS(null_point_analysis(SpinorPoly::linear(b("e12")) * SpinorPoly::linear(b("e12") * Rational(2))), Error);
}

TEST_CASE("quasi-elliptic structure of the circular translation") {
  auto q = quasi_elliptic_checks(motions::circular_translation());
  CHECK(q.passed());
  auto c0 = motions::circular_translation()(Rational(0));
  auto coords = planar_image_coordinates(c0);
  REQUIRE(coords);
  CHECK((*coords)[3] == 0);
  CHECK((*coords)[0] == 1);
  CHECK_FALSE(planar_image_coordinates(b("e1+")));
  CHECK_FALSE(quasi_elliptic_checks(motions::villarceau()).passed());
}

TEST_CASE("exponential correspondence") {
  auto r = exp_correspondence({std::numbers::pi / 2, std::numbers::pi / 4, 1.0, 2.0});
  CHECK(r.passed(1e-12));
  CHECK(r.max_exp_vs_trig_literal > 0.1);
  CHECK_FALSE(r.convention.empty());
  // independent: pi/2 gives B- B+ = e123+ = C(0)
  auto bm = to_double(units::b_minus<Rational>()), bp = to_double(units::b_plus<Rational>());
  auto e = oracle::exp_series(bm, std::numbers::pi / 2) * oracle::exp_series(bp, std::numbers::pi / 2);
  CHECK(oracle::max_abs(e - to_double(motions::villarceau()(Rational(0)))) < 1e-12);
  CHECK_THROWS_AS(exp_correspondence({0.0}), Error);
}

}
