#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinorfact/families.hpp"
#include "spinorfact/objects.hpp"

namespace spinorfact {

using Point = Point3<Rational>;
using PointD = Point3<double>;

// ---------------------------------------------------------------------------
// Elementary motions

enum class MotionClass { Rotation, Transversion, Scaling };
const char* to_string(MotionClass c);

struct ElementaryMotionClass {
  MotionClass kind;
  Rational witness;  // h rev(h), h = a^{-1} b
};

/// Classifies the linear spinor polynomial a t + b by the sign of h rev(h).
/// Throws NotInvertible if a is singular, WitnessNotReal if h rev(h) is not
/// a scalar.
ElementaryMotionClass classify_elementary(const MV& a, const MV& b);

// ---------------------------------------------------------------------------
// Trajectories

template <class S>
struct TrajectorySample {
  S t;
  std::optional<Point3<S>> point;  // empty when the sample hits an ideal point
};

struct TrajectoryCurve {
  SpinorPoly motion;
  Point tracked;
  /// C x rev(C) as a polynomial in t with grade-1 coefficients.
  SpinorPoly homogeneous;

  MV at(const Rational& t) const { return homogeneous(t); }
  std::optional<Point> point(const Rational& t) const;
  std::optional<PointD> point(double t) const;
  std::vector<TrajectorySample<Rational>> sample(const std::vector<Rational>& ts) const;
  std::vector<TrajectorySample<double>> sample(const std::vector<double>& ts) const;

  /// Cartesian coordinates as rational functions: numerators of x, y, z and
  /// the common denominator coeff(e-) - coeff(e+).
  std::array<RealPolynomial<Rational>, 4> rational_parametrization() const;
};

TrajectoryCurve trajectory_curve(const SpinorPoly& c, const Point& p);

/// Distinct small rationals 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, ...
std::vector<Rational> probe_parameters(std::size_t count);

/// Trajectory of the center under t - h is projectively constant.
struct RotationCenterReport {
  bool is_rotation = false;
  bool constant = false;
  bool passed() const { return is_rotation && constant; }
};
RotationCenterReport rotation_center_check(const MV& h, const Point& expected_center);

// ---------------------------------------------------------------------------
// Circular translation geometry

/// c1(lambda, mu) = (1 - mu, lambda, 0).
Point crank_center(const Rational& lambda, const Rational& mu);
/// c2(lambda, mu) = (-mu, lambda, 0).
Point coupler_point(const Rational& lambda, const Rational& mu);

/// Whether the trajectory of coupler_point(lambda, mu) under the circular
/// translation equals ((-mu (1+t^2) + 2), (lambda (1+t^2) + 2t), 0) / (1+t^2)
/// as rational functions.
bool coupler_trajectory_matches_formula(const Rational& lambda, const Rational& mu);

struct DistanceReport {
  std::size_t samples = 0;
  std::size_t crank_failures = 0;        // dist^2(c1, c2(t)) != 1
  std::size_t parallelogram_failures = 0;  // squared distances disagree
  bool passed() const { return samples > 0 && crank_failures == 0 && parallelogram_failures == 0; }
};

DistanceReport parallelogram_distance_check(const Rational& lambda1, const Rational& mu1, const Rational& lambda2,
                                            const Rational& mu2, const std::vector<Rational>& ts);

// ---------------------------------------------------------------------------
// Circles

/// Exact: the conformal outer product of the four encoded points vanishes.
bool cocircular(const std::array<Point, 4>& p);
/// Float: |p1 ^ p2 ^ p3 ^ p4| relative to the product of the point norms.
double cocircularity_residual(const std::array<PointD, 4>& p);

struct Circle {
  PointD center;
  PointD normal;
  double radius;
};

/// Circle through three non-collinear points; nullopt when collinear.
std::optional<Circle> circle_through(const PointD& a, const PointD& b, const PointD& c);

/// Orbit circle of p under C from three finite rational samples.
std::optional<Circle> orbit_circle(const SpinorPoly& c, const Point& p);

enum class CircleRelation { Identical, Disjoint, Crossing };
const char* to_string(CircleRelation r);

struct CircleComparison {
  CircleRelation relation;
  double gap;  // separation measure, zero iff the circles meet
};

/// Identical when every probe point of b lies on a within tol; otherwise
/// crossing when the circles come within tol of each other.
CircleComparison compare_circles(const Circle& a, const Circle& b, const std::vector<PointD>& b_probes, double tol);

struct HopfReport {
  std::size_t pairs = 0;
  std::size_t identical = 0;
  std::size_t disjoint = 0;
  std::size_t crossing = 0;
  std::size_t undetermined = 0;  // orbit degenerated to a line or hit infinity
  double min_gap = 0;
  bool passed() const { return pairs > 0 && crossing == 0 && undetermined == 0; }
};

/// For each pair, compares the trajectory circles of the two points under
/// the respective motions; probes of the second circle are taken at ts.
HopfReport hopf_disjointness(const std::vector<std::pair<Point, Point>>& pairs, const std::vector<Rational>& ts,
                             double tol, const SpinorPoly& first_motion, const SpinorPoly& second_motion);
HopfReport hopf_disjointness(const std::vector<std::pair<Point, Point>>& pairs, const std::vector<Rational>& ts,
                             double tol);

// ---------------------------------------------------------------------------
// Trajectory surfaces

/// D_x(s, t) = H1(s) H2(t) x rev(H2(t)) rev(H1(s)) with H1 = s - h1,
/// H2 = t - h2.
template <class S>
Multivector<S> surface_vector(const Multivector<S>& h1, const Multivector<S>& h2, const Multivector<S>& x, const S& s,
                              const S& t) {
  auto g = (Multivector<S>(s) - h1) * (Multivector<S>(t) - h2);
  return sandwich(g, x);
}

std::optional<Point> surface_point(const FactorPair& f, const Point& p, const Rational& s, const Rational& t);

struct SurfaceGrid {
  FactorPair factors;
  Point tracked;
  std::vector<double> s_values;
  std::vector<double> t_values;
  std::vector<std::vector<std::optional<PointD>>> nodes;  // nodes[i][j] = D(s_i, t_j)
  std::vector<std::optional<PointD>> diagonal;            // D(t_j, t_j)
  std::size_t decode_failures = 0;

  std::optional<PointD> evaluate(double s, double t) const;
};

SurfaceGrid surface_grid(const FactorPair& f, const Point& p, std::pair<double, double> s_range,
                         std::pair<double, double> t_range, std::size_t ns, std::size_t nt);

struct SecondFormReport {
  double max_relative = 0;  // max |M| / sqrt(E G) over checked nodes
  std::size_t nodes_checked = 0;
  std::size_t degenerate_skipped = 0;
};

using SurfaceFn = std::function<std::optional<PointD>(double, double)>;

/// Central-difference estimate of the off-diagonal second fundamental
/// coefficient M = n . F_st at the interior nodes of the given grid.
SecondFormReport second_fundamental_offdiag(const SurfaceFn& f, const std::vector<double>& s_values,
                                            const std::vector<double>& t_values, double step);
SecondFormReport second_fundamental_offdiag(const SurfaceGrid& grid, double step);

// ---------------------------------------------------------------------------
// Kinematic image space

using CMV = Multivector<ComplexRational>;

struct LineScan {
  std::string name;
  std::size_t samples = 0;
  std::size_t singular = 0;
  bool all_singular() const { return samples > 0 && singular == samples; }
};

struct NullPointReport {
  bool degenerate = false;
  std::string note;
  CMV n1;
  CMV n2;
  ComplexRational null_n1;
  ComplexRational null_n2;
  MV r1;  // secant direction, R(s) = r1 s + r0
  MV r0;
  CMV tangent1;  // C'(i)
  CMV tangent2;  // C'(-i)
  LineScan secant;
  LineScan tangent_n1;
  LineScan tangent_n2;
};

/// Null points C(+-i), the secant R(s) through them and the two conic
/// tangents C(+-i) + s C'(+-i), each scanned at `samples` rational s for
/// invertibility. Throws OutOfRange unless the norm is a multiple of
/// (t^2+1)^2.
NullPointReport null_point_analysis(const SpinorPoly& c, std::size_t samples = 10, bool scan_tangents = true);

/// Coordinates (x0, x1, x2, x3) of x = x0 + x1 eps i + x2 eps j + x3 k, or
/// nullopt when x is not in that span.
std::optional<std::array<Rational, 4>> planar_image_coordinates(const MV& x);

struct QuasiEllipticReport {
  bool coefficients_in_span = false;
  bool k_component_zero = false;
  bool c_i_is_n1 = false;
  bool c_minus_i_is_n2 = false;
  bool passed() const { return coefficients_in_span && k_component_zero && c_i_is_n1 && c_minus_i_is_n2; }
};

/// n1 = eps i + i eps j, n2 = eps i - i eps j (complex unit i).
std::pair<CMV, CMV> circular_translation_null_points();
std::pair<CMV, CMV> villarceau_null_points();

QuasiEllipticReport quasi_elliptic_checks(const SpinorPoly& c);

// ---------------------------------------------------------------------------
// Exponential form of the Villarceau motion

struct ExpCorrespondenceReport {
  std::size_t samples = 0;
  double max_trig_vs_poly = 0;         // |T(phi) - sin^2(phi) C(-cot phi)|
  double max_exp_vs_trig_half = 0;     // |E(phi) - T(-phi/2)|
  double max_exp_vs_trig_literal = 0;  // |E(phi) - T(phi)|, expected large
  double max_full_exp_vs_trig = 0;     // |exp(B- phi) exp(B+ phi) - T(phi)|
  std::string convention;
  bool passed(double tol) const {
    return samples > 0 && max_trig_vs_poly < tol && max_exp_vs_trig_half < tol && max_full_exp_vs_trig < tol;
  }
};

/// E(phi) = exp(-B- phi/2) exp(-B+ phi/2), T(phi) = (cos + B- sin)(cos + B+ sin).
/// Throws OutOfRange for samples with |sin phi| < 1e-8.
ExpCorrespondenceReport exp_correspondence(const std::vector<double>& phis);

}  // namespace spinorfact
