#include "spinorfact/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "spinorfact/inverse.hpp"
#include "spinorfact/linalg.hpp"

namespace spinorfact {

namespace {

PointD operator-(const PointD& a, const PointD& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
PointD operator+(const PointD& a, const PointD& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
PointD operator*(double s, const PointD& a) { return {s * a[0], s * a[1], s * a[2]}; }
double dot(const PointD& a, const PointD& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
PointD cross(const PointD& a, const PointD& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm(const PointD& a) { return std::sqrt(dot(a, a)); }

PointD to_double(const Point& p) { return {p[0].get_d(), p[1].get_d(), p[2].get_d()}; }

Rational dist2(const Point& a, const Point& b) {
  Rational s = 0;
  for (int k = 0; k < 3; ++k) {
    Rational d = a[k] - b[k];
    s += d * d;
  }
  return s;
}

template <class S>
std::optional<Point3<S>> try_decode(const Multivector<S>& v) {
  try {
    return decode_point(v);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::IdealPoint) throw;
    return std::nullopt;
  }
}

double max_abs_diff(const Multivector<double>& a, const Multivector<double>& b) {
  double m = 0;
  for (unsigned i = 0; i < kBlades; ++i) m = std::max(m, std::abs(a[BladeIndex(i)] - b[BladeIndex(i)]));
  return m;
}

double coefficient_norm(const Multivector<double>& a) {
  double s = 0;
  for (const auto& c : a.coefficients()) s += c * c;
  return std::sqrt(s);
}

}  // namespace

std::vector<Rational> probe_parameters(std::size_t count) {
  std::vector<Rational> out{0};
  for (int n = 1; out.size() < count; ++n) {
    for (Rational q : {Rational(n), Rational(-n), Rational(1, n + 1), Rational(-1, n + 1)}) {
      if (out.size() < count && std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    }
  }
  return out;
}

const char* to_string(MotionClass c) {
  switch (c) {
    case MotionClass::Rotation: return "rotation";
    case MotionClass::Transversion: return "transversion";
    case MotionClass::Scaling: return "scaling";
  }
  return "unknown";
}

ElementaryMotionClass classify_elementary(const MV& a, const MV& b) {
  auto inv = inverse(a);
  if (!inv) throw Error(ErrorKind::NotInvertible, "leading coefficient is not invertible");
  MV h = *inv * b;
  MV w = h * reverse(h);
  if (!w.is_scalar()) throw Error(ErrorKind::WitnessNotReal, "h rev(h) is not real");
  const Rational& s = w.scalar();
  MotionClass kind = s > 0 ? MotionClass::Rotation : (s == 0 ? MotionClass::Transversion : MotionClass::Scaling);
  return {kind, s};
}

// ---------------------------------------------------------------------------

std::optional<Point> TrajectoryCurve::point(const Rational& t) const { return try_decode(at(t)); }

std::optional<PointD> TrajectoryCurve::point(double t) const {
  return try_decode(spinorfact::to_double(homogeneous)(t));
}

std::vector<TrajectorySample<Rational>> TrajectoryCurve::sample(const std::vector<Rational>& ts) const {
  std::vector<TrajectorySample<Rational>> out;
  for (const auto& t : ts) out.push_back({t, point(t)});
  return out;
}

std::vector<TrajectorySample<double>> TrajectoryCurve::sample(const std::vector<double>& ts) const {
  const auto hd = spinorfact::to_double(homogeneous);
  std::vector<TrajectorySample<double>> out;
  for (double t : ts) out.push_back({t, try_decode(hd(t))});
  return out;
}

std::array<RealPolynomial<Rational>, 4> TrajectoryCurve::rational_parametrization() const {
  std::array<std::vector<Rational>, 4> c;
  for (const auto& coeff : homogeneous.coefficients()) {
    c[0].push_back(coeff.at("e1"));
    c[1].push_back(coeff.at("e2"));
    c[2].push_back(coeff.at("e3"));
    c[3].push_back(coeff.at("e-") - coeff.at("e+"));
  }
  return {RealPolynomial<Rational>(c[0]), RealPolynomial<Rational>(c[1]), RealPolynomial<Rational>(c[2]),
          RealPolynomial<Rational>(c[3])};
}

TrajectoryCurve trajectory_curve(const SpinorPoly& c, const Point& p) {
  auto x = encode_point(p);
  return {c, p, c * SpinorPoly({x}) * poly_reverse(c)};
}

RotationCenterReport rotation_center_check(const MV& h, const Point& expected_center) {
  RotationCenterReport r;
  try {
    r.is_rotation = classify_elementary(MV(Rational(1)), -h).kind == MotionClass::Rotation;
  } catch (const Error&) {
    r.is_rotation = false;
  }
  auto curve = trajectory_curve(SpinorPoly::linear(h), expected_center);
  auto x = encode_point(expected_center);
  bool any = false;
  r.constant = true;
  for (const auto& coeff : curve.homogeneous.coefficients()) {
    if (coeff.is_zero()) continue;
    any = true;
    if (!projectively_equal(coeff, x)) r.constant = false;
  }
  r.constant = r.constant && any;
  return r;
}

// ---------------------------------------------------------------------------

Point crank_center(const Rational& lambda, const Rational& mu) { return {Rational(1 - mu), lambda, Rational(0)}; }

Point coupler_point(const Rational& lambda, const Rational& mu) { return {Rational(-mu), lambda, Rational(0)}; }

bool coupler_trajectory_matches_formula(const Rational& lambda, const Rational& mu) {
  using RP = RealPolynomial<Rational>;
  auto curve = trajectory_curve(motions::circular_translation(), coupler_point(lambda, mu));
  auto [x, y, z, w] = curve.rational_parametrization();
  const RP m = t_squared_plus_one();
  const RP x_num = RP{Rational(-mu)} * m + RP{Rational(2)};
  const RP y_num = RP{lambda} * m + RP{Rational(0), Rational(2)};
  return !w.is_zero() && x * m == x_num * w && y * m == y_num * w && z.is_zero();
}

DistanceReport parallelogram_distance_check(const Rational& lambda1, const Rational& mu1, const Rational& lambda2,
                                            const Rational& mu2, const std::vector<Rational>& ts) {
  DistanceReport r;
  const auto c = motions::circular_translation();
  const auto curve1 = trajectory_curve(c, coupler_point(lambda1, mu1));
  const auto curve2 = trajectory_curve(c, coupler_point(lambda2, mu2));
  const Point c1a = crank_center(lambda1, mu1);
  const Point c1b = crank_center(lambda2, mu2);
  const Rational dl = lambda1 - lambda2;
  const Rational dm = mu1 - mu2;
  const Rational expected = dl * dl + dm * dm;
  for (const auto& t : ts) {
    ++r.samples;
    auto c2a = curve1.point(t);
    auto c2b = curve2.point(t);
    if (!c2a || !c2b) {
      ++r.crank_failures;
      continue;
    }
    if (dist2(c1a, *c2a) != 1 || dist2(c1b, *c2b) != 1) ++r.crank_failures;
    if (dist2(c1a, c1b) != expected || dist2(*c2a, *c2b) != expected) ++r.parallelogram_failures;
  }
  return r;
}

// ---------------------------------------------------------------------------

bool cocircular(const std::array<Point, 4>& p) {
  auto w = outer_product(outer_product(outer_product(encode_point(p[0]), encode_point(p[1])), encode_point(p[2])),
                         encode_point(p[3]));
  return w.is_zero();
}

double cocircularity_residual(const std::array<PointD, 4>& p) {
  std::array<Multivector<double>, 4> v;
  double scale = 1;
  for (int k = 0; k < 4; ++k) {
    v[k] = encode_point(p[k]);
    scale *= coefficient_norm(v[k]);
  }
  auto w = outer_product(outer_product(outer_product(v[0], v[1]), v[2]), v[3]);
  return coefficient_norm(w) / scale;
}

std::optional<Circle> circle_through(const PointD& a, const PointD& b, const PointD& c) {
  const PointD u = b - a;
  const PointD v = c - a;
  const PointD w = cross(u, v);
  const double w2 = dot(w, w);
  if (w2 <= 1e-24 * dot(u, u) * dot(v, v)) return std::nullopt;
  const PointD offset = (1.0 / (2.0 * w2)) * (dot(u, u) * cross(v, w) + dot(v, v) * cross(w, u));
  const PointD center = a + offset;
  return Circle{center, (1.0 / std::sqrt(w2)) * w, norm(offset)};
}

std::optional<Circle> orbit_circle(const SpinorPoly& c, const Point& p) {
  const auto curve = trajectory_curve(c, p);
  std::vector<PointD> pts;
  for (const auto& t : probe_parameters(12)) {
    auto q = curve.point(t);
    if (!q) continue;
    PointD d = to_double(*q);
    bool distinct = std::none_of(pts.begin(), pts.end(), [&](const PointD& e) { return norm(e - d) < 1e-9; });
    if (distinct) pts.push_back(d);
    if (pts.size() == 3) break;
  }
  if (pts.size() < 3) return std::nullopt;
  return circle_through(pts[0], pts[1], pts[2]);
}

const char* to_string(CircleRelation r) {
  switch (r) {
    case CircleRelation::Identical: return "identical";
    case CircleRelation::Disjoint: return "disjoint";
    case CircleRelation::Crossing: return "crossing";
  }
  return "unknown";
}

namespace {

double distance_to_circle(const Circle& c, const PointD& q) {
  const PointD d = q - c.center;
  const double z = dot(d, c.normal);
  const double rho = norm(d - z * c.normal);
  return std::hypot(z, rho - c.radius);
}

}  // namespace

CircleComparison compare_circles(const Circle& a, const Circle& b, const std::vector<PointD>& b_probes, double tol) {
  if (b_probes.size() >= 3 &&
      std::all_of(b_probes.begin(), b_probes.end(), [&](const PointD& q) { return distance_to_circle(a, q) < tol; }))
    return {CircleRelation::Identical, 0.0};

  // Orthonormal frame (u, v) in the plane of a.
  PointD helper = std::abs(a.normal[0]) < 0.9 ? PointD{1, 0, 0} : PointD{0, 1, 0};
  PointD u = cross(a.normal, helper);
  u = (1.0 / norm(u)) * u;
  const PointD v = cross(a.normal, u);

  const double alpha = a.radius * dot(u, b.normal);
  const double beta = a.radius * dot(v, b.normal);
  const double gamma = dot(a.center - b.center, b.normal);
  const double rho = std::hypot(alpha, beta);

  double gap;
  if (rho < 1e-15) {
    if (std::abs(gamma) > tol) {
      gap = std::abs(gamma);
    } else {
      const double d = norm(a.center - b.center);
      gap = std::max({d - (a.radius + b.radius), std::abs(a.radius - b.radius) - d, 0.0});
    }
  } else if (std::abs(gamma) > rho) {
    gap = std::abs(gamma) - rho;
  } else {
    // Points of a in the plane of b; their in-plane distance to b.
    const double theta0 = std::atan2(beta, alpha);
    const double delta = std::acos(std::clamp(-gamma / rho, -1.0, 1.0));
    gap = std::numeric_limits<double>::infinity();
    for (double theta : {theta0 + delta, theta0 - delta}) {
      const PointD x = a.center + a.radius * (std::cos(theta) * u + std::sin(theta) * v);
      gap = std::min(gap, std::abs(norm(x - b.center) - b.radius));
    }
  }
  return {gap < tol ? CircleRelation::Crossing : CircleRelation::Disjoint, gap};
}

HopfReport hopf_disjointness(const std::vector<std::pair<Point, Point>>& pairs, const std::vector<Rational>& ts,
                             double tol, const SpinorPoly& first_motion, const SpinorPoly& second_motion) {
  HopfReport r;
  r.min_gap = std::numeric_limits<double>::infinity();
  for (const auto& [p, q] : pairs) {
    ++r.pairs;
    auto a = orbit_circle(first_motion, p);
    auto b = orbit_circle(second_motion, q);
    std::vector<PointD> probes;
    for (const auto& s : trajectory_curve(second_motion, q).sample(ts))
      if (s.point) probes.push_back(to_double(*s.point));
    if (!a || !b || probes.size() < 3) {
      ++r.undetermined;
      continue;
    }
    auto cmp = compare_circles(*a, *b, probes, tol);
    switch (cmp.relation) {
      case CircleRelation::Identical: ++r.identical; break;
      case CircleRelation::Disjoint: ++r.disjoint; break;
      case CircleRelation::Crossing: ++r.crossing; break;
    }
    if (cmp.relation != CircleRelation::Identical) r.min_gap = std::min(r.min_gap, cmp.gap);
  }
  return r;
}

HopfReport hopf_disjointness(const std::vector<std::pair<Point, Point>>& pairs, const std::vector<Rational>& ts,
                             double tol) {
  const auto c = motions::villarceau();
  return hopf_disjointness(pairs, ts, tol, c, c);
}

// ---------------------------------------------------------------------------

std::optional<Point> surface_point(const FactorPair& f, const Point& p, const Rational& s, const Rational& t) {
  return try_decode(surface_vector(f.h1, f.h2, encode_point(p), s, t));
}

std::optional<PointD> SurfaceGrid::evaluate(double s, double t) const {
  return try_decode(surface_vector(spinorfact::to_double(factors.h1), spinorfact::to_double(factors.h2),
                                   encode_point(to_double(tracked)), s, t));
}

namespace {
std::vector<double> linspace(std::pair<double, double> range, std::size_t n) {
  std::vector<double> v;
  for (std::size_t k = 0; k < n; ++k)
    v.push_back(n == 1 ? range.first : range.first + (range.second - range.first) * double(k) / double(n - 1));
  return v;
}
}  // namespace

SurfaceGrid surface_grid(const FactorPair& f, const Point& p, std::pair<double, double> s_range,
                         std::pair<double, double> t_range, std::size_t ns, std::size_t nt) {
  SurfaceGrid g{f, p, linspace(s_range, ns), linspace(t_range, nt), {}, {}, 0};
  const auto h1 = spinorfact::to_double(f.h1);
  const auto h2 = spinorfact::to_double(f.h2);
  const auto x = encode_point(to_double(p));
  for (double s : g.s_values) {
    auto& row = g.nodes.emplace_back();
    for (double t : g.t_values) {
      auto q = try_decode(surface_vector(h1, h2, x, s, t));
      if (!q) ++g.decode_failures;
      row.push_back(q);
    }
  }
  for (double t : g.t_values) {
    auto q = try_decode(surface_vector(h1, h2, x, t, t));
    if (!q) ++g.decode_failures;
    g.diagonal.push_back(q);
  }
  return g;
}

SecondFormReport second_fundamental_offdiag(const SurfaceFn& f, const std::vector<double>& s_values,
                                            const std::vector<double>& t_values, double step) {
  SecondFormReport r;
  const double h = step;
  for (std::size_t i = 1; i + 1 < s_values.size(); ++i) {
    for (std::size_t j = 1; j + 1 < t_values.size(); ++j) {
      const double s = s_values[i];
      const double t = t_values[j];
      auto pp = f(s + h, t + h), pm = f(s + h, t - h), mp = f(s - h, t + h), mm = f(s - h, t - h);
      auto sp = f(s + h, t), sm = f(s - h, t), tp = f(s, t + h), tm = f(s, t - h);
      if (!pp || !pm || !mp || !mm || !sp || !sm || !tp || !tm) {
        ++r.degenerate_skipped;
        continue;
      }
      const PointD fs = (0.5 / h) * (*sp - *sm);
      const PointD ft = (0.5 / h) * (*tp - *tm);
      const PointD fst = (0.25 / (h * h)) * ((*pp - *pm) - (*mp - *mm));
      const PointD n = cross(fs, ft);
      const double scale = norm(fs) * norm(ft);
      if (norm(n) <= 1e-12 * scale || scale == 0) {
        ++r.degenerate_skipped;
        continue;
      }
      const double m = dot((1.0 / norm(n)) * n, fst);
      r.max_relative = std::max(r.max_relative, std::abs(m) / std::sqrt(scale));
      ++r.nodes_checked;
    }
  }
  return r;
}

SecondFormReport second_fundamental_offdiag(const SurfaceGrid& grid, double step) {
  const auto h1 = spinorfact::to_double(grid.factors.h1);
  const auto h2 = spinorfact::to_double(grid.factors.h2);
  const auto x = encode_point(to_double(grid.tracked));
  SurfaceFn f = [&](double s, double t) { return try_decode(surface_vector(h1, h2, x, s, t)); };
  return second_fundamental_offdiag(f, grid.s_values, grid.t_values, step);
}

// ---------------------------------------------------------------------------

std::optional<std::array<Rational, 4>> planar_image_coordinates(const MV& x) {
  const auto eps = units::epsilon();
  const std::array<MV, 4> basis = {MV(Rational(1)), eps * units::i(), eps * units::j(), units::k()};
  linalg::Matrix<Rational> a(kBlades, std::vector<Rational>(4));
  std::vector<Rational> b(kBlades);
  for (unsigned i = 0; i < kBlades; ++i) {
    for (int k = 0; k < 4; ++k) a[i][k] = basis[k][BladeIndex(i)];
    b[i] = x[BladeIndex(i)];
  }
  auto sol = linalg::solve(a, b, 4);
  if (!sol) return std::nullopt;
  return std::array<Rational, 4>{sol->particular[0], sol->particular[1], sol->particular[2], sol->particular[3]};
}

std::pair<CMV, CMV> circular_translation_null_points() {
  const auto ei = complexify(units::epsilon() * units::i());
  const auto ej = complexify(units::epsilon() * units::j());
  const auto iu = ComplexRational::unit();
  return {ei + ej * iu, ei - ej * iu};
}

std::pair<CMV, CMV> villarceau_null_points() {
  const auto base = complexify(MV::blade("e123+") - MV(Rational(1)));
  const auto b = complexify(units::b_minus() + units::b_plus());
  const auto iu = ComplexRational::unit();
  return {base - b * iu, base + b * iu};
}

QuasiEllipticReport quasi_elliptic_checks(const SpinorPoly& c) {
  QuasiEllipticReport r;
  r.coefficients_in_span = true;
  r.k_component_zero = true;
  for (const auto& coeff : c.coefficients()) {
    auto x = planar_image_coordinates(coeff);
    if (!x) {
      r.coefficients_in_span = false;
      r.k_component_zero = false;
      continue;
    }
    if ((*x)[3] != 0) r.k_component_zero = false;
  }
  auto [n1, n2] = circular_translation_null_points();
  const auto iu = ComplexRational::unit();
  r.c_i_is_n1 = projectively_equal(evaluate_complex(c, iu), n1);
  r.c_minus_i_is_n2 = projectively_equal(evaluate_complex(c, -iu), n2);
  return r;
}

NullPointReport null_point_analysis(const SpinorPoly& c, std::size_t samples, bool scan_tangents) {
  using RP = RealPolynomial<Rational>;
  const RP m = t_squared_plus_one();
  const RP norm_c = norm_poly(c);
  if (!(norm_c == norm_c.leading() * (m * m)))
    throw Error(ErrorKind::OutOfRange, "norm polynomial is not a multiple of (t^2+1)^2");

  NullPointReport r;
  const auto iu = ComplexRational::unit();
  r.n1 = evaluate_complex(c, iu);
  r.n2 = evaluate_complex(c, -iu);
  r.null_n1 = null_value(r.n1);
  r.null_n2 = null_value(r.n2);
  auto dm = divmod_real(c, m);
  r.r1 = dm.remainder[1];
  r.r0 = dm.remainder[0];
  if (r.n1.is_zero() || r.n2.is_zero() || r.r1.is_zero()) {
    r.degenerate = true;
    r.note = "C(i) and C(-i) do not span a line: no null points of interest";
    return r;
  }
  const auto dc = derivative(c);
  r.tangent1 = evaluate_complex(dc, iu);
  r.tangent2 = evaluate_complex(dc, -iu);

  const auto params = probe_parameters(samples);
  r.secant.name = "secant";
  for (const auto& s : params) {
    ++r.secant.samples;
    if (!is_invertible(MV(r.r1 * s + r.r0))) ++r.secant.singular;
  }
  if (scan_tangents) {
    r.tangent_n1.name = "tangent at n1";
    r.tangent_n2.name = "tangent at n2";
    for (const auto& s : params) {
      const ComplexRational cs(s);
      ++r.tangent_n1.samples;
      ++r.tangent_n2.samples;
      if (!is_invertible(CMV(r.n1 + r.tangent1 * cs))) ++r.tangent_n1.singular;
      if (!is_invertible(CMV(r.n2 + r.tangent2 * cs))) ++r.tangent_n2.singular;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

ExpCorrespondenceReport exp_correspondence(const std::vector<double>& phis) {
  using MD = Multivector<double>;
  const MD bm = spinorfact::to_double(units::b_minus());
  const MD bp = spinorfact::to_double(units::b_plus());
  const auto cd = spinorfact::to_double(motions::villarceau());
  auto trig = [&](double a) { return (MD(std::cos(a)) + bm * std::sin(a)) * (MD(std::cos(a)) + bp * std::sin(a)); };

  ExpCorrespondenceReport r;
  r.convention =
      "exp(-B- phi/2) exp(-B+ phi/2) = (cos psi + B- sin psi)(cos psi + B+ sin psi) with psi = -phi/2, "
      "i.e. t = -cot(psi) = cot(phi/2); the full-angle product form equals exp(B- phi) exp(B+ phi) "
      "and sin^2(phi) C(-cot phi)";
  for (double phi : phis) {
    const double sn = std::sin(phi);
    if (std::abs(sn) < 1e-8) throw Error(ErrorKind::OutOfRange, "phi too close to a zero of sin");
    ++r.samples;
    const MD t_phi = trig(phi);
    const MD poly = cd(-std::cos(phi) / sn) * (sn * sn);
    const MD e_half = exp_bivector(MD(-bm), phi / 2) * exp_bivector(MD(-bp), phi / 2);
    const MD e_full = exp_bivector(bm, phi) * exp_bivector(bp, phi);
    r.max_trig_vs_poly = std::max(r.max_trig_vs_poly, max_abs_diff(t_phi, poly));
    r.max_exp_vs_trig_half = std::max(r.max_exp_vs_trig_half, max_abs_diff(e_half, trig(-phi / 2)));
    r.max_exp_vs_trig_literal = std::max(r.max_exp_vs_trig_literal, max_abs_diff(e_half, t_phi));
    r.max_full_exp_vs_trig = std::max(r.max_full_exp_vs_trig, max_abs_diff(e_full, t_phi));
  }
  return r;
}

}  // namespace spinorfact
