// spinorfact command-line interface.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "spinorfact/inverse.hpp"
#include "spinorfact/suites.hpp"

namespace fs = std::filesystem;
using namespace spinorfact;
using io::Json;

namespace {

RealPolynomial<Rational> norm_root(const SpinorPoly& c) {
  auto m = monic_square_root(norm_poly(c));
  if (!m) throw Error(ErrorKind::NormNotSquare, "norm polynomial is not the square of a real polynomial");
  return *m;
}

constexpr int kPass = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsage = 2;

struct Globals {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  std::string field = "rational";
};

Config load_config(const Globals& g) {
  Config c;
  if (!g.config_path.empty()) {
    Json j;
    try {
      j = Json::parse(io::read_file(g.config_path));
    } catch (const Json::parse_error& e) {
      throw Error(ErrorKind::Parse, "config: " + std::string(e.what()));
    }
    c = Config::from_json(j, c);
  }
  if (g.seed) c.seed = *g.seed;
  if (!g.out_dir.empty()) c.out_dir = g.out_dir;
  c.validate();
  return c;
}

void require_rational(const Globals& g, const std::string& command) {
  if (g.field != "rational")
    throw Error(ErrorKind::InexactField, command + " runs in exact arithmetic only; use --field rational");
}

void emit(const Json& j, const fs::path& path) {
  const std::string text = j.dump(2) + "\n";
  io::write_file_atomic(path, text);
  std::cout << text;
}

fs::path out_path(const Config& c, const std::string& name) {
  fs::create_directories(c.out_dir);
  return fs::path(c.out_dir) / name;
}

/// Named family of a flagship motion, matched by exact coefficient equality.
std::optional<FactorizationFamily> named_family(const SpinorPoly& c) {
  if (c == motions::circular_translation()) return circular_translation_factorizations();
  if (c == motions::villarceau()) return villarceau_factorizations();
  return std::nullopt;
}

/// Factors of a motion for surface sampling: the named family at params, or
/// the unique factorization of a generic input.
FactorPair surface_factors(const SpinorPoly& c, const std::vector<Rational>& params) {
  if (auto fam = named_family(c)) return fam->at(params);
  auto d = divmod_real(c, norm_root(c));
  MV h2 = generic_right_zero(d.remainder);
  auto left = extract_right_factor(c, h2);
  return {-left[0], h2};
}

std::string pt(const Point& p) {
  return to_string(p[0]) + "," + to_string(p[1]) + "," + to_string(p[2]);
}

int cmd_verify(const Globals& g, const std::string& suite) {
  require_rational(g, "verify");
  Config c = load_config(g);
  Report r = run_suite(suite, c);
  io::write_file_atomic(out_path(c, "report-" + suite + ".json"), r.to_json().dump(2) + "\n");
  for (const auto& ch : r.checks)
    std::cout << (ch.passed ? "PASS " : "FAIL ") << ch.id << "  [" << ch.provenance << "] " << ch.residual << "\n";
  std::cout << (r.passed() ? "suite " + suite + ": all checks passed\n" : "suite " + suite + ": FAILURES\n");
  return r.passed() ? kPass : kCheckFailure;
}

int cmd_factor(const Globals& g, const std::string& input) {
  require_rational(g, "factor");
  Config c = load_config(g);
  SpinorPoly poly = io::load_motion(input);
  if (poly.degree() != 2) throw Error(ErrorKind::OutOfRange, "factor expects a quadratic spinor polynomial");
  auto m = norm_root(poly);
  auto d = divmod_real(poly, m);

  Json j;
  j["input"] = io::to_json(poly);
  j["norm_root"] = io::to_json(m);
  j["remainder"] = io::to_json(d.remainder);
  if (is_invertible(d.remainder[1])) {
    MV h2 = generic_right_zero(d.remainder);
    auto left = extract_right_factor(poly, h2);
    MV h1 = -left[0];
    auto rep = verify_factorization(poly, h1, h2);
    j["case"] = "generic";
    j["factorizations"] = Json::array({{{"h1", io::to_json(h1)},
                                        {"h2", io::to_json(h2)},
                                        {"product_ok", rep.product_ok},
                                        {"spinor_ok", rep.spinor_ok}}});
  } else {
    auto cs = build_constraint_system(poly);
    auto v = solve_variety(cs);
    j["case"] = "singular_remainder";
    j["constraints"] = io::to_json(cs);
    j["variety"] = io::to_json(v);
    if (auto fam = named_family(poly)) {
      j["family"] = {{"name", to_string(fam->id)},
                     {"parameters", fam->parameters},
                     {"domain", fam->domain == ParameterDomain::Sphere ? "sphere" : "affine-plane"}};
    }
  }
  emit(j, out_path(c, "factor.json"));
  return kPass;
}

int cmd_family(const Globals& g, const std::string& name, const std::string& params_text) {
  require_rational(g, "family");
  Config c = load_config(g);
  auto fam = named_family(io::motion_by_name(name));
  if (!fam) throw Error(ErrorKind::Parse, "no factorization family for motion '" + name + "'");
  auto params = io::parse_rationals(params_text);
  Json j = io::family_to_json(*fam, params);
  emit(j, out_path(c, "family.json"));
  const auto& v = j["verification"];
  return v["product_ok"].get<bool>() && v["spinor_ok"].get<bool>() ? kPass : kCheckFailure;
}

std::pair<double, double> parse_range(const std::string& text) {
  auto r = io::parse_rationals(text);
  if (r.size() != 2 || !(r[0] < r[1])) throw Error(ErrorKind::Parse, "range must be 'lo,hi' with lo < hi");
  return {r[0].get_d(), r[1].get_d()};
}

int cmd_trajectory(const Globals& g, const std::string& motion, const std::string& point_text, std::size_t samples,
                   const std::string& range_text) {
  Config c = load_config(g);
  if (samples < 2) throw Error(ErrorKind::Parse, "need at least 2 samples");
  auto poly = io::load_motion(motion);
  Point p = io::parse_point(point_text);
  auto curve = trajectory_curve(poly, p);
  auto [lo, hi] = parse_range(range_text);
  auto exact_range = io::parse_rationals(range_text);

  std::vector<std::pair<std::string, std::optional<PointD>>> rows;
  std::size_t ideal = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    std::optional<PointD> q;
    std::string label;
    if (g.field == "rational") {
      Rational t = exact_range[0] + (exact_range[1] - exact_range[0]) * Rational(k) / Rational(samples - 1);
      if (auto e = curve.point(t)) q = PointD{e->at(0).get_d(), e->at(1).get_d(), e->at(2).get_d()};
      label = to_string(t);
    } else {
      double t = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(samples - 1);
      q = curve.point(t);
      label = to_string(t);
    }
    if (!q) {
      ++ideal;
      std::cerr << "warning: t=" << label << " maps to the ideal point\n";
    }
    rows.emplace_back(label, q);
  }

  // Exact circle test on 8 finite rational probes.
  std::vector<Point> probes;
  for (const auto& t : probe_parameters(32)) {
    if (probes.size() == 8) break;
    if (auto e = curve.point(t)) probes.push_back(*e);
  }
  std::size_t quads = 0, failed = 0;
  for (std::size_t a = 0; a < probes.size(); ++a)
    for (std::size_t b = a + 1; b < probes.size(); ++b)
      for (std::size_t d = b + 1; d < probes.size(); ++d)
        for (std::size_t e = d + 1; e < probes.size(); ++e) {
          ++quads;
          if (!cocircular({probes[a], probes[b], probes[d], probes[e]})) ++failed;
        }

  std::vector<std::string> meta = {"motion " + motion, "point " + pt(p), "field " + g.field,
                                   "samples " + std::to_string(samples), "ideal " + std::to_string(ideal),
                                   "cocircular_quadruples " + std::to_string(quads - failed) + "/" + std::to_string(quads)};
  auto path = out_path(c, "trajectory.csv");
  io::write_file_atomic(path, io::trajectory_csv(rows, meta));
  std::cout << "wrote " << path.string() << " (" << samples - ideal << " finite samples)\n";
  std::cout << "cocircularity: " << quads - failed << "/" << quads << " quadruples of " << probes.size()
            << " probe samples [exact]\n";
  if (ideal == samples) return kUsage;
  return failed == 0 ? kPass : kCheckFailure;
}

int cmd_surface(const Globals& g, const std::string& motion, const std::string& params_text,
                const std::string& point_text, std::size_t grid, const std::string& range_text) {
  Config c = load_config(g);
  if (grid < 3) throw Error(ErrorKind::Parse, "grid must be at least 3");
  auto poly = io::load_motion(motion);
  auto f = surface_factors(poly, params_text.empty() ? std::vector<Rational>{} : io::parse_rationals(params_text));
  Point p = io::parse_point(point_text);
  auto range = parse_range(range_text);
  auto sg = surface_grid(f, p, range, range, grid, grid);

  // Exact parameter-line test at rational s (and t) values.
  const auto ps = probe_parameters(6);
  std::size_t lines = 0, circle_lines = 0;
  for (const auto& fixed : probe_parameters(3)) {
    for (int dir = 0; dir < 2; ++dir) {
      std::vector<Point> pts;
      for (const auto& u : ps)
        if (auto q = dir == 0 ? surface_point(f, p, u, fixed) : surface_point(f, p, fixed, u)) pts.push_back(*q);
      if (pts.size() < 4) continue;
      ++lines;
      bool ok = true;
      for (std::size_t k = 3; k < pts.size(); ++k) ok = ok && cocircular({pts[0], pts[1], pts[2], pts[k]});
      if (ok) ++circle_lines;
    }
  }
  auto sf = second_fundamental_offdiag(sg, c.fd_step);
  bool sf_ok = sf.nodes_checked > 0 && sf.max_relative < c.second_form_tol;

  std::vector<std::string> meta = {"motion " + motion, "point " + pt(p), "grid " + std::to_string(grid),
                                   "h1 " + io::to_json(f.h1).dump(), "h2 " + io::to_json(f.h2).dump()};
  auto obj = out_path(c, "surface.obj");
  io::write_file_atomic(obj, io::surface_obj(sg, meta));
  io::write_file_atomic(out_path(c, "surface.csv"), io::surface_csv(sg, meta));
  Json summary = {{"parameter_lines", {{"tested", lines}, {"circles", circle_lines}, {"provenance", "exact"}}},
                  {"second_form",
                   {{"max_relative_offdiag", sf.max_relative},
                    {"nodes", sf.nodes_checked},
                    {"skipped", sf.degenerate_skipped},
                    {"tolerance", c.second_form_tol},
                    {"step", c.fd_step},
                    {"passed", sf_ok}}},
                  {"decode_failures", sg.decode_failures}};
  emit(summary, out_path(c, "surface-checks.json"));
  return (lines > 0 && circle_lines == lines && sf_ok) ? kPass : kCheckFailure;
}

int cmd_nullpoints(const Globals& g, const std::string& motion, std::size_t samples) {
  require_rational(g, "nullpoints");
  Config c = load_config(g);
  auto r = null_point_analysis(io::load_motion(motion), samples);
  emit(io::to_json(r), out_path(c, "nullpoints.json"));
  return kPass;
}

MV parse_mv_arg(const std::string& text) {
  Json j;
  try {
    j = Json::parse(fs::exists(text) ? io::read_file(text) : text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("multivector: ") + e.what());
  }
  return io::multivector_from_json<Rational>(j);
}

int cmd_classify(const Globals& g, const std::string& a, const std::string& b) {
  require_rational(g, "classify");
  auto r = classify_elementary(parse_mv_arg(a), parse_mv_arg(b));
  std::cout << Json{{"class", to_string(r.kind)}, {"witness", to_string(r.witness)}}.dump(2) << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact CGA spinor polynomial factorization and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::uint64_t seed = 0;
  app.add_option("--config", g.config_path, "JSON config file");
  auto* seed_opt = app.add_option("--seed", seed, "random seed");
  app.add_option("--out", g.out_dir, "output directory");
  app.add_option("--field", g.field, "scalar field")->check(CLI::IsMember({"rational", "float"}));

  std::string suite, input, name, params, point = "1,0,0", range = "-10,10", sphere_point, a, b;
  std::size_t samples = 256, grid = 41, null_samples = 10;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));

  auto* factor = app.add_subcommand("factor", "factor a quadratic spinor polynomial");
  factor->add_option("input", input, "motion name or polynomial JSON file")->required();

  auto* family = app.add_subcommand("family", "evaluate a factorization family");
  family->add_option("motion", name)->required();
  family->add_option("--params", params, "comma-separated rationals")->required();

  auto* trajectory = app.add_subcommand("trajectory", "sample a trajectory to CSV");
  trajectory->add_option("motion", name)->required();
  trajectory->add_option("--point", point);
  trajectory->add_option("--samples", samples);
  trajectory->add_option("--range", range, "parameter range lo,hi");

  auto* surface = app.add_subcommand("surface", "sample a trajectory surface to OBJ/CSV");
  surface->add_option("motion", name)->required();
  auto* sp = surface->add_option("--sphere-point", sphere_point, "Villarceau family parameters x,y,z");
  surface->add_option("--params", params, "family parameters")->excludes(sp);
  surface->add_option("--point", point);
  surface->add_option("--grid", grid);
  surface->add_option("--range", range, "s and t range lo,hi");

  auto* nullpoints = app.add_subcommand("nullpoints", "null points and line invertibility");
  nullpoints->add_option("motion", name)->required();
  nullpoints->add_option("--samples", null_samples);

  auto* classify = app.add_subcommand("classify", "classify the linear spinor polynomial a t + b");
  classify->add_option("a", a, "multivector JSON or file")->required();
  classify->add_option("b", b, "multivector JSON or file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }
  if (*seed_opt) g.seed = seed;
  if (surface->parsed() && range == "-10,10") range = "-2,2";

  try {
    if (verify->parsed()) return cmd_verify(g, suite);
    if (factor->parsed()) return cmd_factor(g, input);
    if (family->parsed()) return cmd_family(g, name, params);
    if (trajectory->parsed()) return cmd_trajectory(g, name, point, samples, range);
    if (surface->parsed()) return cmd_surface(g, name, sphere_point.empty() ? params : sphere_point, point, grid, range);
    if (nullpoints->parsed()) return cmd_nullpoints(g, name, null_samples);
    if (classify->parsed()) return cmd_classify(g, a, b);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
