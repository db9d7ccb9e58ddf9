#include "spinorfact/io.hpp"

#include <fstream>
#include <sstream>
#include <unistd.h>

namespace spinorfact::io {

Json to_json(const RealPolynomial<Rational>& p) {
  Json j = Json::array();
  for (const auto& c : p.coefficients()) j.push_back(spinorfact::to_string(c));
  return j;
}

Json to_json(const MPoly& p, const std::vector<std::string>& names) {
  Json j;
  j["text"] = p.to_string(names);
  j["degree"] = p.degree();
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json exps = Json::object();
    for (std::size_t k = 0; k < MPoly::kMaxVariables; ++k)
      if (it->first[k] != 0) exps[k < names.size() ? names[k] : "x" + std::to_string(k)] = int(it->first[k]);
    terms.push_back({{"monomial", exps}, {"coefficient", spinorfact::to_string(it->second)}});
  }
  j["terms"] = terms;
  return j;
}

Json family_to_json(const FactorizationFamily& family, const std::vector<Rational>& params) {
  auto pair = family.at(params);
  auto report = verify_factorization(family.motion, pair.h1, pair.h2);
  Json j;
  j["family"] = to_string(family.id);
  Json p = Json::object();
  for (std::size_t k = 0; k < params.size(); ++k) p[family.parameters[k]] = spinorfact::to_string(params[k]);
  j["params"] = p;
  j["h1"] = to_json(pair.h1);
  j["h2"] = to_json(pair.h2);
  j["verification"] = {{"product_ok", report.product_ok},
                       {"spinor_ok", report.spinor_ok},
                       {"commutator_zero", report.commutator_zero}};
  return j;
}

FamilyRecord family_from_json(const Json& j) {
  FamilyRecord r;
  r.family = j.at("family").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) r.params.push_back(parse_scalar<Rational>(v.get<std::string>()));
  r.h1 = multivector_from_json<Rational>(j.at("h1"));
  r.h2 = multivector_from_json<Rational>(j.at("h2"));
  const auto& v = j.at("verification");
  r.product_ok = v.at("product_ok").get<bool>();
  r.spinor_ok = v.at("spinor_ok").get<bool>();
  r.commutator_zero = v.at("commutator_zero").get<bool>();
  return r;
}

Json to_json(const ConstraintSystem& cs) {
  const auto names = unknown_names();
  Json j;
  j["motion"] = to_json(cs.motion);
  j["m"] = to_json(cs.m);
  j["remainder"] = to_json(cs.remainder);
  j["counts"] = {{"linear", cs.linear.size()},
                 {"quadratic", cs.quadratic.size()},
                 {"raw_components", cs.raw_equations},
                 {"zero_dropped", cs.zero_dropped},
                 {"duplicates_merged", cs.duplicates_merged}};
  auto dump = [&](const std::vector<Equation>& eqs) {
    Json arr = Json::array();
    for (const auto& e : eqs) {
      Json item = to_json(e.poly, names);
      item["source"] = to_string(e.source);
      item["blade"] = e.blade;
      arr.push_back(std::move(item));
    }
    return arr;
  };
  j["linear"] = dump(cs.linear);
  j["quadratic"] = dump(cs.quadratic);
  Json comps = Json::array();
  for (const auto& c : cs.components) {
    Json item = {{"source", to_string(c.source)}, {"blade", c.blade}, {"degree", c.degree}};
    if (c.representative >= 0) {
      item["merged_into"] = std::string(c.degree <= 1 ? "linear" : "quadratic") + "[" + std::to_string(c.representative) + "]";
      item["scale"] = spinorfact::to_string(c.scale);
    }
    comps.push_back(std::move(item));
  }
  j["components"] = comps;
  return j;
}

Json to_json(const LinearSolution& lin) {
  Json j;
  j["dimension"] = lin.dimension();
  j["particular"] = to_json(lin.particular);
  Json basis = Json::object();
  for (std::size_t k = 0; k < lin.basis.size(); ++k) basis[lin.parameters[k]] = to_json(lin.basis[k]);
  j["basis"] = basis;
  return j;
}

Json to_json(const Variety& v) {
  Json j;
  j["affine"] = to_json(v.affine);
  Json res = Json::array();
  for (const auto& r : v.residuals) res.push_back(to_json(r, v.affine.parameters));
  j["residuals"] = res;
  j["closure_rounds"] = v.closure_rounds;
  return j;
}

Json to_json(const NullPointReport& r) {
  Json j;
  j["degenerate"] = r.degenerate;
  if (!r.note.empty()) j["note"] = r.note;
  j["n1"] = to_json(r.n1);
  j["n2"] = to_json(r.n2);
  j["null_value_n1"] = spinorfact::to_string(r.null_n1);
  j["null_value_n2"] = spinorfact::to_string(r.null_n2);
  if (r.degenerate) return j;
  j["secant"] = {{"parametrization", "r1 s + r0"}, {"r1", to_json(r.r1)}, {"r0", to_json(r.r0)}};
  j["tangents"] = {{"n1", {{"parametrization", "n1 + s C'(i)"}, {"direction", to_json(r.tangent1)}}},
                   {"n2", {{"parametrization", "n2 + s C'(-i)"}, {"direction", to_json(r.tangent2)}}}};
  Json scans = Json::array();
  for (const auto* s : {&r.secant, &r.tangent_n1, &r.tangent_n2}) {
    if (s->samples == 0) continue;
    scans.push_back({{"line", s->name}, {"samples", s->samples}, {"singular", s->singular}, {"all_singular", s->all_singular()}});
  }
  j["scans"] = scans;
  return j;
}

SpinorPoly motion_by_name(const std::string& name) {
  if (name == "circular-translation" || name == "circular") return motions::circular_translation();
  if (name == "villarceau") return motions::villarceau();
  if (name == "identity") return motions::identity();
  throw Error(ErrorKind::Parse, "unknown motion '" + name + "'");
}

SpinorPoly load_motion(const std::string& name_or_path) {
  if (std::filesystem::exists(name_or_path)) {
    Json j;
    try {
      j = Json::parse(read_file(name_or_path));
    } catch (const Json::parse_error& e) {
      throw Error(ErrorKind::Parse, name_or_path + ": " + e.what());
    }
    return polynomial_from_json<Rational>(j);
  }
  return motion_by_name(name_or_path);
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_scalar<Rational>(item));
  return out;
}

Point parse_point(const std::string& text) {
  auto v = parse_rationals(text);
  if (v.size() != 3) throw Error(ErrorKind::Parse, "expected three comma-separated coordinates");
  return {v[0], v[1], v[2]};
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  auto tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw Error(ErrorKind::Io, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(ErrorKind::Io, "cannot move output into place at " + path.string());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {
void write_metadata(std::ostringstream& os, const std::vector<std::string>& metadata) {
  for (const auto& line : metadata) os << "# " << line << "\n";
}
std::string fmt(double v) { return spinorfact::to_string(v); }
}  // namespace

std::string trajectory_csv(const std::vector<std::pair<std::string, std::optional<PointD>>>& rows,
                           const std::vector<std::string>& metadata) {
  std::ostringstream os;
  write_metadata(os, metadata);
  os << "t,x,y,z\n";
  for (const auto& [t, p] : rows) {
    if (p)
      os << t << "," << fmt((*p)[0]) << "," << fmt((*p)[1]) << "," << fmt((*p)[2]) << "\n";
    else
      os << "# ideal point at t=" << t << "\n";
  }
  return os.str();
}

std::string surface_obj(const SurfaceGrid& g, const std::vector<std::string>& metadata) {
  std::ostringstream os;
  write_metadata(os, metadata);
  const std::size_t ns = g.s_values.size();
  const std::size_t nt = g.t_values.size();
  std::vector<std::vector<long>> index(ns, std::vector<long>(nt, 0));
  long next = 1;
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      const auto& p = g.nodes[i][j];
      if (!p) continue;
      os << "v " << fmt((*p)[0]) << " " << fmt((*p)[1]) << " " << fmt((*p)[2]) << "\n";
      index[i][j] = next++;
    }
  }
  for (std::size_t i = 0; i + 1 < ns; ++i) {
    for (std::size_t j = 0; j + 1 < nt; ++j) {
      long a = index[i][j], b = index[i + 1][j], c = index[i + 1][j + 1], d = index[i][j + 1];
      if (a && b && c && d) os << "f " << a << " " << b << " " << c << " " << d << "\n";
    }
  }
  return os.str();
}

std::string surface_csv(const SurfaceGrid& g, const std::vector<std::string>& metadata) {
  std::ostringstream os;
  write_metadata(os, metadata);
  os << "s,t,x,y,z\n";
  for (std::size_t i = 0; i < g.s_values.size(); ++i) {
    for (std::size_t j = 0; j < g.t_values.size(); ++j) {
      const auto& p = g.nodes[i][j];
      if (!p) continue;
      os << fmt(g.s_values[i]) << "," << fmt(g.t_values[j]) << "," << fmt((*p)[0]) << "," << fmt((*p)[1]) << ","
         << fmt((*p)[2]) << "\n";
    }
  }
  return os.str();
}

}  // namespace spinorfact::io
