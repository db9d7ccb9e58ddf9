// Thin binding layer. Exact values cross the boundary as strings ("p/q") or
// canonical JSON text; the python package turns them into Fractions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinorfact/suites.hpp"

namespace py = pybind11;
using namespace spinorfact;

namespace {

using Triple = std::array<std::string, 3>;

MV mv(const std::string& text) { return io::multivector_from_json<Rational>(io::Json::parse(text)); }
std::string dump(const MV& m) { return io::to_json(m).dump(); }

Point point(const Triple& p) {
  return {parse_scalar<Rational>(p[0]), parse_scalar<Rational>(p[1]), parse_scalar<Rational>(p[2])};
}

Triple strings(const Point& p) { return {to_string(p[0]), to_string(p[1]), to_string(p[2])}; }

SpinorPoly motion(const std::string& name_or_json) {
  auto first = name_or_json.find_first_not_of(" \t\n");
  if (first != std::string::npos && name_or_json[first] == '[')
    return io::polynomial_from_json<Rational>(io::Json::parse(name_or_json));
  return io::motion_by_name(name_or_json);
}

const FactorizationFamily& family_of(const std::string& name) {
  static const auto circ = circular_translation_factorizations();
  static const auto vill = villarceau_factorizations();
  if (name == "circular-translation") return circ;
  if (name == "villarceau") return vill;
  throw Error(ErrorKind::Parse, "unknown family '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact conformal geometric algebra and spinor polynomial factorization";

  static py::exception<Error> error(m, "SpinorfactError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def("multiply", [](const std::string& a, const std::string& b) { return dump(mv(a) * mv(b)); });
  m.def("add", [](const std::string& a, const std::string& b) { return dump(mv(a) + mv(b)); });
  m.def("reverse", [](const std::string& a) { return dump(reverse(mv(a))); });
  m.def("grade", [](const std::string& a, int k) { return dump(grade_project(mv(a), k)); });
  m.def("encode_point", [](const Triple& p) { return dump(encode_point(point(p))); });
  m.def("decode_point", [](const std::string& v) { return strings(decode_point(mv(v))); });

  m.def("motion", [](const std::string& name) { return io::to_json(motion(name)).dump(); },
        "Coefficients of a named motion (or a JSON polynomial), lowest degree first.");
  m.def("norm", [](const std::string& name) { return io::to_json(norm_poly(motion(name))).dump(); });

  m.def("family",
        [](const std::string& name, const std::vector<std::string>& params) {
          std::vector<Rational> q;
          for (const auto& s : params) q.push_back(parse_scalar<Rational>(s));
          auto f = family_of(name).at(q);
          return std::pair{dump(f.h1), dump(f.h2)};
        },
        py::arg("name"), py::arg("params"));

  m.def("trajectory_point",
        [](const std::string& name, const Triple& p, const std::string& t) -> std::optional<Triple> {
          auto x = trajectory_curve(motion(name), point(p)).point(parse_scalar<Rational>(t));
          if (!x) return std::nullopt;
          return strings(*x);
        },
        "Exact trajectory point at t, or None for an ideal point.");

  m.def("cocircular", [](const std::array<Triple, 4>& p) {
    return cocircular({point(p[0]), point(p[1]), point(p[2]), point(p[3])});
  });

  m.def("classify", [](const std::string& a, const std::string& b) {
    auto c = classify_elementary(mv(a), mv(b));
    return std::pair{std::string(to_string(c.kind)), to_string(c.witness)};
  });

  m.def("suite_names", &suite_names);
  m.def("verify",
        [](const std::string& suite, const std::string& config_json) {
          auto config = config_json.empty() ? Config{} : Config::from_json(io::Json::parse(config_json));
          config.validate();
          return run_suite(suite, config).to_json().dump();
        },
        py::arg("suite"), py::arg("config_json") = "");
}
