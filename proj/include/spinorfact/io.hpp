#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "spinorfact/constraints.hpp"
#include "spinorfact/families.hpp"
#include "spinorfact/kinematics.hpp"

namespace spinorfact::io {

using Json = nlohmann::ordered_json;

/// {"e12": "1/2", ...}: nonzero coefficients only, keys in canonical blade
/// order. Rationals print as "p/q", complex rationals as "re,im".
template <class S>
Json to_json(const Multivector<S>& m) {
  Json j = Json::object();
  for (auto mask : kBladeOrder) {
    const S& c = m[BladeIndex(mask)];
    if (!is_zero(c)) j[BladeIndex(mask).name()] = spinorfact::to_string(c);
  }
  return j;
}

template <class S>
Multivector<S> multivector_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "multivector JSON must be an object");
  Multivector<S> m;
  for (const auto& [key, value] : j.items()) {
    auto b = BladeIndex::parse(key);
    if (!b) throw Error(ErrorKind::Parse, "unknown blade name '" + key + "'");
    if (!value.is_string()) throw Error(ErrorKind::Parse, "coefficient of '" + key + "' must be a string");
    m[*b] = parse_scalar<S>(value.template get<std::string>());
  }
  return m;
}

/// Ordered list of multivectors, index = power of t.
template <class S>
Json to_json(const SpinorPolynomial<S>& p) {
  Json j = Json::array();
  for (const auto& c : p.coefficients()) j.push_back(to_json(c));
  return j;
}

template <class S>
SpinorPolynomial<S> polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "polynomial JSON must be an array");
  std::vector<Multivector<S>> c;
  for (const auto& item : j) c.push_back(multivector_from_json<S>(item));
  return SpinorPolynomial<S>(std::move(c));
}

Json to_json(const RealPolynomial<Rational>& p);
Json to_json(const MPoly& p, const std::vector<std::string>& names);

Json family_to_json(const FactorizationFamily& family, const std::vector<Rational>& params);

struct FamilyRecord {
  std::string family;
  std::vector<Rational> params;
  MV h1;
  MV h2;
  bool product_ok = false;
  bool spinor_ok = false;
  bool commutator_zero = false;
};
FamilyRecord family_from_json(const Json& j);

Json to_json(const ConstraintSystem& cs);
Json to_json(const LinearSolution& lin);
Json to_json(const Variety& v);
Json to_json(const NullPointReport& r);

/// Flagship motion by name: "circular-translation", "villarceau",
/// "identity". Throws Parse for unknown names.
SpinorPoly motion_by_name(const std::string& name);
/// Name or path to a polynomial JSON file.
SpinorPoly load_motion(const std::string& name_or_path);

Point parse_point(const std::string& text);  // "x,y,z" with rational entries
std::vector<Rational> parse_rationals(const std::string& text);

/// Writes via a temporary file in the same directory and renames it over
/// the target.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

/// CSV "t,x,y,z" with '#'-prefixed metadata lines; ideal samples are written
/// as comment lines.
std::string trajectory_csv(const std::vector<std::pair<std::string, std::optional<PointD>>>& rows,
                           const std::vector<std::string>& metadata);

/// OBJ vertex grid with quad faces; skipped nodes break adjacent faces.
std::string surface_obj(const SurfaceGrid& g, const std::vector<std::string>& metadata);
std::string surface_csv(const SurfaceGrid& g, const std::vector<std::string>& metadata);

}  // namespace spinorfact::io
