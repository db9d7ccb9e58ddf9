#include "spinorfact/families.hpp"

namespace spinorfact {

namespace motions {

SpinorPoly circular_translation() {
  const auto eps = units::epsilon();
  return SpinorPoly({MV(Rational(1)) - eps * units::i(), -(eps * units::j()), MV(Rational(1))});
}

SpinorPoly villarceau() { return SpinorPoly::linear(units::b_minus()) * SpinorPoly::linear(units::b_plus()); }

SpinorPoly identity() { return SpinorPoly(t_squared_plus_one()); }

}  // namespace motions

SpinorPoly FactorPair::product() const { return SpinorPoly::linear(h1) * SpinorPoly::linear(h2); }

const char* to_string(FamilyId id) {
  return id == FamilyId::CircularTranslation ? "circular-translation" : "villarceau";
}

FactorPair FactorizationFamily::at(const std::vector<Rational>& params) const {
  if (params.size() != parameters.size()) throw Error(ErrorKind::OutOfRange, "wrong number of family parameters");
  if (id == FamilyId::CircularTranslation) return circular_translation_family(params[0], params[1]);
  return villarceau_family(params[0], params[1], params[2]);
}

FactorizationFamily circular_translation_factorizations() {
  return {FamilyId::CircularTranslation, ParameterDomain::AffinePlane, {"lambda", "mu"}, motions::circular_translation()};
}

FactorizationFamily villarceau_factorizations() {
  return {FamilyId::Villarceau, ParameterDomain::Sphere, {"x", "y", "z"}, motions::villarceau()};
}

FactorPair circular_translation_family(const Rational& lambda, const Rational& mu) {
  const auto eps = units::epsilon();
  const auto i = units::i();
  const auto j = units::j();
  const auto k = units::k();
  MV h1 = k + eps * (j * Rational(1 - mu) - i * lambda);
  MV h2 = -k + eps * (i * lambda + j * mu);
  return {h1, h2};
}

namespace villarceau_sphere {

MV center() { return (units::b_minus() + units::b_plus()) * Rational(1, 2); }

std::array<MV, 3> directions() {
  auto b = [](const char* name, int v = 1) { return MV::blade(name, Rational(v)); };
  return {(b("e1+") - b("e23")) * Rational(2), (b("e2+") + b("e13")) * Rational(2), (b("e3+") - b("e12")) * Rational(2)};
}

Rational equation(const Rational& x, const Rational& y, const Rational& z) {
  Rational dz = z - Rational(1, 4);
  return x * x + y * y + dz * dz - Rational(1, 16);
}

std::array<Rational, 3> rational_point(const Rational& a, const Rational& b) {
  // Unit sphere point (2a, 2b, 1 - a^2 - b^2) / (1 + a^2 + b^2), projected
  // from the north pole, then scaled by 1/4 and shifted to (0, 0, 1/4).
  Rational d = 1 + a * a + b * b;
  Rational q(1, 4);
  return {Rational(q * 2 * a / d), Rational(q * 2 * b / d), Rational(q + q * (1 - a * a - b * b) / d)};
}

}  // namespace villarceau_sphere


FactorPair villarceau_family(const Rational& x, const Rational& y, const Rational& z) {
  if (villarceau_sphere::equation(x, y, z) != 0)
    throw Error(ErrorKind::NotOnSphere, "parameter point is not on the solution sphere");
  auto [sx, sy, sz] = villarceau_sphere::directions();
  MV h2 = units::b_minus() + sx * x + sy * y + sz * z;
  MV h1 = villarceau_sphere::center() * Rational(2) - h2;
  return {h1, h2};
}

MV villarceau_sphere_vector(const Rational& x, const Rational& y, const Rational& z) {
  return (villarceau_family(x, y, z).h2 - villarceau_sphere::center()) * Rational(4);
}

FactorizationReport verify_factorization(const SpinorPoly& c, const MV& h1, const MV& h2) {
  FactorizationReport r;
  const auto f1 = SpinorPoly::linear(h1);
  const auto f2 = SpinorPoly::linear(h2);
  const auto p12 = f1 * f2;
  r.product_residual = c - p12;
  r.product_ok = r.product_residual.is_zero();
  r.spinor_ok = is_spinor(f1) && is_spinor(f2);
  r.commutator = p12 - f2 * f1;
  r.commutator_zero = r.commutator.is_zero();
  return r;
}

ReflectionReport reflection_structure_check(const std::vector<std::array<Rational, 3>>& sphere_points) {
  ReflectionReport r;
  const MV twice_center = villarceau_sphere::center() * Rational(2);
  for (const auto& p : sphere_points) {
    auto pair = villarceau_family(p[0], p[1], p[2]);
    ++r.samples;
    if (!(pair.h1 + pair.h2 == twice_center)) ++r.sum_failures;
    if (!(pair.h1 * pair.h2 == pair.h2 * pair.h1)) ++r.commute_failures;
  }
  return r;
}

}  // namespace spinorfact
