#pragma once

#include <array>
#include <string>
#include <vector>

#include "spinorfact/polynomial.hpp"

namespace spinorfact {

using MV = Multivector<Rational>;
using SpinorPoly = SpinorPolynomial<Rational>;

namespace motions {
/// t^2 + 1 - eps (j t + i): translation along a circle.
SpinorPoly circular_translation();
/// (t - e12)(t - e3+) = t^2 - t (e12 + e3+) + e123+.
SpinorPoly villarceau();
/// t^2 + 1, the identity motion.
SpinorPoly identity();
}  // namespace motions

struct FactorPair {
  MV h1;
  MV h2;

  /// (t - h1)(t - h2).
  SpinorPoly product() const;
};

enum class FamilyId { CircularTranslation, Villarceau };
enum class ParameterDomain { AffinePlane, Sphere };

const char* to_string(FamilyId id);

struct FactorizationFamily {
  FamilyId id;
  ParameterDomain domain;
  std::vector<std::string> parameters;
  SpinorPoly motion;

  /// Throws NotOnSphere for Villarceau parameters off the solution sphere.
  FactorPair at(const std::vector<Rational>& params) const;
};

FactorizationFamily circular_translation_factorizations();
FactorizationFamily villarceau_factorizations();

/// h1 = k + eps((1 - mu) j - lambda i), h2 = -k + eps(lambda i + mu j).
FactorPair circular_translation_family(const Rational& lambda, const Rational& mu);

namespace villarceau_sphere {
/// m = (e12 + e3+)/2.
MV center();
/// s_x = 2(e1+ - e23), s_y = 2(e2+ + e13), s_z = 2(e3+ - e12).
std::array<MV, 3> directions();
/// x^2 + y^2 + (z - 1/4)^2 - 1/16.
Rational equation(const Rational& x, const Rational& y, const Rational& z);
/// Rational point of the sphere by inverse stereographic projection from
/// (0,0,1/2) of the parameter (a, b).
std::array<Rational, 3> rational_point(const Rational& a, const Rational& b);
}  // namespace villarceau_sphere

/// h2 = e12 + s_x x + s_y y + s_z z, h1 = 2m - h2. Throws NotOnSphere.
FactorPair villarceau_family(const Rational& x, const Rational& y, const Rational& z);

/// S(p) = 4 (h2(p) - m).
MV villarceau_sphere_vector(const Rational& x, const Rational& y, const Rational& z);

struct FactorizationReport {
  bool product_ok = false;
  bool spinor_ok = false;
  bool commutator_zero = false;
  SpinorPoly product_residual;  // C - (t - h1)(t - h2)
  SpinorPoly commutator;        // (t-h1)(t-h2) - (t-h2)(t-h1)

  bool passed() const { return product_ok && spinor_ok; }
};

FactorizationReport verify_factorization(const SpinorPoly& c, const MV& h1, const MV& h2);

struct ReflectionReport {
  std::size_t samples = 0;
  std::size_t sum_failures = 0;      // h1 + h2 != 2m
  std::size_t commute_failures = 0;  // h1 h2 != h2 h1
  bool passed() const { return samples > 0 && sum_failures == 0 && commute_failures == 0; }
};

/// Checks h1 + h2 = 2m and h1 h2 = h2 h1 at the given sphere points.
ReflectionReport reflection_structure_check(const std::vector<std::array<Rational, 3>>& sphere_points);

}  // namespace spinorfact
