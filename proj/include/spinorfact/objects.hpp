#pragma once

#include <array>
#include <cmath>

#include "spinorfact/multivector.hpp"

namespace spinorfact {

template <class S>
using Point3 = std::array<S, 3>;

enum class ObjectRole { Sphere, Plane, Point };

template <class S>
struct GeometricObject {
  ObjectRole role;
  Multivector<S> vector;
};

namespace detail {
template <class S>
Multivector<S> null_infinity() {
  return Multivector<S>::blade("e+") + Multivector<S>::blade("e-");
}
}  // namespace detail

/// Sphere with given center and radius; a zero radius gives a point.
/// The encoding s satisfies s rev(s) = r^2.
template <class S>
GeometricObject<S> encode_sphere(const Point3<S>& c, const S& radius) {
  S half_weight = (S(1) + c[0] * c[0] + c[1] * c[1] + c[2] * c[2] - radius * radius) / S(2);
  auto v = Multivector<S>::blade("e1", c[0]) + Multivector<S>::blade("e2", c[1]) +
           Multivector<S>::blade("e3", c[2]) + detail::null_infinity<S>() * half_weight -
           Multivector<S>::blade("e+");
  return {is_zero(radius) ? ObjectRole::Point : ObjectRole::Sphere, std::move(v)};
}

template <class S>
Multivector<S> encode_point(const Point3<S>& p) {
  return encode_sphere(p, S(0)).vector;
}

/// Plane with unit normal n and signed distance d from the origin.
/// Exact fields require |n|^2 == 1; double accepts |n|^2 within 1e-12 of 1.
template <class S>
GeometricObject<S> encode_plane(const Point3<S>& n, const S& d) {
  S norm2 = n[0] * n[0] + n[1] * n[1] + n[2] * n[2];
  bool unit;
  if constexpr (std::is_floating_point_v<S>)
    unit = std::abs(norm2 - 1.0) <= 1e-12;
  else
    unit = (norm2 == S(1));
  if (!unit) throw Error(ErrorKind::NonUnitNormal, "plane normal must have unit length");
  auto v = Multivector<S>::blade("e1", n[0]) + Multivector<S>::blade("e2", n[1]) +
           Multivector<S>::blade("e3", n[2]) + detail::null_infinity<S>() * d;
  return {ObjectRole::Plane, std::move(v)};
}

/// Cartesian coordinates of a (homogeneous) point vector. Throws
/// ErrorKind::IdealPoint when coeff(e-) - coeff(e+) vanishes.
template <class S>
Point3<S> decode_point(const Multivector<S>& v) {
  S w = v.at("e-") - v.at("e+");
  if (is_zero(w)) throw Error(ErrorKind::IdealPoint, "ideal point: cannot normalize");
  return {S(v.at("e1") / w), S(v.at("e2") / w), S(v.at("e3") / w)};
}

}  // namespace spinorfact
