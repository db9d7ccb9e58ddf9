#pragma once

#include <array>
#include <functional>
#include <initializer_list>
#include <utility>

#include "spinorfact/blade.hpp"
#include "spinorfact/error.hpp"
#include "spinorfact/scalar.hpp"

namespace spinorfact {

/// Dense element of the conformal geometric algebra R(4,1), one coefficient
/// per blade, indexed by blade mask.
template <class S>
class Multivector {
 public:
  using scalar_type = S;

  Multivector() { coeffs_.fill(S(0)); }
  explicit Multivector(S s) : Multivector() { coeffs_[0] = std::move(s); }

  static Multivector blade(BladeIndex b, S value = S(1)) {
    Multivector m;
    m.coeffs_[b.mask()] = std::move(value);
    return m;
  }

  /// Blade by name, e.g. blade("e3+").
  static Multivector blade(std::string_view name, S value = S(1)) {
    auto b = BladeIndex::parse(name);
    if (!b) throw Error(ErrorKind::Parse, "unknown blade name '" + std::string(name) + "'");
    return blade(*b, std::move(value));
  }

  const S& operator[](BladeIndex b) const { return coeffs_[b.mask()]; }
  S& operator[](BladeIndex b) { return coeffs_[b.mask()]; }
  const S& at(std::string_view name) const { return coeffs_[BladeIndex::parse(name).value().mask()]; }
  const S& scalar() const { return coeffs_[0]; }

  const std::array<S, kBlades>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!spinorfact::is_zero(c)) return false;
    return true;
  }

  bool is_scalar() const {
    for (unsigned i = 1; i < kBlades; ++i)
      if (!spinorfact::is_zero(coeffs_[i])) return false;
    return true;
  }

  /// All odd-grade coefficients vanish.
  bool is_even() const {
    for (unsigned i = 0; i < kBlades; ++i)
      if (BladeIndex(i).grade() % 2 == 1 && !spinorfact::is_zero(coeffs_[i])) return false;
    return true;
  }

  bool is_grade(int k) const {
    for (unsigned i = 0; i < kBlades; ++i)
      if (BladeIndex(i).grade() != k && !spinorfact::is_zero(coeffs_[i])) return false;
    return true;
  }

  template <class F>
  auto map(F&& f) const {
    using R = std::decay_t<decltype(f(std::declval<const S&>()))>;
    Multivector<R> out;
    for (unsigned i = 0; i < kBlades; ++i) out[BladeIndex(i)] = f(coeffs_[i]);
    return out;
  }

  Multivector& operator+=(const Multivector& o) {
    for (unsigned i = 0; i < kBlades; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    for (unsigned i = 0; i < kBlades; ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  Multivector& operator*=(const S& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(const Multivector& a) {
    Multivector out;
    for (unsigned i = 0; i < kBlades; ++i) out.coeffs_[i] = -a.coeffs_[i];
    return out;
  }
  friend Multivector operator*(Multivector a, const S& s) { return a *= s; }
  friend Multivector operator*(const S& s, Multivector a) {
    for (auto& c : a.coeffs_) c = s * c;
    return a;
  }
  friend Multivector operator+(Multivector a, const S& s) {
    a.coeffs_[0] += s;
    return a;
  }
  friend Multivector operator-(Multivector a, const S& s) {
    a.coeffs_[0] -= s;
    return a;
  }

  /// Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    Multivector out;
    for (unsigned i = 0; i < kBlades; ++i) {
      if (spinorfact::is_zero(a.coeffs_[i])) continue;
      for (unsigned j = 0; j < kBlades; ++j) {
        if (spinorfact::is_zero(b.coeffs_[j])) continue;
        auto [sign, k] = blade_product(BladeIndex(i), BladeIndex(j));
        S term = a.coeffs_[i] * b.coeffs_[j];
        if (sign > 0)
          out.coeffs_[k.mask()] += term;
        else
          out.coeffs_[k.mask()] -= term;
      }
    }
    return out;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::array<S, kBlades> coeffs_;
};

template <class S>
Multivector<S> geometric_product(const Multivector<S>& a, const Multivector<S>& b) {
  return a * b;
}

template <class S>
Multivector<S> reverse(const Multivector<S>& a) {
  Multivector<S> out;
  for (unsigned i = 0; i < kBlades; ++i) {
    BladeIndex b(i);
    out[b] = reverse_sign(b.grade()) > 0 ? a[b] : S(-a[b]);
  }
  return out;
}

template <class S>
Multivector<S> grade_project(const Multivector<S>& a, int k) {
  if (k < 0 || k > kGenerators) throw Error(ErrorKind::OutOfRange, "grade out of range");
  Multivector<S> out;
  for (unsigned i = 0; i < kBlades; ++i)
    if (BladeIndex(i).grade() == k) out[BladeIndex(i)] = a[BladeIndex(i)];
  return out;
}

/// Outer product, extended bilinearly over the grade parts of both inputs.
template <class S>
Multivector<S> outer_product(const Multivector<S>& a, const Multivector<S>& b) {
  Multivector<S> out;
  for (unsigned i = 0; i < kBlades; ++i) {
    if (is_zero(a[BladeIndex(i)])) continue;
    for (unsigned j = 0; j < kBlades; ++j) {
      if ((i & j) != 0 || is_zero(b[BladeIndex(j)])) continue;
      auto [sign, k] = blade_product(BladeIndex(i), BladeIndex(j));
      S term = a[BladeIndex(i)] * b[BladeIndex(j)];
      if (sign > 0)
        out[k] += term;
      else
        out[k] -= term;
    }
  }
  return out;
}

template <class S>
Multivector<S> sandwich(const Multivector<S>& g, const Multivector<S>& x) {
  return g * x * reverse(g);
}

/// Non-scalar part of x rev(x) plus the difference x rev(x) - rev(x) x.
/// Zero exactly on the Study variety.
template <class S>
Multivector<S> study_violation(const Multivector<S>& x) {
  if (!x.is_even()) throw Error(ErrorKind::OddElement, "study_violation expects an even element");
  auto xr = reverse(x);
  auto n = x * xr;
  auto violation = n;
  violation[BladeIndex::scalar()] = S(0);
  return violation + (n - xr * x);
}

/// Scalar part of x rev(x); zero on the null quadric.
template <class S>
S null_value(const Multivector<S>& x) {
  if (!x.is_even()) throw Error(ErrorKind::OddElement, "null_value expects an even element");
  return (x * reverse(x)).scalar();
}

/// a == lambda b for some nonzero scalar lambda (both nonzero).
template <class S>
bool projectively_equal(const Multivector<S>& a, const Multivector<S>& b) {
  if (a.is_zero() || b.is_zero()) return false;
  int pivot = -1;
  for (auto m : kBladeOrder) {
    if (!is_zero(b[BladeIndex(m)])) {
      pivot = m;
      break;
    }
  }
  const S& bp = b[BladeIndex(pivot)];
  const S& ap = a[BladeIndex(pivot)];
  if (is_zero(ap)) return false;
  for (unsigned i = 0; i < kBlades; ++i) {
    BladeIndex bi(i);
    if (!(a[bi] * bp == b[bi] * ap)) return false;
  }
  return true;
}

/// Canonical projective representative: divided by the first nonzero
/// coefficient in blade order.
template <ExactField S>
Multivector<S> normalized(const Multivector<S>& a) {
  for (auto m : kBladeOrder) {
    const S& c = a[BladeIndex(m)];
    if (!is_zero(c)) {
      S inv = S(1) / c;
      return a * inv;
    }
  }
  return a;
}

/// Coefficient-wise scalar conversion, e.g. Rational -> double.
template <class T, class S, class F>
Multivector<T> convert(const Multivector<S>& a, F&& f) {
  Multivector<T> out;
  for (unsigned i = 0; i < kBlades; ++i) out[BladeIndex(i)] = f(a[BladeIndex(i)]);
  return out;
}

inline Multivector<ComplexRational> complexify(const Multivector<Rational>& a) {
  return convert<ComplexRational>(a, [](const Rational& q) { return ComplexRational(q); });
}

inline Multivector<double> to_double(const Multivector<Rational>& a) {
  return convert<double>(a, [](const Rational& q) { return q.get_d(); });
}

/// Named elements: quaternion units and the dual unit of the dual-quaternion
/// subalgebra, and the two commuting bivectors of the Villarceau motion.
namespace units {
template <class S = Rational>
Multivector<S> i() {
  return Multivector<S>::blade("e23", S(-1));
}
template <class S = Rational>
Multivector<S> j() {
  return Multivector<S>::blade("e13");
}
template <class S = Rational>
Multivector<S> k() {
  return Multivector<S>::blade("e12", S(-1));
}
template <class S = Rational>
Multivector<S> epsilon() {
  return Multivector<S>::blade("e123+") + Multivector<S>::blade("e123-");
}
template <class S = Rational>
Multivector<S> b_minus() {
  return Multivector<S>::blade("e12");
}
template <class S = Rational>
Multivector<S> b_plus() {
  return Multivector<S>::blade("e3+");
}
}  // namespace units

}  // namespace spinorfact
