#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <type_traits>

namespace spinorfact {

using Rational = mpq_class;

// Complex numbers over an arbitrary ordered field. The imaginary unit here is
// the complex unit; it commutes with every blade.
template <class T>
struct Complex {
  T re{0};
  T im{0};

  Complex() = default;
  Complex(int v) : re(v), im(0) {}
  Complex(T r) : re(std::move(r)), im(0) {}
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  static Complex unit() { return Complex(T(0), T(1)); }

  Complex conj() const { return Complex(re, T(-im)); }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    T r = re * o.re - im * o.im;
    T i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    T d = o.re * o.re + o.im * o.im;
    T r = (re * o.re + im * o.im) / d;
    T i = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return Complex(T(-a.re), T(-a.im)); }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

using ComplexRational = Complex<Rational>;

template <class S>
struct is_exact_field : std::false_type {};
template <>
struct is_exact_field<Rational> : std::true_type {};
template <>
struct is_exact_field<ComplexRational> : std::true_type {};

template <class S>
inline constexpr bool is_exact_field_v = is_exact_field<S>::value;

template <class S>
concept ExactField = is_exact_field_v<S>;

template <class S>
bool is_zero(const S& s) {
  return s == S(0);
}

/// Textual scalar forms used by the JSON interfaces.
/// Rationals print as "p/q" (or "p" when integral), complex rationals as
/// "re,im", doubles with enough digits to round-trip.
std::string to_string(const Rational& q);
std::string to_string(const ComplexRational& z);
std::string to_string(double x);

template <class S>
S parse_scalar(std::string_view text);

template <>
Rational parse_scalar<Rational>(std::string_view text);
template <>
ComplexRational parse_scalar<ComplexRational>(std::string_view text);
template <>
double parse_scalar<double>(std::string_view text);

double to_double(const Rational& q);

}  // namespace spinorfact
