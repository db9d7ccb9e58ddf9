#include "spinorfact/scalar.hpp"

#include <charconv>
#include <cstdio>
#include <string>

#include "spinorfact/error.hpp"

namespace spinorfact {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const ComplexRational& z) { return to_string(z.re) + "," + to_string(z.im); }

std::string to_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <>
Rational parse_scalar<Rational>(std::string_view text) {
  std::string s(text);
  auto valid = !s.empty() && s.find_first_not_of("+-0123456789/") == std::string::npos;
  Rational q;
  if (!valid || q.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "invalid rational '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

template <>
ComplexRational parse_scalar<ComplexRational>(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) return ComplexRational(parse_scalar<Rational>(text));
  return ComplexRational(parse_scalar<Rational>(text.substr(0, comma)), parse_scalar<Rational>(text.substr(comma + 1)));
}

template <>
double parse_scalar<double>(std::string_view text) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw Error(ErrorKind::Parse, "invalid number '" + std::string(text) + "'");
  return v;
}

double to_double(const Rational& q) { return q.get_d(); }

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FieldMismatch: return "field_mismatch";
    case ErrorKind::NonUnitNormal: return "non_unit_normal";
    case ErrorKind::IdealPoint: return "ideal_point";
    case ErrorKind::OddElement: return "odd_element";
    case ErrorKind::NotInvertible: return "not_invertible";
    case ErrorKind::InexactField: return "inexact_field";
    case ErrorKind::NotUnitBivector: return "not_unit_bivector";
    case ErrorKind::NotSpinor: return "not_spinor";
    case ErrorKind::ZeroDivisor: return "zero_divisor";
    case ErrorKind::DegenerateRemainder: return "degenerate_remainder";
    case ErrorKind::NotRightZero: return "not_right_zero";
    case ErrorKind::NormNotSquare: return "norm_not_square";
    case ErrorKind::InconsistentLinearSystem: return "inconsistent_linear_system";
    case ErrorKind::NotOnSphere: return "not_on_sphere";
    case ErrorKind::WitnessNotReal: return "witness_not_real";
    case ErrorKind::OutOfRange: return "out_of_range";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace spinorfact
