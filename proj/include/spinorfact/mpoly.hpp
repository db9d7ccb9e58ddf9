#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinorfact/scalar.hpp"

namespace spinorfact {

/// Sparse multivariate polynomial over the rationals in at most
/// kMaxVariables variables. Used as a scalar field stand-in so that the
/// multivector kernel can expand products symbolically.
class MPoly {
 public:
  static constexpr std::size_t kMaxVariables = 16;
  using Monomial = std::array<std::uint8_t, kMaxVariables>;

  MPoly() = default;
  MPoly(int c) : MPoly(Rational(c)) {}
  MPoly(const Rational& c) {
    if (c != 0) terms_[Monomial{}] = c;
  }

  static MPoly variable(std::size_t index, const Rational& coeff = 1);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  Rational constant() const;
  /// Coefficient of the linear monomial x_index.
  Rational linear_coefficient(std::size_t index) const;

  Rational evaluate(const std::vector<Rational>& values) const;
  MPoly substitute(const std::vector<MPoly>& values) const;

  /// Divided by the coefficient of its leading (largest) monomial; the
  /// representative used to merge polynomials equal up to scale.
  MPoly monic() const;

  /// Nonzero rational r with a == r * b, if one exists.
  friend std::optional<Rational> proportionality(const MPoly& a, const MPoly& b);

  std::string to_string(const std::vector<std::string>& names) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    return r *= b;
  }
  friend MPoly operator-(const MPoly& a);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const MPoly& a, const MPoly& b) { return a.terms_ < b.terms_; }

 private:
  std::map<Monomial, Rational> terms_;
};

std::optional<Rational> proportionality(const MPoly& a, const MPoly& b);

}  // namespace spinorfact
