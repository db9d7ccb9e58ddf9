#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "spinorfact/inverse.hpp"
#include "spinorfact/multivector.hpp"

namespace spinorfact {

/// Polynomial with scalar coefficients, index = power of t. Central in the
/// polynomial ring over the algebra.
template <class S>
class RealPolynomial {
 public:
  RealPolynomial() = default;
  RealPolynomial(std::initializer_list<S> c) : coeffs_(c) { trim(); }
  explicit RealPolynomial(std::vector<S> c) : coeffs_(std::move(c)) { trim(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<S>& coefficients() const { return coeffs_; }
  S operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : S(0); }
  const S& leading() const { return coeffs_.back(); }

  S operator()(const S& t) const {
    S acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  friend RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> c(a.coeffs_.size() + b.coeffs_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RealPolynomial(std::move(c));
  }
  friend RealPolynomial operator+(const RealPolynomial& a, const RealPolynomial& b) {
    std::vector<S> c(std::max(a.coeffs_.size(), b.coeffs_.size()), S(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return RealPolynomial(std::move(c));
  }
  friend RealPolynomial operator-(const RealPolynomial& a, const RealPolynomial& b) {
    std::vector<S> c(std::max(a.coeffs_.size(), b.coeffs_.size()), S(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
    return RealPolynomial(std::move(c));
  }
  friend RealPolynomial operator*(const S& s, const RealPolynomial& a) {
    std::vector<S> c = a.coeffs_;
    for (auto& x : c) x = s * x;
    return RealPolynomial(std::move(c));
  }
  friend bool operator==(const RealPolynomial& a, const RealPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && spinorfact::is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  std::vector<S> coeffs_;
};

/// t^2 + 1.
template <class S = Rational>
RealPolynomial<S> t_squared_plus_one() {
  return RealPolynomial<S>{S(1), S(0), S(1)};
}

/// Monic square root of a polynomial (after dividing out the leading
/// coefficient), if one exists.
template <ExactField S>
std::optional<RealPolynomial<S>> monic_square_root(const RealPolynomial<S>& p) {
  if (p.is_zero() || p.degree() % 2 != 0) return std::nullopt;
  S lead_inv = S(1) / p.leading();
  const int n = p.degree();
  const int k = n / 2;
  std::vector<S> monic(n + 1, S(0));
  for (int i = 0; i <= n; ++i) monic[i] = p[i] * lead_inv;
  // Determine root coefficients from the top down.
  std::vector<S> r(k + 1, S(0));
  r[k] = S(1);
  for (int m = k - 1; m >= 0; --m) {
    // coefficient of t^(k+m) in r^2 = 2 r_k r_m + sum_{m<i,j<k, i+j=k+m} r_i r_j
    S acc(0);
    for (int i = m + 1; i < k; ++i) {
      int j = k + m - i;
      if (j > m && j < k) acc += r[i] * r[j];
    }
    r[m] = (monic[k + m] - acc) / S(2);
  }
  RealPolynomial<S> root(std::move(r));
  if (!(root * root == RealPolynomial<S>(std::move(monic)))) return std::nullopt;
  return root;
}

/// Polynomial in a central indeterminate t with even multivector
/// coefficients; index = power of t.
template <class S>
class SpinorPolynomial {
 public:
  using Coeff = Multivector<S>;

  SpinorPolynomial() = default;
  SpinorPolynomial(std::initializer_list<Coeff> c) : coeffs_(c) { trim(); }
  explicit SpinorPolynomial(std::vector<Coeff> c) : coeffs_(std::move(c)) { trim(); }
  explicit SpinorPolynomial(const RealPolynomial<S>& p) {
    for (const auto& c : p.coefficients()) coeffs_.emplace_back(c);
    trim();
  }

  /// t - h.
  static SpinorPolynomial linear(const Coeff& h) { return SpinorPolynomial({-h, Coeff(S(1))}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }
  Coeff operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff(); }

  bool is_even() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return c.is_even(); });
  }

  /// Substitutes a scalar for t.
  Coeff operator()(const S& t) const {
    Coeff acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  friend SpinorPolynomial operator*(const SpinorPolynomial& a, const SpinorPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return SpinorPolynomial(std::move(c));
  }
  friend SpinorPolynomial operator+(const SpinorPolynomial& a, const SpinorPolynomial& b) {
    std::vector<Coeff> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return SpinorPolynomial(std::move(c));
  }
  friend SpinorPolynomial operator-(const SpinorPolynomial& a, const SpinorPolynomial& b) {
    std::vector<Coeff> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
    return SpinorPolynomial(std::move(c));
  }
  friend bool operator==(const SpinorPolynomial& a, const SpinorPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<Coeff> coeffs_;
};

template <class S>
SpinorPolynomial<S> poly_mul(const SpinorPolynomial<S>& p, const SpinorPolynomial<S>& q) {
  return p * q;
}

template <class S>
SpinorPolynomial<S> poly_reverse(const SpinorPolynomial<S>& c) {
  std::vector<Multivector<S>> out;
  out.reserve(c.coefficients().size());
  for (const auto& x : c.coefficients()) out.push_back(reverse(x));
  return SpinorPolynomial<S>(std::move(out));
}

template <class S>
SpinorPolynomial<S> derivative(const SpinorPolynomial<S>& c) {
  std::vector<Multivector<S>> out;
  for (std::size_t k = 1; k < c.coefficients().size(); ++k) out.push_back(c[k] * S(static_cast<int>(k)));
  return SpinorPolynomial<S>(std::move(out));
}

/// C rev(C) as a real polynomial. Throws NotSpinor unless C rev(C) equals
/// rev(C) C, has only scalar coefficients and is nonzero, and deg C >= 1.
template <class S>
RealPolynomial<S> norm_poly(const SpinorPolynomial<S>& c) {
  if (!c.is_even()) throw Error(ErrorKind::NotSpinor, "not a spinor polynomial: odd coefficient");
  auto cr = poly_reverse(c);
  auto left = c * cr;
  auto right = cr * c;
  if (!(left == right)) throw Error(ErrorKind::NotSpinor, "not a spinor polynomial: C~C != ~CC");
  std::vector<S> real;
  for (const auto& x : left.coefficients()) {
    if (!x.is_scalar()) throw Error(ErrorKind::NotSpinor, "not a spinor polynomial: norm is not real");
    real.push_back(x.scalar());
  }
  RealPolynomial<S> n(std::move(real));
  if (n.is_zero() || c.degree() < 1) throw Error(ErrorKind::NotSpinor, "not a spinor polynomial: degenerate");
  return n;
}

template <class S>
bool is_spinor(const SpinorPolynomial<S>& c) {
  try {
    norm_poly(c);
    return true;
  } catch (const Error&) {
    return false;
  }
}

/// Right evaluation sum c_i h^i.
template <class S>
Multivector<S> evaluate_right(const SpinorPolynomial<S>& c, const Multivector<S>& h) {
  Multivector<S> acc;
  Multivector<S> power(S(1));
  for (const auto& ci : c.coefficients()) {
    acc += ci * power;
    power = power * h;
  }
  return acc;
}

template <class S>
struct DivMod {
  SpinorPolynomial<S> quotient;
  SpinorPolynomial<S> remainder;
};

/// C = Q M + R with deg R < deg M. M is central so the result is unique.
template <ExactField S>
DivMod<S> divmod_real(const SpinorPolynomial<S>& c, const RealPolynomial<S>& m) {
  if (m.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by the zero polynomial");
  if (m.degree() < 1) throw Error(ErrorKind::ZeroDivisor, "divisor must have positive degree");
  std::vector<Multivector<S>> rem = c.coefficients();
  const int dm = m.degree();
  const int dc = c.degree();
  std::vector<Multivector<S>> quot(std::max(dc - dm + 1, 0));
  S lead_inv = S(1) / m.leading();
  for (int k = dc; k >= dm; --k) {
    Multivector<S> q = rem[k] * lead_inv;
    if (q.is_zero()) continue;
    for (int i = 0; i <= dm; ++i) rem[k - dm + i] -= q * m[i];
    quot[k - dm] = q;
  }
  return {SpinorPolynomial<S>(std::move(quot)), SpinorPolynomial<S>(std::move(rem))};
}

/// h = -r1^{-1} r0 for a linear remainder r1 t + r0. Throws
/// DegenerateRemainder when r1 is not invertible.
template <ExactField S>
Multivector<S> generic_right_zero(const SpinorPolynomial<S>& r) {
  if (r.degree() > 1) throw Error(ErrorKind::OutOfRange, "remainder must be at most linear");
  auto inv = inverse(r[1]);
  if (!inv) throw Error(ErrorKind::DegenerateRemainder, "degenerate remainder: r1 is not invertible; use the constraint solver");
  return -(*inv * r[0]);
}

/// C' with C = C' (t - h). Throws NotRightZero unless C(h) == 0.
template <class S>
SpinorPolynomial<S> extract_right_factor(const SpinorPolynomial<S>& c, const Multivector<S>& h) {
  if (!evaluate_right(c, h).is_zero()) throw Error(ErrorKind::NotRightZero, "h is not a right zero of C");
  const int n = c.degree();
  if (n < 1) throw Error(ErrorKind::NotRightZero, "polynomial has no linear right factor");
  std::vector<Multivector<S>> out(n);
  out[n - 1] = c[n];
  for (int k = n - 1; k >= 1; --k) out[k - 1] = c[k] + out[k] * h;
  return SpinorPolynomial<S>(std::move(out));
}

inline SpinorPolynomial<ComplexRational> complexify(const SpinorPolynomial<Rational>& c) {
  std::vector<Multivector<ComplexRational>> out;
  for (const auto& x : c.coefficients()) out.push_back(complexify(x));
  return SpinorPolynomial<ComplexRational>(std::move(out));
}

inline SpinorPolynomial<double> to_double(const SpinorPolynomial<Rational>& c) {
  std::vector<Multivector<double>> out;
  for (const auto& x : c.coefficients()) out.push_back(to_double(x));
  return SpinorPolynomial<double>(std::move(out));
}

/// C(z) for a complex scalar z.
inline Multivector<ComplexRational> evaluate_complex(const SpinorPolynomial<Rational>& c, const ComplexRational& z) {
  return complexify(c)(z);
}

}  // namespace spinorfact
