#pragma once

#include <cmath>
#include <optional>

#include "spinorfact/linalg.hpp"
#include "spinorfact/multivector.hpp"

namespace spinorfact {

/// 32x32 matrix of y -> a y in the blade basis (row = output blade mask).
template <class S>
linalg::Matrix<S> left_multiplication_matrix(const Multivector<S>& a) {
  linalg::Matrix<S> m(kBlades, std::vector<S>(kBlades, S(0)));
  for (unsigned j = 0; j < kBlades; ++j) {
    auto col = a * Multivector<S>::blade(BladeIndex(j));
    for (unsigned i = 0; i < kBlades; ++i) m[i][j] = col[BladeIndex(i)];
  }
  return m;
}

template <ExactField S>
S left_multiplication_determinant(const Multivector<S>& a) {
  return linalg::determinant(left_multiplication_matrix(a));
}

/// Inverse in the full algebra, or nullopt when the left-multiplication map
/// is singular.
template <ExactField S>
std::optional<Multivector<S>> inverse(const Multivector<S>& a) {
  auto m = left_multiplication_matrix(a);
  std::vector<S> rhs(kBlades, S(0));
  rhs[0] = S(1);
  auto sol = linalg::solve(m, rhs, kBlades);
  if (!sol || !sol->basis.empty()) return std::nullopt;
  Multivector<S> y;
  for (unsigned i = 0; i < kBlades; ++i) y[BladeIndex(i)] = sol->particular[i];
  return y;
}

template <ExactField S>
bool is_invertible(const Multivector<S>& a) {
  return inverse(a).has_value();
}

/// cos(theta) + B sin(theta) for a bivector-like B with B*B == -1.
template <class S>
Multivector<double> exp_bivector(const Multivector<S>& b, double theta) {
  auto sq = b * b;
  if (!(sq == Multivector<S>(S(-1))))
    throw Error(ErrorKind::NotUnitBivector, "exp_bivector requires B*B == -1");
  Multivector<double> bd;
  for (unsigned i = 0; i < kBlades; ++i) {
    if constexpr (std::is_same_v<S, double>)
      bd[BladeIndex(i)] = b[BladeIndex(i)];
    else
      bd[BladeIndex(i)] = to_double(b[BladeIndex(i)]);
  }
  return Multivector<double>(std::cos(theta)) + bd * std::sin(theta);
}

}  // namespace spinorfact
