#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spinorfact/scalar.hpp"

namespace spinorfact::linalg {

template <class S>
using Matrix = std::vector<std::vector<S>>;

/// Reduced row echelon form over an exact field. Returns pivot columns.
template <class S>
std::vector<std::size_t> rref(Matrix<S>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && is_zero(m[sel][col])) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    S inv = S(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || is_zero(m[r][col])) continue;
      S f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class S>
std::size_t rank(Matrix<S> m, std::size_t ncols) {
  return rref(m, ncols).size();
}

template <class S>
S determinant(Matrix<S> m) {
  const std::size_t n = m.size();
  S det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && is_zero(m[sel][col])) ++sel;
    if (sel == n) return S(0);
    if (sel != col) {
      std::swap(m[sel], m[col]);
      det = -det;
    }
    det *= m[col][col];
    S inv = S(1) / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m[r][col])) continue;
      S f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

/// Affine solution set {particular + span(basis)} of A x = b.
template <class S>
struct AffineSolution {
  std::vector<S> particular;
  std::vector<std::vector<S>> basis;
};

/// Solves A x = b exactly; nullopt when inconsistent.
template <class S>
std::optional<AffineSolution<S>> solve(const Matrix<S>& a, const std::vector<S>& b, std::size_t ncols) {
  Matrix<S> aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  auto pivots = rref(aug, ncols);
  for (std::size_t r = pivots.size(); r < aug.size(); ++r)
    if (!is_zero(aug[r][ncols])) return std::nullopt;

  AffineSolution<S> sol;
  sol.particular.assign(ncols, S(0));
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    sol.particular[pivots[r]] = aug[r][ncols];
    is_pivot[pivots[r]] = true;
  }
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<S> v(ncols, S(0));
    v[free] = S(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug[r][free];
    sol.basis.push_back(std::move(v));
  }
  return sol;
}

}  // namespace spinorfact::linalg
