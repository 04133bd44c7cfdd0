#pragma once

// Small dense exact linear algebra over BigInt and Rational.

#include "kostantq/numeric.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kostantq {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Fraction-free (Bareiss) determinant of a square integer matrix.
inline BigInt determinant(Matrix<BigInt> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline std::size_t rank(Matrix<Rational> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

/// Solves A X = B for square nonsingular A (Gauss-Jordan); nullopt if singular.
inline std::optional<Matrix<Rational>> solve(Matrix<Rational> a, Matrix<Rational> b) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("solve needs a square matrix");
  if (b.size() != n) throw std::invalid_argument("right-hand side row count mismatch");
  const std::size_t m = n ? b[0].size() : 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[c], a[p]);
    std::swap(b[c], b[p]);
    const Rational inv = 1 / a[c][c];
    for (std::size_t j = c; j < n; ++j) a[c][j] *= inv;
    for (std::size_t j = 0; j < m; ++j) b[c][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      for (std::size_t j = 0; j < m; ++j) b[i][j] -= f * b[c][j];
    }
  }
  return b;
}

inline std::optional<Matrix<Rational>> inverse(const Matrix<Rational>& a) {
  const std::size_t n = a.size();
  Matrix<Rational> id(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return solve(a, std::move(id));
}

/// Calls f(indices) for every r-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_combination(std::size_t n, std::size_t r, F&& f) {
  if (r > n) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    f(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace kostantq
