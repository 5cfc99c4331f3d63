#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace zariski {

template <typename T>
using DenseMatrix = std::vector<std::vector<T>>;

// Field algorithms below rely on T(0), T(1), the four operations, and an
// ADL-visible is_zero(const T&).

template <typename T>
T determinant(DenseMatrix<T> m) {
  std::size_t n = m.size();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m[p][c])) ++p;
    if (p == n) return T(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det = det * m[c][c];
    T inv = T(1) / m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(m[r][c])) continue;
      T f = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[r][k] = m[r][k] - f * m[c][k];
    }
  }
  return det;
}

/// Gauss-Jordan inverse; nullopt when singular.
template <typename T>
std::optional<DenseMatrix<T>> inverse(DenseMatrix<T> m) {
  std::size_t n = m.size();
  DenseMatrix<T> inv(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = T(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m[p][c])) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    T pivot_inv = T(1) / m[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] = m[c][k] * pivot_inv;
      inv[c][k] = inv[c][k] * pivot_inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || is_zero(m[r][c])) continue;
      T f = m[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] = m[r][k] - f * m[c][k];
        inv[r][k] = inv[r][k] - f * inv[c][k];
      }
    }
  }
  return inv;
}

template <typename T>
DenseMatrix<T> matmul(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  DenseMatrix<T> out(n, std::vector<T>(m, T(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < k; ++l) out[i][j] = out[i][j] + a[i][l] * b[l][j];
  return out;
}

}  // namespace zariski
