#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "zariski/linalg.hpp"

namespace zariski {

/// Dense univariate polynomial over a field, index = power of the variable.
/// Always trimmed: the zero polynomial has no coefficients.
template <typename T>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const T& v) { return UniPoly(std::vector<T>{v}); }

  const std::vector<T>& coeffs() const { return c_; }
  bool is_zero_poly() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const T& lead() const { return c_.back(); }

  T operator()(const T& x) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }

  /// Quotient and remainder; divisor must be nonzero.
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    std::vector<T> rem = a.c_;
    if (a.c_.size() < b.c_.size()) return {UniPoly(), a};
    std::size_t db = b.c_.size() - 1;
    std::vector<T> q(rem.size() - db, T(0));
    T inv = T(1) / b.c_.back();
    for (std::size_t i = rem.size(); i-- > db;) {
      if (is_zero(rem[i])) continue;
      T f = rem[i] * inv;
      q[i - db] = f;
      for (std::size_t k = 0; k <= db; ++k) rem[i - db + k] = rem[i - db + k] - f * b.c_[k];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
  }

  UniPoly monic() const {
    if (c_.empty()) return {};
    T inv = T(1) / c_.back();
    std::vector<T> r = c_;
    for (auto& v : r) v = v * inv;
    return UniPoly(std::move(r));
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> r(c_.size() - 1, T(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
    return UniPoly(std::move(r));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!is_zero(a.c_[i] - b.c_[i])) return false;
    return true;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

/// Monic gcd (zero if both inputs are zero).
template <typename T>
UniPoly<T> gcd(UniPoly<T> a, UniPoly<T> b) {
  while (!b.is_zero_poly()) {
    auto r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Yun's square-free decomposition: returns factors f_1, f_2, ... with
/// p = lead * prod f_i^i and each f_i square-free (char 0 only).
template <typename T>
std::vector<UniPoly<T>> squarefree_decomposition(const UniPoly<T>& p) {
  std::vector<UniPoly<T>> out;
  if (p.degree() < 1) return out;
  UniPoly<T> dp = p.derivative();
  UniPoly<T> a = gcd(p, dp);
  UniPoly<T> b = divmod(p, a).first;
  UniPoly<T> c = divmod(dp, a).first;
  UniPoly<T> d = c - b.derivative();
  while (b.degree() >= 1) {
    UniPoly<T> f = gcd(b, d);
    out.push_back(f);
    b = divmod(b, f).first;
    c = divmod(d, f).first;
    d = c - b.derivative();
  }
  return out;
}

/// Interpolates the unique polynomial of degree < xs.size() through the
/// points (xs[i], ys[i]) with Newton divided differences.
template <typename T>
UniPoly<T> interpolate(const std::vector<T>& xs, std::vector<T> ys) {
  std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UniPoly<T> result = UniPoly<T>::constant(ys[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result * UniPoly<T>(std::vector<T>{T(0) - xs[i], T(1)}) + UniPoly<T>::constant(ys[i]);
  }
  return result;
}

/// Sylvester resultant of two coefficient lists with formal degrees
/// m = a.size() - 1 and n = b.size() - 1 (leading entries may vanish).
template <typename T>
T sylvester_resultant(const std::vector<T>& a, const std::vector<T>& b) {
  std::size_t m = a.size() - 1, n = b.size() - 1;
  std::size_t size = m + n;
  if (size == 0) return T(1);
  DenseMatrix<T> s(size, std::vector<T>(size, T(0)));
  // Rows hold coefficients from the highest power down.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = a[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = b[n - k];
  return determinant(std::move(s));
}

}  // namespace zariski
