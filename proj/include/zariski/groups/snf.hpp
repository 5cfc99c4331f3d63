#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "zariski/groups/presentation.hpp"

namespace zariski::groups {

using BigInt = mpz_class;
using IntMatrix = std::vector<std::vector<BigInt>>;

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix out(n, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

struct SmithForm {
  IntMatrix d;  // U * A * V
  IntMatrix u;
  IntMatrix v;
  std::size_t rank = 0;

  BigInt diagonal(std::size_t i) const { return i < d.size() && i < (d.empty() ? 0 : d[0].size()) ? d[i][i] : BigInt(0); }
};

namespace detail {

class SmithReducer {
 public:
  SmithReducer(IntMatrix a, std::size_t rows, std::size_t cols) : a_(std::move(a)), m_(rows), n_(cols), u_(identity_matrix(rows)), v_(identity_matrix(cols)) {}

  SmithForm run() {
    std::size_t t = 0;
    for (; t < std::min(m_, n_); ++t) {
      if (!place_smallest(t)) break;
      while (true) {
        if (clear_column(t)) continue;
        if (clear_row(t)) continue;
        if (fix_divisibility(t)) continue;
        break;
      }
      if (a_[t][t] < 0) negate_row(t);
    }
    return {std::move(a_), std::move(u_), std::move(v_), t};
  }

 private:
  // Moves the smallest nonzero entry of the trailing block to (t, t).
  bool place_smallest(std::size_t t) {
    std::size_t bi = m_, bj = n_;
    for (std::size_t i = t; i < m_; ++i)
      for (std::size_t j = t; j < n_; ++j)
        if (a_[i][j] != 0 && (bi == m_ || abs(a_[i][j]) < abs(a_[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi == m_) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  bool clear_column(std::size_t t) {
    bool changed = false;
    for (std::size_t i = t + 1; i < m_; ++i) {
      if (a_[i][t] == 0) continue;
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), a_[i][t].get_mpz_t(), a_[t][t].get_mpz_t());
      add_row(i, t, -q);
      if (a_[i][t] != 0) {
        swap_rows(t, i);
        changed = true;
      }
    }
    return changed;
  }

  bool clear_row(std::size_t t) {
    bool changed = false;
    for (std::size_t j = t + 1; j < n_; ++j) {
      if (a_[t][j] == 0) continue;
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), a_[t][j].get_mpz_t(), a_[t][t].get_mpz_t());
      add_col(j, t, -q);
      if (a_[t][j] != 0) {
        swap_cols(t, j);
        changed = true;
      }
    }
    return changed;
  }

  bool fix_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < m_; ++i)
      for (std::size_t j = t + 1; j < n_; ++j)
        if (a_[i][j] % a_[t][t] != 0) {
          add_row(t, i, 1);
          return true;
        }
    return false;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    std::swap(a_[i], a_[k]);
    std::swap(u_[i], u_[k]);
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (auto& row : a_) std::swap(row[j], row[k]);
    for (auto& row : v_) std::swap(row[j], row[k]);
  }
  // row i += c * row k
  void add_row(std::size_t i, std::size_t k, const BigInt& c) {
    for (std::size_t j = 0; j < n_; ++j) a_[i][j] += c * a_[k][j];
    for (std::size_t j = 0; j < m_; ++j) u_[i][j] += c * u_[k][j];
  }
  // col j += c * col k
  void add_col(std::size_t j, std::size_t k, const BigInt& c) {
    for (std::size_t i = 0; i < m_; ++i) a_[i][j] += c * a_[i][k];
    for (std::size_t i = 0; i < n_; ++i) v_[i][j] += c * v_[i][k];
  }
  void negate_row(std::size_t i) {
    for (auto& x : a_[i]) x = -x;
    for (auto& x : u_[i]) x = -x;
  }

  IntMatrix a_;
  std::size_t m_, n_;
  IntMatrix u_, v_;
};

}  // namespace detail

/// U * A * V = D with D diagonal, d_1 | d_2 | ..., and U, V unimodular.
inline SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols) {
  for (const auto& row : a)
    if (row.size() != cols) raise(ErrorCode::InvalidOperand, "ragged integer matrix");
  return detail::SmithReducer(a, a.size(), cols).run();
}

inline SmithForm smith_normal_form(const IntMatrix& a) { return smith_normal_form(a, a.empty() ? 0 : a[0].size()); }

/// Determinant of a square integer matrix by fraction-free elimination (Bareiss).
inline BigInt integer_determinant(IntMatrix m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<BigInt> torsion;  // each > 1, d_1 | d_2 | ...

  std::string to_string() const {
    std::string out;
    if (free_rank > 0) out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    for (const auto& t : torsion) out += (out.empty() ? "" : " + ") + std::string("Z/") + t.get_str();
    return out.empty() ? "0" : out;
  }
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

inline AbelianInvariants invariants_from_smith(const SmithForm& s, std::size_t generators) {
  AbelianInvariants inv;
  inv.free_rank = static_cast<int>(generators - s.rank);
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.d[i][i] != 1) inv.torsion.push_back(s.d[i][i]);
  return inv;
}

/// Relator-by-generator exponent-sum matrix.
inline IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m;
  for (const auto& r : p.relators) {
    auto e = r.exponent_sums(p.rank());
    m.emplace_back(e.begin(), e.end());
  }
  return m;
}

inline AbelianInvariants abelianize(const Presentation& p) {
  p.check();
  return invariants_from_smith(smith_normal_form(relation_matrix(p), static_cast<std::size_t>(p.rank())), static_cast<std::size_t>(p.rank()));
}

/// Whether target lies in the Z-span of the given vectors (all of equal length).
inline bool lattice_contains(const std::vector<std::vector<BigInt>>& spanning, const std::vector<BigInt>& target) {
  std::size_t n = target.size();
  if (spanning.empty()) {
    for (const auto& x : target)
      if (x != 0) return false;
    return true;
  }
  // columns are the spanning vectors: A is n x k, U A V = D; target = A y iff U target = D z
  IntMatrix a(n, std::vector<BigInt>(spanning.size(), 0));
  for (std::size_t j = 0; j < spanning.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) a[i][j] = spanning[j][i];
  SmithForm s = smith_normal_form(a, spanning.size());
  for (std::size_t i = 0; i < n; ++i) {
    BigInt y = 0;
    for (std::size_t k = 0; k < n; ++k) y += s.u[i][k] * target[k];
    if (i < s.rank) {
      if (y % s.d[i][i] != 0) return false;
    } else if (y != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace zariski::groups
