#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zariski/error.hpp"

namespace zariski {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

namespace detail {

// Dense polynomials over Q, index = power of x.
using QPoly = std::vector<Rational>;

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::vector<Integer> compute_cyclotomic(std::int64_t n);

inline const std::vector<Integer>& cyclotomic_cached(std::int64_t n) {
  static std::mutex mutex;
  static std::map<std::int64_t, std::vector<Integer>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto poly = compute_cyclotomic(n);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, all divisions exact over Z.
inline std::vector<Integer> compute_cyclotomic(std::int64_t n) {
  std::vector<Integer> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_cached(d);
    std::size_t dd = den.size() - 1;
    std::vector<Integer> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      Integer c = num[i];  // den is monic
      quot[i - dd] = c;
      if (c != 0)
        for (std::size_t k = 0; k <= dd; ++k) num[i - dd + k] -= c * den[k];
    }
    num = std::move(quot);
  }
  return num;
}

inline void reduce_mod_cyclotomic(QPoly& p, std::int64_t n) {
  const auto& phi = cyclotomic_cached(n);
  std::size_t deg = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    for (std::size_t k = 0; k <= deg; ++k) p[i - deg + k] -= c * phi[k];
  }
  p.resize(deg, Rational(0));
}

inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  QPoly q;
  trim(a);
  std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - db, Rational(0));
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    Rational c = a[i] / b.back();
    q[i - db] = c;
    for (std::size_t k = 0; k <= db; ++k) a[i - db + k] -= c * b[k];
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace detail

/// Element of Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1}, reduced
/// modulo the N-th cyclotomic polynomial.
class CycloNumber {
 public:
  CycloNumber() : conductor_(1), coeffs_(1, Rational(0)) {}
  CycloNumber(const Rational& q) : conductor_(1), coeffs_{q} {}  // NOLINT: implicit from Q
  CycloNumber(long v) : CycloNumber(Rational(v)) {}              // NOLINT
  CycloNumber(int v) : CycloNumber(Rational(v)) {}               // NOLINT

  static CycloNumber zero_at(std::int64_t conductor) {
    return from_poly(conductor, {});
  }

  /// Builds from an arbitrary polynomial in z (any length), reducing mod Phi_N.
  static CycloNumber from_poly(std::int64_t conductor, std::vector<Rational> poly) {
    CycloNumber out;
    out.conductor_ = check_conductor(conductor);
    detail::reduce_mod_cyclotomic(poly, conductor);
    out.coeffs_ = std::move(poly);
    return out;
  }

  /// zeta_order^exponent, represented at the given conductor (order | conductor).
  static CycloNumber root_of_unity(std::int64_t order, std::int64_t exponent,
                                   std::int64_t conductor = 0) {
    if (conductor == 0) conductor = order;
    if (order <= 0 || conductor % order != 0)
      raise(ErrorCode::InvalidOperand, "root order must divide the conductor");
    std::int64_t power = mod_floor(exponent, order) * (conductor / order);
    std::vector<Rational> poly(static_cast<std::size_t>(power) + 1, Rational(0));
    poly[static_cast<std::size_t>(power)] = 1;
    return from_poly(conductor, std::move(poly));
  }

  std::int64_t conductor() const noexcept { return conductor_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
  }

  bool is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
  }

  /// Re-expresses this element in Q(zeta_target); target must be a multiple of the conductor.
  CycloNumber lift(std::int64_t target) const {
    if (target == conductor_) return *this;
    if (target % conductor_ != 0) raise(ErrorCode::InvalidOperand, "lift target is not a multiple");
    std::int64_t step = target / conductor_;
    std::vector<Rational> poly(coeffs_.size() == 0 ? 1 : (coeffs_.size() - 1) * step + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
    return from_poly(target, std::move(poly));
  }

  friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
    std::int64_t n = std::lcm(a.conductor_, b.conductor_);
    CycloNumber x = a.lift(n);
    const CycloNumber y = b.lift(n);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
  }
  friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) { return a + (-b); }
  CycloNumber operator-() const {
    CycloNumber x = *this;
    for (auto& c : x.coeffs_) c = -c;
    return x;
  }
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    if (a.conductor_ <= 2 && a.is_rational()) return b.scaled(a.coeffs_[0]);
    if (b.conductor_ <= 2 && b.is_rational()) return a.scaled(b.coeffs_[0]);
    std::int64_t n = std::lcm(a.conductor_, b.conductor_);
    const CycloNumber x = a.lift(n);
    const CycloNumber y = b.lift(n);
    std::vector<Rational> poly(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < y.coeffs_.size(); ++j) poly[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    return from_poly(n, std::move(poly));
  }
  friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) { return a * b.inverse(); }
  CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
  CycloNumber& operator-=(const CycloNumber& o) { return *this = *this - o; }
  CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }
  CycloNumber& operator/=(const CycloNumber& o) { return *this = *this / o; }

  CycloNumber scaled(const Rational& q) const {
    CycloNumber x = *this;
    for (auto& c : x.coeffs_) c *= q;
    return x;
  }

  /// Multiplicative inverse via the extended Euclidean algorithm against Phi_N.
  CycloNumber inverse() const {
    if (is_zero()) raise(ErrorCode::InvalidOperand, "division by zero in Q(zeta_N)");
    if (is_rational()) return CycloNumber(Rational(1) / coeffs_[0]).lift(conductor_);
    const auto& phi_z = detail::cyclotomic_cached(conductor_);
    detail::QPoly r0(phi_z.begin(), phi_z.end());
    detail::QPoly r1 = coeffs_;
    detail::trim(r1);
    detail::QPoly s0, s1{Rational(1)};  // s_i * a == r_i  (mod Phi)
    while (r1.size() > 1) {
      auto [q, r] = detail::divmod(r0, r1);
      detail::QPoly s = detail::sub(s0, detail::mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    // r1 is a nonzero constant because Phi_N is irreducible.
    Rational c = r1.at(0);
    for (auto& v : s1) v /= c;
    return from_poly(conductor_, std::move(s1));
  }

  /// Galois automorphism zeta_N -> zeta_N^k, gcd(k, N) = 1.
  CycloNumber galois(std::int64_t k) const {
    if (std::gcd(mod_floor(k, conductor_ == 1 ? 1 : conductor_), conductor_) != 1 && conductor_ > 1)
      raise(ErrorCode::InvalidOperand, "Galois exponent not coprime to conductor");
    std::int64_t kk = mod_floor(k, conductor_);
    std::vector<Rational> poly(static_cast<std::size_t>(conductor_), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      poly[static_cast<std::size_t>(mod_floor(static_cast<std::int64_t>(i) * kk, conductor_))] += coeffs_[i];
    return from_poly(conductor_, std::move(poly));
  }

  CycloNumber conj() const { return galois(-1); }

  CycloNumber pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNumber result = CycloNumber(1).lift(conductor_);
    CycloNumber base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const CycloNumber& a, const CycloNumber& b) {
    std::int64_t n = std::lcm(a.conductor_, b.conductor_);
    return a.lift(n).coeffs_ == b.lift(n).coeffs_;
  }
  friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

  /// Value under the standard embedding zeta_N -> exp(2 pi i / N).
  std::complex<double> to_complex() const {
    std::complex<double> sum = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      double angle = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(conductor_);
      sum += coeffs_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return sum;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0) {
        os << coeffs_[i].get_str();
      } else {
        if (coeffs_[i] != 1) os << "(" << coeffs_[i].get_str() << ")*";
        os << "z" << conductor_;
        if (i > 1) os << "^" << i;
      }
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  static std::int64_t check_conductor(std::int64_t n) {
    if (n < 1) raise(ErrorCode::InvalidOperand, "conductor must be positive");
    return n;
  }

  std::int64_t conductor_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const CycloNumber& a) { return a.is_zero(); }

/// zeta_order^exponent with the order minimal.
struct RootOfUnity {
  std::int64_t order = 1;
  std::int64_t exponent = 0;

  RootOfUnity() = default;
  RootOfUnity(std::int64_t n, std::int64_t k) : order(n), exponent(k) {
    if (n < 1) raise(ErrorCode::InvalidOperand, "root of unity order must be positive");
    exponent = mod_floor(exponent, order);
    std::int64_t g = std::gcd(exponent, order);
    if (exponent == 0) {
      order = 1;
    } else {
      order /= g;
      exponent /= g;
    }
  }

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    std::int64_t n = std::lcm(a.order, b.order);
    return {n, a.exponent * (n / a.order) + b.exponent * (n / b.order)};
  }
  RootOfUnity inverse() const { return {order, -exponent}; }
  RootOfUnity conj() const { return inverse(); }
  RootOfUnity pow(std::int64_t e) const { return {order, mod_floor(exponent * mod_floor(e, order), order)}; }
  bool is_dth_root(std::int64_t d) const { return d % order == 0; }

  /// Im(zeta) >= 0 decided from the exponent: angle 2 pi k / n lies in [0, pi].
  bool im_nonnegative() const { return 2 * exponent <= order; }

  CycloNumber to_cyclo(std::int64_t conductor = 0) const {
    return CycloNumber::root_of_unity(order, exponent, conductor == 0 ? order : conductor);
  }
  std::complex<double> to_complex() const {
    double a = 2.0 * M_PI * static_cast<double>(exponent) / static_cast<double>(order);
    return {std::cos(a), std::sin(a)};
  }

  std::string to_string() const {
    if (order == 1) return "1";
    if (order == 2) return "-1";
    std::string s = "zeta_" + std::to_string(order);
    if (exponent != 1) s += "^" + std::to_string(exponent);
    return s;
  }

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// Exact test whether a is a root of unity; the roots of unity of Q(zeta_N)
/// are exactly the lcm(2, N)-th roots.
inline std::optional<RootOfUnity> classify_root_of_unity(const CycloNumber& a) {
  if (a.is_zero()) return std::nullopt;
  std::int64_t n = a.conductor();
  std::int64_t m = n % 2 == 0 ? n : 2 * n;
  CycloNumber lifted = a.lift(m);
  for (std::int64_t j = 0; j < m; ++j)
    if (CycloNumber::root_of_unity(m, j, m) == lifted) return RootOfUnity(m, j);
  return std::nullopt;
}

inline RootOfUnity half_plane_class(const RootOfUnity& z, std::int64_t d) {
  if (d < 1 || !z.is_dth_root(d)) raise(ErrorCode::NotDthRoot, z.to_string() + " is not a " + std::to_string(d) + "-th root of unity");
  return z.im_nonnegative() ? z : z.conj();
}

struct Stratum {
  RootOfUnity zeta;
  bool realizable = true;
};

/// The d-th roots of unity with non-negative imaginary part, ordered by exponent.
inline std::vector<Stratum> enumerate_strata(std::int64_t d) {
  if (d < 2) raise(ErrorCode::InvalidDegree, "strata need d >= 2");
  std::vector<Stratum> out;
  for (std::int64_t k = 0; 2 * k <= d; ++k) {
    RootOfUnity z(d, k);
    // d = 2, zeta = 1 only yields a non-reduced quartic.
    out.push_back({z, !(d == 2 && k == 0)});
  }
  return out;
}

inline std::int64_t arithmetic_tuple_size(std::int64_t m) {
  if (m <= 4 || m == 6) raise(ErrorCode::ExcludedOrder, "order " + std::to_string(m) + " is excluded");
  return euler_phi(m) / 2;
}

}  // namespace zariski
