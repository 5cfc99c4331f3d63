#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zariski/polynomial.hpp"

namespace zariski {

/// Prime field element; the modulus is per thread so independent checks can
/// run concurrently with different primes.
class ModP {
 public:
  ModP() = default;
  ModP(long v) : v_(reduce(v)) {}  // NOLINT
  static ModP raw(std::uint64_t v) {
    ModP r;
    r.v_ = v % modulus();
    return r;
  }

  static std::uint64_t& modulus() {
    thread_local std::uint64_t p = 2147483647ULL;
    return p;
  }

  std::uint64_t value() const noexcept { return v_; }

  friend ModP operator+(ModP a, ModP b) { return raw(a.v_ + b.v_); }
  friend ModP operator-(ModP a, ModP b) { return raw(a.v_ + modulus() - b.v_); }
  ModP operator-() const { return raw(modulus() - v_); }
  friend ModP operator*(ModP a, ModP b) { return raw(a.v_ * b.v_); }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

  ModP pow(std::uint64_t e) const {
    ModP r(1), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }
  ModP inverse() const {
    if (v_ == 0) raise(ErrorCode::InvalidOperand, "division by zero mod p");
    return pow(modulus() - 2);
  }

 private:
  static std::uint64_t reduce(long v) {
    long p = static_cast<long>(modulus());
    long r = v % p;
    return static_cast<std::uint64_t>(r < 0 ? r + p : r);
  }
  std::uint64_t v_ = 0;
};

inline bool is_zero(const ModP& a) { return a.value() == 0; }

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Primes p = 1 (mod N) below 2^31, in decreasing order, skipping the first `skip`.
inline std::uint64_t split_prime(std::int64_t conductor, int skip) {
  std::uint64_t n = static_cast<std::uint64_t>(std::max<std::int64_t>(conductor, 2));
  std::uint64_t p = ((1ULL << 31) - 1) / n * n + 1;
  if (p >= (1ULL << 31)) p -= n;
  for (;; p -= n) {
    if (is_prime(p) && skip-- == 0) return p;
  }
}

// An element of exact order N in F_p (requires N | p - 1).
inline ModP primitive_root_of_order(std::int64_t conductor) {
  std::uint64_t p = ModP::modulus();
  std::uint64_t n = static_cast<std::uint64_t>(conductor);
  auto factors = prime_factors(n);
  for (std::uint64_t g = 2;; ++g) {
    ModP w = ModP::raw(g).pow((p - 1) / n);
    bool exact = true;
    for (auto q : factors)
      if (w.pow(n / q) == ModP(1)) exact = false;
    if (exact) return w;
  }
}

inline std::optional<ModP> reduce_rational(const Rational& q) {
  Integer p(static_cast<unsigned long>(ModP::modulus()));
  Integer den = q.get_den() % p;
  if (den == 0) return std::nullopt;
  Integer num = q.get_num() % p;
  if (num < 0) num += p;
  return ModP::raw(num.get_ui()) / ModP::raw(den.get_ui());
}

template <typename F>
using Terms = std::map<Exponent, F>;

template <typename F>
Terms<F> mul_terms(const Terms<F>& a, const Terms<F>& b) {
  Terms<F> r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      auto [it, ins] = r.try_emplace(e, ca * cb);
      if (!ins) it->second = it->second + ca * cb;
    }
  for (auto it = r.begin(); it != r.end();) it = is_zero(it->second) ? r.erase(it) : std::next(it);
  return r;
}

template <typename F>
Terms<F> substitute_terms(const Terms<F>& f, int degree, const std::array<std::array<F, 3>, 3>& m) {
  std::array<std::vector<Terms<F>>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    Terms<F> lin;
    for (int j = 0; j < 3; ++j) {
      Exponent e{0, 0, 0};
      e[static_cast<std::size_t>(j)] = 1;
      if (!is_zero(m[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)])) lin[e] = m[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)];
    }
    auto& pw = powers[static_cast<std::size_t>(v)];
    pw.push_back(Terms<F>{{Exponent{0, 0, 0}, F(1)}});
    for (int k = 1; k <= degree; ++k) pw.push_back(mul_terms(pw.back(), lin));
  }
  Terms<F> out;
  for (const auto& [e, c] : f) {
    Terms<F> t = mul_terms(mul_terms(powers[0][static_cast<std::size_t>(e[0])], powers[1][static_cast<std::size_t>(e[1])]),
                           powers[2][static_cast<std::size_t>(e[2])]);
    for (const auto& [te, tc] : t) {
      auto [it, ins] = out.try_emplace(te, c * tc);
      if (!ins) it->second = it->second + c * tc;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

template <typename F>
F eval_terms(const Terms<F>& f, const std::array<F, 3>& p) {
  F acc(0);
  for (const auto& [e, c] : f) {
    F t = c;
    for (int v = 0; v < 3; ++v)
      for (int k = 0; k < e[static_cast<std::size_t>(v)]; ++k) t = t * p[static_cast<std::size_t>(v)];
    acc = acc + t;
  }
  return acc;
}

template <typename F>
Terms<F> partial_terms(const Terms<F>& f, int v) {
  Terms<F> out;
  for (const auto& [e, c] : f) {
    int k = e[static_cast<std::size_t>(v)];
    if (k == 0) continue;
    Exponent ne = e;
    ne[static_cast<std::size_t>(v)] -= 1;
    F val = c * F(static_cast<long>(k));
    if (!is_zero(val)) out[ne] = val;
  }
  return out;
}

// Affine chart z = 1 as a polynomial in y with coefficients in F[x].
template <typename F>
std::vector<UniPoly<F>> affine_in_y(const Terms<F>& f, int y_degree) {
  std::vector<std::vector<F>> coeffs(static_cast<std::size_t>(y_degree) + 1);
  for (const auto& [e, c] : f) {
    auto& row = coeffs[static_cast<std::size_t>(e[1])];
    if (row.size() <= static_cast<std::size_t>(e[0])) row.resize(static_cast<std::size_t>(e[0]) + 1, F(0));
    row[static_cast<std::size_t>(e[0])] = c;
  }
  std::vector<UniPoly<F>> out;
  for (auto& row : coeffs) out.emplace_back(std::move(row));
  return out;
}

template <typename F>
UniPoly<F> resultant_in_y(const std::vector<UniPoly<F>>& a, const std::vector<UniPoly<F>>& b, int x_degree_bound) {
  std::vector<F> xs, ys;
  for (int i = 0; i <= x_degree_bound; ++i) {
    F x0(static_cast<long>(i));
    std::vector<F> av, bv;
    for (const auto& c : a) av.push_back(c(x0));
    for (const auto& c : b) bv.push_back(c(x0));
    xs.push_back(x0);
    ys.push_back(sylvester_resultant(av, bv));
  }
  return interpolate(xs, ys);
}

template <typename F>
UniPoly<F> poly_mod(const UniPoly<F>& a, const UniPoly<F>& h) {
  return divmod(a, h).second;
}

// Returns (g, s) with g = gcd(c, h) monic and s * c = g (mod h).
template <typename F>
std::pair<UniPoly<F>, UniPoly<F>> ext_gcd(const UniPoly<F>& c, const UniPoly<F>& h) {
  UniPoly<F> r0 = h, r1 = c, s0, s1 = UniPoly<F>::constant(F(1));
  while (!r1.is_zero_poly()) {
    auto [q, r] = divmod(r0, r1);
    UniPoly<F> s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  F inv = F(1) / r0.lead();
  return {r0.monic(), s0 * UniPoly<F>::constant(inv)};
}

template <typename F>
using YPoly = std::vector<UniPoly<F>>;

template <typename F>
struct LeadStatus {
  bool split = false;
  UniPoly<F> h1, h2;
  UniPoly<F> lead_inverse;
};

// Drops leading coefficients that vanish mod h and checks that the new
// leading coefficient is a unit; otherwise reports a factorization of h.
template <typename F>
LeadStatus<F> normalize_lead(YPoly<F>& p, const UniPoly<F>& h) {
  for (auto& c : p) c = poly_mod(c, h);
  while (!p.empty() && p.back().is_zero_poly()) p.pop_back();
  LeadStatus<F> st;
  if (p.empty()) return st;
  auto [g, s] = ext_gcd(p.back(), h);
  if (g.degree() == 0) {
    st.lead_inverse = s;
    return st;
  }
  st.split = true;
  st.h1 = g;
  st.h2 = divmod(h, g).first;
  return st;
}

// Whether the polynomials share a root y over some residue field of F[x]/(h),
// with h square-free (dynamic evaluation: h is split when a zero divisor appears).
template <typename F>
bool common_root_mod(const UniPoly<F>& h, const std::vector<YPoly<F>>& polys) {
  if (h.degree() < 1) return false;
  YPoly<F> g = polys[0];
  for (std::size_t k = 1; k <= polys.size(); ++k) {
    YPoly<F> a = g;
    if (k == polys.size()) {
      auto st = normalize_lead(a, h);
      if (st.split) return common_root_mod(st.h1, polys) || common_root_mod(st.h2, polys);
      return a.size() >= 2;
    }
    YPoly<F> b = polys[k];
    for (;;) {
      auto st = normalize_lead(b, h);
      if (st.split) return common_root_mod(st.h1, polys) || common_root_mod(st.h2, polys);
      if (b.empty()) break;
      for (auto& c : a) c = poly_mod(c, h);
      while (!a.empty() && a.back().is_zero_poly()) a.pop_back();
      while (a.size() >= b.size()) {
        UniPoly<F> f = poly_mod(a.back() * st.lead_inverse, h);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = poly_mod(a[shift + i] - f * b[i], h);
        a.pop_back();
        while (!a.empty() && a.back().is_zero_poly()) a.pop_back();
      }
      std::swap(a, b);
    }
    g = a;
  }
  return false;
}

template <typename F>
UniPoly<F> squarefree_part(const UniPoly<F>& h) {
  UniPoly<F> g = gcd(h, h.derivative());
  return divmod(h, g).first.monic();
}

inline bool gcd_certainly_trivial(const UniPoly<ModP>&, const UniPoly<ModP>&) { return false; }

inline std::optional<UniPoly<ModP>> reduce_univariate(const UniPoly<CycloNumber>& a, std::int64_t conductor, const ModP& w) {
  std::vector<ModP> out;
  for (const auto& c : a.coeffs()) {
    ModP acc(0), wp(1);
    CycloNumber lifted = c.lift(conductor);
    for (const auto& q : lifted.coeffs()) {
      auto r = reduce_rational(q);
      if (!r) return std::nullopt;
      acc = acc + *r * wp;
      wp = wp * w;
    }
    out.push_back(acc);
  }
  return UniPoly<ModP>(std::move(out));
}

// The degree of a gcd can only grow under reduction modulo a prime that keeps
// both leading coefficients, so a trivial modular gcd proves a trivial gcd.
inline bool gcd_certainly_trivial(const UniPoly<CycloNumber>& a, const UniPoly<CycloNumber>& b) {
  if (a.is_zero_poly() || b.is_zero_poly()) return false;
  std::int64_t n = 1;
  for (const auto* p : {&a, &b})
    for (const auto& c : p->coeffs()) n = std::lcm(n, std::max<std::int64_t>(1, c.conductor()));
  std::uint64_t saved = ModP::modulus();
  bool trivial = false;
  for (int skip = 0; skip < 3 && !trivial; ++skip) {
    ModP::modulus() = split_prime(n, skip);
    ModP w = primitive_root_of_order(n);
    auto ra = reduce_univariate(a, n, w), rb = reduce_univariate(b, n, w);
    if (!ra || !rb || ra->degree() != a.degree() || rb->degree() != b.degree()) continue;
    trivial = gcd(*ra, *rb).degree() == 0;
  }
  ModP::modulus() = saved;
  return trivial;
}

enum class SmoothOutcome { Smooth, Singular };

// Decides whether the projective curve f = 0 of the given degree is smooth.
template <typename F>
SmoothOutcome smoothness_over(Terms<F> f, int degree, std::mt19937& rng) {
  if (degree <= 1) return f.empty() ? SmoothOutcome::Singular : SmoothOutcome::Smooth;
  std::array<F, 3> e_y{F(0), F(1), F(0)};
  std::uniform_int_distribution<long> small(-5, 5);
  while (is_zero(eval_terms(f, e_y))) {
    std::array<std::array<F, 3>, 3> m;
    for (auto& row : m)
      for (auto& v : row) v = F(small(rng));
    DenseMatrix<F> dm(3, std::vector<F>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) dm[i][j] = m[i][j];
    if (is_zero(determinant(dm))) continue;
    f = substitute_terms(f, degree, m);
  }
  std::array<Terms<F>, 3> d{partial_terms(f, 0), partial_terms(f, 1), partial_terms(f, 2)};

  // Points on z = 0: [1:0:0] and [x:1:0].
  std::array<F, 3> e_x{F(1), F(0), F(0)};
  bool all_zero = true;
  for (const auto& p : d) all_zero = all_zero && is_zero(eval_terms(p, e_x));
  if (all_zero) return SmoothOutcome::Singular;
  UniPoly<F> at_infinity;
  for (const auto& p : d) {
    std::vector<F> c(static_cast<std::size_t>(degree), F(0));
    for (const auto& [e, v] : p)
      if (e[2] == 0) c[static_cast<std::size_t>(e[0])] = v;
    at_infinity = gcd(at_infinity, UniPoly<F>(std::move(c)));
  }
  if (at_infinity.is_zero_poly() || at_infinity.degree() >= 1) return SmoothOutcome::Singular;

  // Affine part: x-coordinates of singular points divide gcd(Res_y(f, f_x), Res_y(f, f_y)).
  YPoly<F> fa = affine_in_y(f, degree);
  YPoly<F> fx = affine_in_y(d[0], degree - 1);
  YPoly<F> fy = affine_in_y(d[1], degree - 1);
  int bound = degree * (degree - 1);
  UniPoly<F> r1 = resultant_in_y(fa, fx, bound);
  UniPoly<F> r2 = resultant_in_y(fa, fy, bound);
  if (gcd_certainly_trivial(r1, r2)) return SmoothOutcome::Smooth;
  UniPoly<F> h = gcd(r1, r2);
  if (h.is_zero_poly()) return SmoothOutcome::Singular;
  if (h.degree() == 0) return SmoothOutcome::Smooth;
  h = squarefree_part(h);
  return common_root_mod(h, std::vector<YPoly<F>>{fa, fx, fy}) ? SmoothOutcome::Singular : SmoothOutcome::Smooth;
}

inline Terms<CycloNumber> to_terms(const MPoly& f) { return Terms<CycloNumber>(f.terms().begin(), f.terms().end()); }

inline std::optional<Terms<ModP>> reduce_terms(const MPoly& f, std::int64_t conductor) {
  ModP w = primitive_root_of_order(conductor);
  Terms<ModP> out;
  for (const auto& [e, c] : f.terms()) {
    CycloNumber lifted = c.lift(conductor);
    ModP acc(0), wp(1);
    for (const auto& q : lifted.coeffs()) {
      auto r = reduce_rational(q);
      if (!r) return std::nullopt;
      acc = acc + *r * wp;
      wp = wp * w;
    }
    if (!is_zero(acc)) out[e] = acc;
  }
  return out;
}

}  // namespace detail

struct SmoothnessReport {
  bool smooth = false;
  std::string method;  // "exact-resultant" or "modular"
  bool probabilistic = false;
  std::uint64_t prime = 0;
};

/// Exact smoothness test over Q(zeta_N) via resultants and dynamic evaluation.
inline bool is_smooth_exact(const MPoly& f) {
  std::mt19937 rng(20240531);
  return detail::smoothness_over(detail::to_terms(f), f.degree(), rng) == detail::SmoothOutcome::Smooth;
}

/// Smoothness after reduction modulo a prime p = 1 (mod N) where Q(zeta_N) splits.
/// A smooth reduction certifies smoothness; a singular one is retried with other primes.
inline SmoothnessReport is_smooth_modular(const MPoly& f, int attempts = 3) {
  std::int64_t n = std::max<std::int64_t>(f.conductor(), 1);
  std::uint64_t saved = ModP::modulus();
  SmoothnessReport rep{false, "modular", true, 0};
  std::mt19937 rng(20240531);
  for (int skip = 0, tried = 0; tried < attempts && skip < 50; ++skip) {
    ModP::modulus() = detail::split_prime(n, skip);
    auto reduced = detail::reduce_terms(f, n);
    if (!reduced || reduced->empty()) continue;
    ++tried;
    rep.prime = ModP::modulus();
    if (detail::smoothness_over(*reduced, f.degree(), rng) == detail::SmoothOutcome::Smooth) {
      rep.smooth = true;
      break;
    }
  }
  ModP::modulus() = saved;
  return rep;
}

/// Exact for degree <= 6, modular above.
inline SmoothnessReport check_smoothness(const MPoly& f) {
  if (f.degree() <= 6) return {is_smooth_exact(f), "exact-resultant", false, 0};
  return is_smooth_modular(f);
}

}  // namespace zariski
