#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zariski/cyclotomic.hpp"
#include "zariski/linalg.hpp"
#include "zariski/univariate.hpp"

namespace zariski {

using Exponent = std::array<int, 3>;
using ProjPoint = std::array<CycloNumber, 3>;
using Matrix3 = std::array<std::array<CycloNumber, 3>, 3>;

inline Matrix3 identity3() {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = CycloNumber(i == j ? 1 : 0);
  return m;
}

inline DenseMatrix<CycloNumber> to_dense(const Matrix3& m) {
  DenseMatrix<CycloNumber> d(3, std::vector<CycloNumber>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d[i][j] = m[i][j];
  return d;
}

inline Matrix3 from_dense(const DenseMatrix<CycloNumber>& d) {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = d[i][j];
  return m;
}

inline Matrix3 operator*(const Matrix3& a, const Matrix3& b) { return from_dense(matmul(to_dense(a), to_dense(b))); }

inline CycloNumber det3(const Matrix3& m) { return determinant(to_dense(m)); }

inline Matrix3 inverse3(const Matrix3& m) {
  auto inv = inverse(to_dense(m));
  if (!inv) raise(ErrorCode::SingularMatrix, "matrix is not invertible");
  return from_dense(*inv);
}

inline const char* variable_name(int i) { return i == 0 ? "x" : (i == 1 ? "y" : "z"); }

/// Sparse homogeneous polynomial in x, y, z. Zero coefficients are never
/// stored and every exponent triple sums to degree().
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(int degree) : degree_(degree) {}

  static MPoly monomial(const Exponent& e, const CycloNumber& c = CycloNumber(1)) {
    MPoly p(e[0] + e[1] + e[2]);
    p.add_term(e, c);
    return p;
  }
  static MPoly variable(int i) {
    Exponent e{0, 0, 0};
    e[static_cast<std::size_t>(i)] = 1;
    return monomial(e);
  }
  static MPoly x() { return variable(0); }
  static MPoly y() { return variable(1); }
  static MPoly z() { return variable(2); }
  static MPoly linear(const CycloNumber& a, const CycloNumber& b, const CycloNumber& c) {
    MPoly p(1);
    p.add_term({1, 0, 0}, a);
    p.add_term({0, 1, 0}, b);
    p.add_term({0, 0, 1}, c);
    return p;
  }
  static MPoly constant(const CycloNumber& c) {
    MPoly p(0);
    p.add_term({0, 0, 0}, c);
    return p;
  }

  int degree() const noexcept { return degree_; }
  const std::map<Exponent, CycloNumber>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  CycloNumber coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? CycloNumber(0) : it->second;
  }

  void add_term(const Exponent& e, const CycloNumber& c) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != degree_)
      raise(ErrorCode::DegreeMismatch, "term degree differs from polynomial degree");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree_ != b.degree_) raise(ErrorCode::DegreeMismatch, "sum of forms of different degree");
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
  }
  friend MPoly operator*(const CycloNumber& s, const MPoly& a) {
    MPoly r(a.degree_);
    for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
    return r;
  }
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly pow(int e) const {
    MPoly result = constant(CycloNumber(1));
    MPoly base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  /// Coefficient-wise map, e.g. a Galois automorphism.
  template <typename F>
  MPoly map_coeffs(F&& f) const {
    MPoly r(degree_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  std::int64_t conductor() const {
    std::int64_t n = 1;
    for (const auto& [e, c] : terms_) n = std::lcm(n, c.conductor());
    return n;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.is_zero()) return true;
    if (a.degree_ != b.degree_) return false;
    auto it = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
      if (it->first != e || it->second != c) return false;
      ++it;
    }
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) s += " + ";
      first = false;
      s += "(" + it->second.to_string() + ")";
      for (int v = 0; v < 3; ++v) {
        int k = it->first[static_cast<std::size_t>(v)];
        if (k == 0) continue;
        s += std::string("*") + variable_name(v);
        if (k > 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

 private:
  int degree_ = 0;
  std::map<Exponent, CycloNumber> terms_;
};

/// Form of degree n in two variables: coeffs[i] multiplies u^i v^(n-i).
struct BinaryForm {
  int degree = 0;
  std::vector<CycloNumber> coeffs;
  std::string u = "u";
  std::string v = "v";

  BinaryForm() = default;
  BinaryForm(int n, std::vector<CycloNumber> c, std::string un = "u", std::string vn = "v")
      : degree(n), coeffs(std::move(c)), u(std::move(un)), v(std::move(vn)) {
    if (static_cast<int>(coeffs.size()) != n + 1) raise(ErrorCode::DegreeMismatch, "binary form coefficient count");
  }

  bool is_zero() const {
    for (const auto& c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }

  /// p(u) = form(u, 1).
  UniPoly<CycloNumber> dehomogenized() const { return UniPoly<CycloNumber>(coeffs); }

  CycloNumber evaluate(const CycloNumber& uu, const CycloNumber& vv) const {
    CycloNumber acc(0);
    for (int i = 0; i <= degree; ++i)
      if (!coeffs[static_cast<std::size_t>(i)].is_zero())
        acc += coeffs[static_cast<std::size_t>(i)] * uu.pow(i) * vv.pow(degree - i);
    return acc;
  }

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.degree == b.degree && a.coeffs == b.coeffs;
  }

  std::string to_string() const {
    std::string s;
    bool first = true;
    for (int i = degree; i >= 0; --i) {
      const auto& c = coeffs[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      if (!first) s += " + ";
      first = false;
      s += "(" + c.to_string() + ")";
      if (i > 0) s += "*" + u + (i > 1 ? "^" + std::to_string(i) : "");
      if (degree - i > 0) s += "*" + v + (degree - i > 1 ? "^" + std::to_string(degree - i) : "");
    }
    return first ? "0" : s;
  }
};

/// a*u + b*v with the first nonzero coefficient equal to 1.
struct LinearBinary {
  CycloNumber a;
  CycloNumber b;

  BinaryForm power(int d, const std::string& un = "u", const std::string& vn = "v") const {
    std::vector<CycloNumber> c(static_cast<std::size_t>(d) + 1);
    Integer binom = 1;
    for (int i = 0; i <= d; ++i) {
      // coefficient of u^i v^(d-i) is C(d, i) a^i b^(d-i)
      c[static_cast<std::size_t>(i)] = CycloNumber(Rational(binom)) * a.pow(i) * b.pow(d - i);
      binom = binom * (d - i) / (i + 1);
    }
    return BinaryForm(d, std::move(c), un, vn);
  }
  friend bool operator==(const LinearBinary&, const LinearBinary&) = default;
};

/// The line a x + b y + c z = 0, normalized so the first nonzero coefficient is 1.
class LineForm {
 public:
  LineForm(const CycloNumber& a, const CycloNumber& b, const CycloNumber& c) : coef_{a, b, c} {
    int p = pivot();
    if (p < 0) raise(ErrorCode::InvalidOperand, "line form is identically zero");
    CycloNumber inv = coef_[static_cast<std::size_t>(p)].inverse();
    for (auto& v : coef_) v *= inv;
  }

  const std::array<CycloNumber, 3>& coeffs() const noexcept { return coef_; }
  const CycloNumber& operator[](int i) const { return coef_[static_cast<std::size_t>(i)]; }

  int pivot() const {
    for (int i = 0; i < 3; ++i)
      if (!coef_[static_cast<std::size_t>(i)].is_zero()) return i;
    return -1;
  }

  CycloNumber evaluate(const ProjPoint& p) const { return coef_[0] * p[0] + coef_[1] * p[1] + coef_[2] * p[2]; }

  MPoly as_poly() const { return MPoly::linear(coef_[0], coef_[1], coef_[2]); }

  /// Coordinate line x_i = 0 when this is one; otherwise -1.
  int coordinate_index() const {
    int p = pivot();
    for (int i = p + 1; i < 3; ++i)
      if (!coef_[static_cast<std::size_t>(i)].is_zero()) return -1;
    return p;
  }

  friend bool operator==(const LineForm& a, const LineForm& b) { return a.coef_ == b.coef_; }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < 3; ++i) {
      if (coef_[static_cast<std::size_t>(i)].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + coef_[static_cast<std::size_t>(i)].to_string() + ")*" + variable_name(i);
    }
    return s + " = 0";
  }

 private:
  std::array<CycloNumber, 3> coef_;
};

inline CycloNumber evaluate(const MPoly& f, const ProjPoint& p) {
  CycloNumber acc(0);
  std::array<std::vector<CycloNumber>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    auto& pw = powers[static_cast<std::size_t>(v)];
    pw.push_back(CycloNumber(1));
    for (int k = 1; k <= f.degree(); ++k) pw.push_back(pw.back() * p[static_cast<std::size_t>(v)]);
  }
  for (const auto& [e, c] : f.terms())
    acc += c * powers[0][static_cast<std::size_t>(e[0])] * powers[1][static_cast<std::size_t>(e[1])] *
           powers[2][static_cast<std::size_t>(e[2])];
  return acc;
}

namespace detail {

// f(M v) without the invertibility check; row i of M is the image of variable i.
inline MPoly substitute_rows(const MPoly& f, const Matrix3& m) {
  std::array<std::vector<MPoly>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    auto& pw = powers[static_cast<std::size_t>(v)];
    MPoly lin = MPoly::linear(m[static_cast<std::size_t>(v)][0], m[static_cast<std::size_t>(v)][1],
                              m[static_cast<std::size_t>(v)][2]);
    pw.push_back(MPoly::constant(CycloNumber(1)));
    for (int k = 1; k <= f.degree(); ++k) pw.push_back(pw.back() * lin);
  }
  MPoly out(f.degree());
  std::map<std::pair<int, int>, MPoly> xy_cache;
  for (const auto& [e, c] : f.terms()) {
    auto key = std::make_pair(e[0], e[1]);
    auto it = xy_cache.find(key);
    if (it == xy_cache.end())
      it = xy_cache.emplace(key, powers[0][static_cast<std::size_t>(e[0])] * powers[1][static_cast<std::size_t>(e[1])]).first;
    out += c * (it->second * powers[2][static_cast<std::size_t>(e[2])]);
  }
  return out;
}

}  // namespace detail

/// Returns f(M v): variable i is replaced by sum_j M[i][j] x_j.
inline MPoly linear_substitute(const MPoly& f, const Matrix3& m) {
  if (det3(m).is_zero()) raise(ErrorCode::SingularMatrix, "substitution matrix is singular");
  return detail::substitute_rows(f, m);
}

/// Restriction of f to the line: the pivot variable of L is eliminated and the
/// result is a binary form in the two remaining variables (u = first of them).
inline BinaryForm restrict_to_line(const MPoly& f, const LineForm& line) {
  int p = line.pivot();
  int q = p == 0 ? 1 : 0;
  int r = p == 2 ? 1 : 2;
  Matrix3 m = identity3();
  m[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)] = CycloNumber(0);
  m[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = -line[q];
  m[static_cast<std::size_t>(p)][static_cast<std::size_t>(r)] = -line[r];
  MPoly g = detail::substitute_rows(f, m);
  std::vector<CycloNumber> coeffs(static_cast<std::size_t>(f.degree()) + 1, CycloNumber(0));
  for (const auto& [e, c] : g.terms()) coeffs[static_cast<std::size_t>(e[static_cast<std::size_t>(q)])] = c;
  return BinaryForm(f.degree(), std::move(coeffs), variable_name(q), variable_name(r));
}

inline BinaryForm restrict_to_coordinate_line(const MPoly& f, int index) {
  CycloNumber a(index == 0 ? 1 : 0), b(index == 1 ? 1 : 0), c(index == 2 ? 1 : 0);
  return restrict_to_line(f, LineForm(a, b, c));
}

using LatticePoint = std::array<int, 2>;

struct NewtonPolygon {
  std::vector<LatticePoint> support;
  std::vector<LatticePoint> hull;  // counterclockwise, vertices only
  std::vector<std::pair<LatticePoint, LatticePoint>> edges;
};

/// The two affine coordinates of a chart: chart z -> (x, y), chart x -> (y, z), chart y -> (x, z).
inline std::pair<int, int> chart_coordinates(int chart) {
  if (chart == 2) return {0, 1};
  if (chart == 0) return {1, 2};
  return {0, 2};
}

namespace detail {

inline long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<long>(a[0] - o[0]) * (b[1] - o[1]) - static_cast<long>(a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain; collinear points are dropped.
inline std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return pts;
  std::vector<LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace detail

inline NewtonPolygon newton_polygon(const MPoly& f, int chart) {
  if (f.is_zero()) raise(ErrorCode::InvalidOperand, "Newton polygon of the zero polynomial");
  auto [a, b] = chart_coordinates(chart);
  NewtonPolygon np;
  for (const auto& [e, c] : f.terms())
    np.support.push_back({e[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(b)]});
  np.hull = detail::convex_hull(np.support);
  if (np.hull.size() == 2) {
    np.edges.push_back({np.hull[0], np.hull[1]});
  } else if (np.hull.size() > 2) {
    for (std::size_t i = 0; i < np.hull.size(); ++i) np.edges.push_back({np.hull[i], np.hull[(i + 1) % np.hull.size()]});
  }
  return np;
}

/// Terms of f on the segment from `from` to `to`, as a binary form whose
/// coefficient i sits at from + i * step (step = primitive edge direction).
inline BinaryForm edge_polynomial(const MPoly& f, int chart, const LatticePoint& from, const LatticePoint& to) {
  NewtonPolygon np = newton_polygon(f, chart);
  bool found = false;
  for (const auto& [p, q] : np.edges)
    if ((p == from && q == to) || (p == to && q == from)) found = true;
  if (!found) raise(ErrorCode::NotAnEdge, "segment is not an edge of the Newton polygon");
  int dx = to[0] - from[0], dy = to[1] - from[1];
  int g = std::gcd(std::abs(dx), std::abs(dy));
  int sx = dx / g, sy = dy / g;
  auto [a, b] = chart_coordinates(chart);
  std::vector<CycloNumber> coeffs(static_cast<std::size_t>(g) + 1, CycloNumber(0));
  for (const auto& [e, c] : f.terms()) {
    int px = e[static_cast<std::size_t>(a)] - from[0], py = e[static_cast<std::size_t>(b)] - from[1];
    if (static_cast<long>(px) * sy != static_cast<long>(py) * sx) continue;
    int t = sx != 0 ? px / sx : py / sy;
    if (t < 0 || t > g || px != t * sx || py != t * sy) continue;
    coeffs[static_cast<std::size_t>(t)] = c;
  }
  return BinaryForm(g, std::move(coeffs));
}

/// Decides exactly whether g = c * l^d for a linear form l; l is normalized
/// with its first nonzero coefficient (u before v) equal to 1.
inline std::optional<std::pair<CycloNumber, LinearBinary>> dth_power_test(const BinaryForm& g, int d) {
  if (g.degree != d) raise(ErrorCode::DegreeMismatch, "form degree differs from d");
  int lo = -1, hi = -1;
  for (int i = 0; i <= d; ++i) {
    if (g.coeffs[static_cast<std::size_t>(i)].is_zero()) continue;
    if (lo < 0) lo = i;
    hi = i;
  }
  if (lo < 0) return std::nullopt;
  if (lo == hi) {
    if (lo == d) return std::make_pair(g.coeffs[static_cast<std::size_t>(d)], LinearBinary{CycloNumber(1), CycloNumber(0)});
    if (lo == 0) return std::make_pair(g.coeffs[0], LinearBinary{CycloNumber(0), CycloNumber(1)});
    return std::nullopt;
  }
  if (lo != 0 || hi != d) return std::nullopt;
  // l = u + r v: the u^d and u^(d-1) v coefficients fix c and r.
  CycloNumber c = g.coeffs[static_cast<std::size_t>(d)];
  CycloNumber r = g.coeffs[static_cast<std::size_t>(d - 1)] / (c * CycloNumber(static_cast<long>(d)));
  LinearBinary l{CycloNumber(1), r};
  BinaryForm expanded = l.power(d);
  for (int i = 0; i <= d; ++i)
    if (c * expanded.coeffs[static_cast<std::size_t>(i)] != g.coeffs[static_cast<std::size_t>(i)]) return std::nullopt;
  return std::make_pair(c, l);
}

/// Exact quotient f / g when g divides f (lex division by a single divisor).
inline std::optional<MPoly> exact_divide(const MPoly& f, const MPoly& g) {
  if (g.is_zero()) raise(ErrorCode::InvalidOperand, "division by the zero polynomial");
  if (f.is_zero()) return MPoly(std::max(0, f.degree() - g.degree()));
  if (f.degree() < g.degree()) return std::nullopt;
  const auto& [lead_e, lead_c] = *g.terms().rbegin();
  CycloNumber lead_inv = lead_c.inverse();
  MPoly rem = f;
  MPoly quot(f.degree() - g.degree());
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms().rbegin();
    Exponent q{e[0] - lead_e[0], e[1] - lead_e[1], e[2] - lead_e[2]};
    if (q[0] < 0 || q[1] < 0 || q[2] < 0) return std::nullopt;
    CycloNumber qc = c * lead_inv;
    quot.add_term(q, qc);
    rem = rem - MPoly::monomial(q, qc) * g;
  }
  return quot;
}

inline std::array<MPoly, 3> partials(const MPoly& f) {
  int deg = std::max(0, f.degree() - 1);
  std::array<MPoly, 3> out{MPoly(deg), MPoly(deg), MPoly(deg)};
  for (const auto& [e, c] : f.terms())
    for (int v = 0; v < 3; ++v) {
      int k = e[static_cast<std::size_t>(v)];
      if (k == 0) continue;
      Exponent ne = e;
      ne[static_cast<std::size_t>(v)] -= 1;
      out[static_cast<std::size_t>(v)].add_term(ne, c * CycloNumber(static_cast<long>(k)));
    }
  return out;
}

inline CycloNumber resultant(const BinaryForm& g, const BinaryForm& h) {
  return sylvester_resultant(g.coeffs, h.coeffs);
}

inline bool coprime_forms(const BinaryForm& g, const BinaryForm& h) {
  if (g.is_zero() || h.is_zero()) raise(ErrorCode::InvalidOperand, "coprimality of a zero form");
  return !resultant(g, h).is_zero();
}

}  // namespace zariski
