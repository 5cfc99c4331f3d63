#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zariski/polynomial.hpp"
#include "zariski/smoothness.hpp"

namespace zariski {

enum class Family { Sigma, Tilde, Hat, ArtalShirane };

constexpr std::string_view to_string(Family f) {
  switch (f) {
    case Family::Sigma: return "sigma";
    case Family::Tilde: return "tilde";
    case Family::Hat: return "hat";
    case Family::ArtalShirane: return "artal_shirane";
  }
  return "?";
}

inline Family family_from_string(std::string_view s) {
  if (s == "sigma") return Family::Sigma;
  if (s == "tilde") return Family::Tilde;
  if (s == "hat") return Family::Hat;
  if (s == "artal_shirane") return Family::ArtalShirane;
  raise(ErrorCode::InvalidOperand, "unknown family '" + std::string(s) + "'");
}

struct CurveSpec {
  Family family = Family::Hat;
  int d = 0;
  MPoly main;
  std::vector<LineForm> lines;
  std::int64_t conductor = 1;

  int total_degree() const { return main.degree() + static_cast<int>(lines.size()); }

  /// Structural invariants of the family (degrees and line count).
  void check_shape() const {
    if (d < 1) raise(ErrorCode::InvalidDegree, "curve degree parameter must be positive");
    if (!lines.empty() && lines.size() != 3) raise(ErrorCode::PrecondViolation, "a curve carries 0 or 3 lines");
    switch (family) {
      case Family::Sigma:
        if (!lines.empty() || main.degree() != 2 * d) raise(ErrorCode::PrecondViolation, "sigma curves have degree 2d and no lines");
        break;
      case Family::Tilde:
        if (lines.size() != 3 || main.degree() != 2 * d) raise(ErrorCode::PrecondViolation, "tilde curves have degree 2d plus three lines");
        break;
      case Family::Hat:
        if (lines.size() != 3 || main.degree() != d) raise(ErrorCode::PrecondViolation, "hat curves have degree d plus three lines");
        break;
      case Family::ArtalShirane:
        if (lines.size() != 3 || main.degree() != d) raise(ErrorCode::PrecondViolation, "curve type needs degree d plus three lines");
        break;
    }
  }
};

inline std::vector<LineForm> coordinate_triangle() {
  return {LineForm(1, 0, 0), LineForm(0, 1, 0), LineForm(0, 0, 1)};
}

inline Matrix3 lines_matrix(const std::vector<LineForm>& lines) {
  Matrix3 a;
  for (std::size_t i = 0; i < 3; ++i) a[i] = lines[i].coeffs();
  return a;
}

inline bool lines_in_general_position(const std::vector<LineForm>& lines) {
  return lines.size() == 3 && !det3(lines_matrix(lines)).is_zero();
}

/// Image of a line under the substitution v -> M v: the line L(M v) = 0.
inline LineForm substitute_line(const LineForm& l, const Matrix3& m) {
  std::array<CycloNumber, 3> c{CycloNumber(0), CycloNumber(0), CycloNumber(0)};
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) c[j] += l.coeffs()[i] * m[i][j];
  return LineForm(c[0], c[1], c[2]);
}

inline CurveSpec substitute_curve(const CurveSpec& c, const Matrix3& m) {
  CurveSpec out = c;
  out.main = linear_substitute(c.main, m);
  out.lines.clear();
  for (const auto& l : c.lines) out.lines.push_back(substitute_line(l, m));
  return out;
}

struct StratumLabel {
  RootOfUnity zeta;
  bool realizable = true;
  int genus = 0;
};

inline int plane_genus(int d) { return (d - 1) * (d - 2) / 2; }

inline StratumLabel make_label(const RootOfUnity& raw, int d) {
  RootOfUnity z = half_plane_class(raw, d);
  return {z, !(d == 2 && z.order == 1), plane_genus(d)};
}

// ---------------------------------------------------------------------------
// Constructions

inline bool is_root_of_minus_one(const RootOfUnity& t, int d) { return t.pow(d) == RootOfUnity(2, 1); }

struct KummerCurve {
  int variant = 1;
  CurveSpec curve;         // normalized model, lines on the coordinate triangle
  CurveSpec fermat_model;  // Fermat curve with the three Kummer lines
  Matrix3 change;          // curve.main = fermat(change * v)
  RootOfUnity predicted;   // raw predicted value before the half-plane class
  bool degenerate = false;
};

inline MPoly fermat_curve(int d) { return MPoly::x().pow(d) + MPoly::y().pow(d) + MPoly::z().pow(d); }

/// The d tangent lines at inflection points of the Fermat curve.
inline LineForm kummer_line(char axis, const CycloNumber& tau) {
  switch (axis) {
    case 'x': return LineForm(0, 1, -tau);  // y - tau z
    case 'y': return LineForm(-tau, 0, 1);  // z - tau x
    default: return LineForm(1, -tau, 0);   // x - tau y
  }
}

namespace detail {

inline void check_taus(const std::array<RootOfUnity, 3>& taus, int d) {
  for (const auto& t : taus)
    if (!is_root_of_minus_one(t, d))
      raise(ErrorCode::PrecondViolation, t.to_string() + " is not a d-th root of -1 for d = " + std::to_string(d));
}

}  // namespace detail

inline CurveSpec degeneration_member(int d, const std::array<RootOfUnity, 3>& taus, const Rational& t);

inline KummerCurve kummer_construct(int d, const std::array<RootOfUnity, 3>& taus, int variant) {
  if (d < 2) raise(ErrorCode::InvalidDegree, "Kummer constructions need d >= 2");
  detail::check_taus(taus, d);
  std::int64_t n = 2 * d;
  CycloNumber t1 = taus[0].to_cyclo(n), t2 = taus[1].to_cyclo(n), t3 = taus[2].to_cyclo(n);
  KummerCurve k;
  k.variant = variant;
  MPoly fermat = fermat_curve(d);
  if (variant == 1) {
    CycloNumber tau = t1 * t2 * t3;
    k.change[0] = {tau, CycloNumber(1), CycloNumber(1)};
    k.change[1] = {t3.inverse() * tau, t3.inverse(), t3.inverse() * tau};
    k.change[2] = {t2 * tau, t2 * tau.inverse(), t2};
    k.predicted = (taus[0] * taus[1] * taus[2]).pow(2);
    k.fermat_model = {Family::Hat, d, fermat, {kummer_line('x', t1), kummer_line('y', t2), kummer_line('z', t3)}, n};
  } else if (variant == 2) {
    if (taus[0] == taus[1]) raise(ErrorCode::PrecondViolation, "variant 2 needs tau1 != tau2");
    k.change[0] = {CycloNumber(1), CycloNumber(1), CycloNumber(1)};
    k.change[1] = {t3, t3, CycloNumber(0)};
    k.change[2] = {t3 * t1, t3 * t2, CycloNumber(0)};
    k.predicted = taus[0] * taus[1].inverse();
    k.fermat_model = {Family::Hat, d, fermat, {kummer_line('x', t1), kummer_line('x', t2), kummer_line('z', t3)}, n};
  } else if (variant == 3) {
    if (taus[0] == taus[1] || taus[1] == taus[2] || taus[0] == taus[2])
      raise(ErrorCode::PrecondViolation, "variant 3 needs pairwise distinct taus");
    k.change = identity3();
    k.predicted = RootOfUnity(1, 0);
    k.degenerate = true;
    k.fermat_model = degeneration_member(d, taus, Rational(0));
    k.curve = k.fermat_model;
    return k;
  } else {
    raise(ErrorCode::PrecondViolation, "variant must be 1, 2 or 3");
  }
  k.curve = {Family::Hat, d, linear_substitute(fermat, k.change), coordinate_triangle(), n};
  return k;
}

/// (x - t1 y)(x - t2 y)(x - t3 y - t z) and x^d + y^d + z^d - t z (x^d + y^d)/(x - t3 y).
inline CurveSpec degeneration_member(int d, const std::array<RootOfUnity, 3>& taus, const Rational& t) {
  if (d < 2) raise(ErrorCode::InvalidDegree, "degeneration family needs d >= 2");
  detail::check_taus(taus, d);
  if (taus[0] == taus[1] || taus[1] == taus[2] || taus[0] == taus[2])
    raise(ErrorCode::PrecondViolation, "degeneration family needs pairwise distinct taus");
  std::int64_t n = 2 * d;
  CycloNumber t1 = taus[0].to_cyclo(n), t2 = taus[1].to_cyclo(n), t3 = taus[2].to_cyclo(n);
  MPoly xy = MPoly::x().pow(d) + MPoly::y().pow(d);
  auto q = exact_divide(xy, MPoly::linear(1, -t3, 0));
  if (!q) raise(ErrorCode::DivisionNotExact, "x - tau3 y does not divide x^d + y^d");
  MPoly main = fermat_curve(d) - CycloNumber(t) * (MPoly::z() * *q);
  std::vector<LineForm> lines{LineForm(1, -t1, 0), LineForm(1, -t2, 0), LineForm(1, -t3, -CycloNumber(t))};
  return {Family::Hat, d, main, lines, n};
}

/// x^2 y^2 + y^2 z^2 + x^2 z^2 + 2 x y z (x + y - z).
inline CurveSpec tricuspidal_quartic() {
  MPoly x = MPoly::x(), y = MPoly::y(), z = MPoly::z();
  MPoly f = x * x * y * y + y * y * z * z + x * x * z * z + CycloNumber(2) * (x * y * z * (x + y - z));
  return {Family::Sigma, 2, f, {}, 1};
}

/// Newton-polygon model y^d(x+z)^d + x^d(y+z)^d + z^d(x+zeta y)^d minus the
/// doubled vertex monomials, plus arbitrary interior terms x^i y^j z^(2d-i-j).
inline CurveSpec sigma_member(int d, const RootOfUnity& zeta, const std::vector<std::pair<std::array<int, 2>, CycloNumber>>& interior = {}) {
  if (!zeta.is_dth_root(d)) raise(ErrorCode::NotDthRoot, "zeta must be a d-th root of unity");
  std::int64_t n = std::lcm<std::int64_t>(zeta.order, 1);
  MPoly x = MPoly::x(), y = MPoly::y(), z = MPoly::z();
  CycloNumber zc = zeta.to_cyclo();
  MPoly f = y.pow(d) * (x + z).pow(d) + x.pow(d) * (y + z).pow(d) + z.pow(d) * (x + zc * y).pow(d) -
            (x * y).pow(d) - (x * z).pow(d) - (y * z).pow(d);
  for (const auto& [ij, c] : interior) {
    auto [i, j] = ij;
    if (!(i < d && j < d && i + j > d)) raise(ErrorCode::PrecondViolation, "interior term outside the triangle");
    f.add_term({i, j, 2 * d - i - j}, c);
    n = std::lcm(n, c.conductor());
  }
  return {Family::Sigma, d, f, {}, n};
}

// ---------------------------------------------------------------------------
// Verification

struct HatCertificate {
  Matrix3 normalizing;                  // main(normalizing * v) is in normal form
  MPoly normalized;                     // normalized main
  std::array<BinaryForm, 3> restrictions;  // on x = 0, y = 0, z = 0 after normalization
  CycloNumber raw_zeta;                 // F(x, y, 0) = (x + raw_zeta y)^d
  RootOfUnity raw_root;
  SmoothnessReport smoothness;
};

struct HatVerification {
  StratumLabel label;
  HatCertificate certificate;
};

namespace detail {

// Restriction of f to x_i = 0 as c * (u + a v)^d; throws unless a exists and is nonzero.
inline std::pair<CycloNumber, CycloNumber> tangent_restriction(const MPoly& f, int index, int d, BinaryForm& out) {
  out = restrict_to_coordinate_line(f, index);
  auto p = dth_power_test(out, d);
  if (!p) raise(ErrorCode::NotTangentAtOnePoint, std::string("restriction to line ") + std::to_string(index + 1) + " is not a d-th power");
  if (p->second.a.is_zero() || p->second.b.is_zero())
    raise(ErrorCode::NotNormalizable, "tangency point lies on another line of the triangle");
  return {p->first, p->second.b};
}

}  // namespace detail

inline HatVerification verify_hat(const CurveSpec& c) {
  if (c.family != Family::Hat && c.family != Family::ArtalShirane) raise(ErrorCode::PrecondViolation, "verify_hat needs a hat curve");
  c.check_shape();
  int d = c.d;
  if (!lines_in_general_position(c.lines)) raise(ErrorCode::NotTriangular, "the three lines are concurrent or repeated");
  Matrix3 a_inv = inverse3(lines_matrix(c.lines));
  MPoly f = linear_substitute(c.main, a_inv);
  HatCertificate cert;
  auto [c1, a1] = detail::tangent_restriction(f, 0, d, cert.restrictions[0]);
  auto [c2, a2] = detail::tangent_restriction(f, 1, d, cert.restrictions[1]);
  auto [c3, a3] = detail::tangent_restriction(f, 2, d, cert.restrictions[2]);
  (void)c2;
  (void)c3;
  cert.smoothness = check_smoothness(c.main);
  if (!cert.smoothness.smooth) raise(ErrorCode::NotSmooth, "the degree-d component is singular");
  Matrix3 diag = identity3();
  diag[0][0] = a2;
  diag[1][1] = a1;
  cert.normalizing = a_inv * diag;
  CycloNumber scale = (c1 * a1.pow(d)).inverse();
  cert.normalized = scale * linear_substitute(f, diag);
  for (int i = 0; i < 3; ++i) cert.restrictions[static_cast<std::size_t>(i)] = restrict_to_coordinate_line(cert.normalized, i);
  cert.raw_zeta = a3 * a1 / a2;
  auto root = classify_root_of_unity(cert.raw_zeta);
  if (!root || !root->is_dth_root(d)) raise(ErrorCode::NotNormalizable, "edge data does not give a d-th root of unity");
  cert.raw_root = *root;
  return {make_label(*root, d), cert};
}

struct SigmaCertificate {
  std::array<BinaryForm, 3> edges;  // horizontal (j = d), vertical (i = d), diagonal (i + j = d)
  std::array<std::pair<BinaryForm, BinaryForm>, 3> local_parts;  // at [1:0:0], [0:1:0], [0:0:1]
  CycloNumber raw_zeta;  // diagonal edge normalized to (x + raw_zeta y)^d
  RootOfUnity raw_root;
  std::vector<std::string> warnings;
};

struct SigmaVerification {
  StratumLabel label;
  SigmaCertificate certificate;
};

/// Homogeneous part of local degree `k` of f at the coordinate vertex e_v, as a
/// binary form in the two remaining variables.
inline BinaryForm local_part(const MPoly& f, int v, int k) {
  int q = v == 0 ? 1 : 0;
  int r = v == 2 ? 1 : 2;
  std::vector<CycloNumber> c(static_cast<std::size_t>(k) + 1, CycloNumber(0));
  for (const auto& [e, val] : f.terms())
    if (f.degree() - e[static_cast<std::size_t>(v)] == k) c[static_cast<std::size_t>(e[static_cast<std::size_t>(q)])] = val;
  return BinaryForm(k, std::move(c), variable_name(q), variable_name(r));
}

inline SigmaVerification verify_sigma(const CurveSpec& c) {
  if (c.family != Family::Sigma && c.family != Family::Tilde) raise(ErrorCode::PrecondViolation, "verify_sigma needs a sigma or tilde curve");
  c.check_shape();
  int d = c.d;
  const MPoly& f = c.main;
  NewtonPolygon np = newton_polygon(f, 2);
  std::set<LatticePoint> want{{0, d}, {d, d}, {d, 0}};
  std::set<LatticePoint> got(np.hull.begin(), np.hull.end());
  if (got != want) raise(ErrorCode::WrongPolygon, "Newton polygon is not the triangle T((0,d),(d,d),(d,0))");
  SigmaCertificate cert;
  cert.edges[0] = edge_polynomial(f, 2, {0, d}, {d, d});
  cert.edges[1] = edge_polynomial(f, 2, {d, 0}, {d, d});
  cert.edges[2] = edge_polynomial(f, 2, {0, d}, {d, 0});
  std::array<CycloNumber, 3> a;
  for (std::size_t i = 0; i < 3; ++i) {
    auto p = dth_power_test(cert.edges[i], d);
    if (!p || p->second.a.is_zero() || p->second.b.is_zero())
      raise(ErrorCode::EdgeNotPower, "edge polynomial " + std::to_string(i + 1) + " is not a d-th power of a binomial");
    a[i] = p->second.b;
  }
  for (int v = 0; v < 3; ++v) {
    BinaryForm low = local_part(f, v, d), high = local_part(f, v, d + 1);
    cert.local_parts[static_cast<std::size_t>(v)] = {low, high};
    if (!dth_power_test(low, d) || high.is_zero() || !coprime_forms(low, high))
      raise(ErrorCode::LocalTypeUnverified, std::string("local type at vertex ") + variable_name(v) + " is not of type u^d + v^(d+1)");
  }
  cert.raw_zeta = a[2] * a[1] / a[0];
  auto root = classify_root_of_unity(cert.raw_zeta);
  if (!root || !root->is_dth_root(d)) raise(ErrorCode::EdgeNotPower, "edge data does not give a d-th root of unity");
  cert.raw_root = *root;
  StratumLabel label = make_label(*root, d);
  if (!label.realizable) cert.warnings.push_back("stratum (d, zeta) = (2, 1) has no reduced members");
  return {label, cert};
}

// ---------------------------------------------------------------------------
// Cremona transformation and Galois conjugation

inline int vertex_multiplicity(const MPoly& f, int v) {
  int m = f.degree();
  for (const auto& [e, c] : f.terms()) m = std::min(m, f.degree() - e[static_cast<std::size_t>(v)]);
  return m;
}

inline bool is_coordinate_triangle(const std::vector<LineForm>& lines) {
  if (lines.size() != 3) return false;
  std::set<int> idx;
  for (const auto& l : lines) idx.insert(l.coordinate_index());
  return idx == std::set<int>{0, 1, 2};
}

/// Moves the lines to x = 0, y = 0, z = 0 (in the given order).
inline CurveSpec normalize_triangle(const CurveSpec& c) {
  if (!lines_in_general_position(c.lines)) raise(ErrorCode::NotTriangular, "the three lines are concurrent or repeated");
  CurveSpec out = c;
  out.main = linear_substitute(c.main, inverse3(lines_matrix(c.lines)));
  out.lines = coordinate_triangle();
  return out;
}

/// (x, y, z) -> (yz, xz, xy), stripping the monomial of vertex multiplicities.
inline MPoly cremona_transform(const MPoly& f) {
  std::array<int, 3> m{vertex_multiplicity(f, 0), vertex_multiplicity(f, 1), vertex_multiplicity(f, 2)};
  MPoly out(2 * f.degree() - m[0] - m[1] - m[2]);
  for (const auto& [e, c] : f.terms())
    out.add_term({e[1] + e[2] - m[0], e[0] + e[2] - m[1], e[0] + e[1] - m[2]}, c);
  return out;
}

inline CurveSpec cremona_map(const CurveSpec& c) {
  if (c.family != Family::Hat && c.family != Family::Tilde) raise(ErrorCode::PrecondViolation, "Cremona map needs a hat or tilde curve");
  if (!is_coordinate_triangle(c.lines)) raise(ErrorCode::NotNormalized, "lines must be the coordinate triangle");
  int expected = c.family == Family::Hat ? 0 : c.d;
  for (int v = 0; v < 3; ++v)
    if (vertex_multiplicity(c.main, v) != expected)
      raise(ErrorCode::UnexpectedMultiplicity, std::string("multiplicity at vertex ") + variable_name(v) + " is " +
                                                   std::to_string(vertex_multiplicity(c.main, v)) + ", expected " + std::to_string(expected));
  CurveSpec out = c;
  out.family = c.family == Family::Hat ? Family::Tilde : Family::Hat;
  out.main = cremona_transform(c.main);
  out.lines = coordinate_triangle();
  return out;
}

inline CurveSpec as_tilde(const CurveSpec& sigma) {
  if (sigma.family != Family::Sigma) raise(ErrorCode::PrecondViolation, "as_tilde needs a sigma curve");
  CurveSpec out = sigma;
  out.family = Family::Tilde;
  out.lines = coordinate_triangle();
  return out;
}

inline CurveSpec main_as_sigma(const CurveSpec& tilde) {
  if (tilde.family != Family::Tilde) raise(ErrorCode::PrecondViolation, "main_as_sigma needs a tilde curve");
  CurveSpec out = tilde;
  out.family = Family::Sigma;
  out.lines.clear();
  return out;
}

/// Applies zeta_N -> zeta_N^k to every coefficient.
inline CurveSpec galois_conjugate_curve(const CurveSpec& c, std::int64_t k) {
  std::int64_t n = c.conductor;
  if (n < 1 || std::gcd(mod_floor(k, n), n) != 1) raise(ErrorCode::NotCoprime, "Galois exponent not coprime to the conductor");
  auto sigma = [&](const CycloNumber& v) { return v.lift(std::lcm(n, v.conductor())).galois(k); };
  CurveSpec out = c;
  out.main = c.main.map_coeffs(sigma);
  out.lines.clear();
  for (const auto& l : c.lines) out.lines.emplace_back(sigma(l[0]), sigma(l[1]), sigma(l[2]));
  return out;
}

/// Smallest k' = k (mod d) coprime to the conductor n; sigma_k' then acts on
/// d-th roots of unity as z -> z^k.
inline std::int64_t lift_galois_exponent(std::int64_t k, std::int64_t d, std::int64_t n) {
  if (std::gcd(mod_floor(k, d), d) != 1) raise(ErrorCode::NotCoprime, "Galois exponent not coprime to d");
  for (std::int64_t j = mod_floor(k, d);; j += d)
    if (j > 0 && std::gcd(j, n) == 1) return j;
}

struct ArtalShiraneType {
  int d = 0;
  std::array<std::vector<int>, 3> multiplicities;  // per line, descending
  int s = 0;
};

/// Intersection multiplicities of the main component with each line.
inline ArtalShiraneType artal_shirane_type(const CurveSpec& c) {
  if (c.family != Family::Hat && c.family != Family::ArtalShirane) raise(ErrorCode::PrecondViolation, "curve type needs a hat or artal_shirane curve");
  c.check_shape();
  ArtalShiraneType t;
  t.d = c.main.degree();
  for (std::size_t i = 0; i < 3; ++i) {
    BinaryForm g = restrict_to_line(c.main, c.lines[i]);
    if (g.is_zero()) raise(ErrorCode::PrecondViolation, "a line is a component of the main curve");
    UniPoly<CycloNumber> p = g.dehomogenized();
    auto& out = t.multiplicities[i];
    long at_infinity = g.degree - p.degree();
    if (at_infinity > 0) out.push_back(static_cast<int>(at_infinity));
    auto parts = squarefree_decomposition(p);
    for (std::size_t m = 0; m < parts.size(); ++m)
      for (long r = 0; r < parts[m].degree(); ++r) out.push_back(static_cast<int>(m + 1));
    std::sort(out.rbegin(), out.rend());
    for (int v : out) t.s = std::gcd(t.s, v);
  }
  return t;
}

}  // namespace zariski
