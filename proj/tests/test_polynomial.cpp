#include <gtest/gtest.h>

#include <random>
#include <set>

#include "zariski/polynomial.hpp"

using namespace zariski;

namespace {

CycloNumber zeta(std::int64_t n, std::int64_t k = 1) { return CycloNumber::root_of_unity(n, k); }

MPoly tricuspidal() {
  MPoly x = MPoly::x(), y = MPoly::y(), z = MPoly::z();
  return x * x * y * y + y * y * z * z + x * x * z * z + CycloNumber(2) * (x * y * z * (x + y - z));
}

MPoly random_poly(std::mt19937& rng, int degree, std::int64_t conductor, int terms) {
  std::uniform_int_distribution<int> coef(-4, 4), expo(0, degree), root(0, static_cast<int>(conductor) - 1);
  MPoly p(degree);
  for (int t = 0; t < terms; ++t) {
    int i = expo(rng);
    std::uniform_int_distribution<int> rest(0, degree - i);
    int j = rest(rng);
    CycloNumber c = CycloNumber(coef(rng)) + CycloNumber(coef(rng)) * CycloNumber::root_of_unity(conductor, root(rng));
    p.add_term({i, j, degree - i - j}, c);
  }
  if (p.is_zero()) p.add_term({degree, 0, 0}, CycloNumber(1));
  return p;
}

Matrix3 random_matrix(std::mt19937& rng, std::int64_t conductor) {
  std::uniform_int_distribution<int> coef(-3, 3), root(0, static_cast<int>(conductor) - 1);
  for (;;) {
    Matrix3 m;
    for (auto& row : m)
      for (auto& v : row) v = CycloNumber(coef(rng)) + CycloNumber::root_of_unity(conductor, root(rng));
    if (!det3(m).is_zero()) return m;
  }
}

long orient(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<long>(a[0] - o[0]) * (b[1] - o[1]) - static_cast<long>(a[1] - o[1]) * (b[0] - o[0]);
}

bool in_closed_triangle(const LatticePoint& p, const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  long o = orient(a, b, c);
  if (o == 0) {
    // Degenerate triangle: p must lie on one of the three segments.
    auto on_segment = [&](const LatticePoint& s, const LatticePoint& t) {
      return orient(s, t, p) == 0 && std::min(s[0], t[0]) <= p[0] && p[0] <= std::max(s[0], t[0]) &&
             std::min(s[1], t[1]) <= p[1] && p[1] <= std::max(s[1], t[1]);
    };
    return on_segment(a, b) || on_segment(b, c) || on_segment(a, c);
  }
  long s1 = orient(a, b, p), s2 = orient(b, c, p), s3 = orient(c, a, p);
  if (o > 0) return s1 >= 0 && s2 >= 0 && s3 >= 0;
  return s1 <= 0 && s2 <= 0 && s3 <= 0;
}

// A point is a hull vertex iff no triangle of other support points contains it.
std::set<LatticePoint> brute_force_vertices(const std::vector<LatticePoint>& support) {
  std::set<LatticePoint> uniq(support.begin(), support.end());
  std::vector<LatticePoint> pts(uniq.begin(), uniq.end());
  std::set<LatticePoint> out;
  for (const auto& p : pts) {
    bool covered = false;
    for (std::size_t a = 0; a < pts.size() && !covered; ++a)
      for (std::size_t b = a; b < pts.size() && !covered; ++b)
        for (std::size_t c = b; c < pts.size() && !covered; ++c) {
          if (pts[a] == p || pts[b] == p || pts[c] == p) continue;
          covered = in_closed_triangle(p, pts[a], pts[b], pts[c]);
        }
    if (!covered) out.insert(p);
  }
  return out;
}

}  // namespace

TEST(Polynomial, Evaluate) {
  ProjPoint one{CycloNumber(1), CycloNumber(1), CycloNumber(1)};
  EXPECT_EQ(evaluate(MPoly::linear(1, 1, 1), one), CycloNumber(3));
  EXPECT_TRUE(evaluate(tricuspidal(), {CycloNumber(1), CycloNumber(0), CycloNumber(0)}).is_zero());
  EXPECT_TRUE(evaluate(MPoly::x().pow(5), {CycloNumber(0), CycloNumber(1), CycloNumber(1)}).is_zero());
}

TEST(Polynomial, DegreeMismatchIsRejected) {
  MPoly p(3);
  try {
    p.add_term({1, 1, 0}, CycloNumber(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
  }
  EXPECT_THROW(MPoly::x() + MPoly::x() * MPoly::y(), Error);
}

TEST(Polynomial, ZeroCoefficientsAreNotStored) {
  MPoly p = MPoly::x() - MPoly::x();
  EXPECT_TRUE(p.is_zero());
  MPoly q = MPoly::x() + MPoly::y();
  q.add_term({1, 0, 0}, CycloNumber(-1));
  EXPECT_EQ(q, MPoly::y());
}

TEST(Polynomial, LinearSubstituteIdentityAndSingular) {
  MPoly f = tricuspidal();
  EXPECT_EQ(linear_substitute(f, identity3()), f);
  Matrix3 singular = identity3();
  singular[2] = singular[1];
  try {
    linear_substitute(f, singular);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
  }
}

TEST(Polynomial, SwapOnProductOfPowers) {
  int d = 3;
  CycloNumber z3 = zeta(3);
  MPoly f = MPoly::z().pow(d) * (MPoly::y() + z3 * MPoly::x()).pow(d);
  Matrix3 swap = identity3();
  std::swap(swap[0], swap[1]);
  MPoly expected = MPoly::z().pow(d) * (MPoly::x() + z3 * MPoly::y()).pow(d);
  EXPECT_EQ(linear_substitute(f, swap), expected);
}

TEST(Polynomial, SubstitutionIsFunctorial) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    MPoly f = random_poly(rng, 3, 6, 6);
    Matrix3 m = random_matrix(rng, 6), m2 = random_matrix(rng, 4);
    EXPECT_EQ(linear_substitute(linear_substitute(f, m), m2), linear_substitute(f, m * m2));
    EXPECT_EQ(linear_substitute(linear_substitute(f, m), inverse3(m)), f);
  }
}

TEST(Polynomial, FermatCubicVariantOneChange) {
  // tau_i = -1: x1 = tau x + y + z with tau = tau1 tau2 tau3 = -1.
  CycloNumber tau(-1), t2(-1), t3(-1);
  Matrix3 m;
  m[0] = {tau, CycloNumber(1), CycloNumber(1)};
  m[1] = {t3.inverse() * tau, t3.inverse(), t3.inverse() * tau};
  m[2] = {t2 * tau, t2 * tau.inverse(), t2};
  MPoly fermat = MPoly::x().pow(3) + MPoly::y().pow(3) + MPoly::z().pow(3);
  MPoly f = linear_substitute(fermat, m);
  BinaryForm r = restrict_to_coordinate_line(f, 0);
  EXPECT_EQ(r, (LinearBinary{CycloNumber(1), CycloNumber(1)}.power(3)));
}

TEST(Polynomial, RestrictToLine) {
  MPoly fermat = MPoly::x().pow(3) + MPoly::y().pow(3) + MPoly::z().pow(3);
  BinaryForm r = restrict_to_coordinate_line(fermat, 0);
  EXPECT_EQ(r.u, "y");
  EXPECT_EQ(r.v, "z");
  EXPECT_EQ(r.coeffs, (std::vector<CycloNumber>{1, 0, 0, 1}));
  // Golden value: the quartic restricted to z = 0 is x^2 y^2.
  BinaryForm q = restrict_to_coordinate_line(tricuspidal(), 2);
  EXPECT_EQ(q.coeffs, (std::vector<CycloNumber>{0, 0, 1, 0, 0}));
  // On x = y + z the cubic becomes (y+z)^3 + y^3 + z^3 in (y, z).
  BinaryForm s = restrict_to_line(fermat, LineForm(1, -1, -1));
  EXPECT_EQ(s.coeffs, (std::vector<CycloNumber>{2, 3, 3, 2}));
}

TEST(Polynomial, LineFormNormalization) {
  LineForm l(0, 2, 4);
  EXPECT_EQ(l[0], CycloNumber(0));
  EXPECT_EQ(l[1], CycloNumber(1));
  EXPECT_EQ(l[2], CycloNumber(2));
  EXPECT_EQ(l, LineForm(0, -1, -2));
  EXPECT_EQ(LineForm(0, 0, 5).coordinate_index(), 2);
  EXPECT_EQ(l.coordinate_index(), -1);
  EXPECT_THROW(LineForm(0, 0, 0), Error);
}

TEST(Polynomial, NewtonPolygonOfQuartic) {
  NewtonPolygon np = newton_polygon(tricuspidal(), 2);
  std::set<LatticePoint> verts(np.hull.begin(), np.hull.end());
  EXPECT_EQ(verts, (std::set<LatticePoint>{{0, 2}, {2, 2}, {2, 0}}));
  EXPECT_GT(orient(np.hull[0], np.hull[1], np.hull[2]), 0);
  EXPECT_EQ(np.edges.size(), 3u);
  NewtonPolygon single = newton_polygon(MPoly::monomial({3, 3, 0}), 2);
  ASSERT_EQ(single.hull.size(), 1u);
  EXPECT_EQ(single.hull[0], (LatticePoint{3, 3}));
}

TEST(Polynomial, HullMatchesBruteForce) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    MPoly f = random_poly(rng, 7, 1, 9);
    for (int chart = 0; chart < 3; ++chart) {
      NewtonPolygon np = newton_polygon(f, chart);
      std::set<LatticePoint> verts(np.hull.begin(), np.hull.end());
      EXPECT_EQ(verts, brute_force_vertices(np.support));
      for (std::size_t i = 0; np.hull.size() > 2 && i < np.hull.size(); ++i)
        EXPECT_GT(orient(np.hull[i], np.hull[(i + 1) % np.hull.size()], np.hull[(i + 2) % np.hull.size()]), 0);
    }
  }
}

TEST(Polynomial, HullOfProductIsMinkowskiSum) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    MPoly f = random_poly(rng, 4, 1, 5), g = random_poly(rng, 3, 1, 4);
    NewtonPolygon nf = newton_polygon(f, 2), ng = newton_polygon(g, 2);
    std::vector<LatticePoint> sums;
    for (const auto& p : nf.hull)
      for (const auto& q : ng.hull) sums.push_back({p[0] + q[0], p[1] + q[1]});
    NewtonPolygon nfg = newton_polygon(f * g, 2);
    std::set<LatticePoint> verts(nfg.hull.begin(), nfg.hull.end());
    EXPECT_EQ(verts, brute_force_vertices(sums));
  }
}

TEST(Polynomial, EdgePolynomialsOfQuartic) {
  MPoly f = tricuspidal();
  BinaryForm diag = edge_polynomial(f, 2, {0, 2}, {2, 0});
  EXPECT_EQ(diag.coeffs, (std::vector<CycloNumber>{1, -2, 1}));
  BinaryForm horiz = edge_polynomial(f, 2, {0, 2}, {2, 2});
  EXPECT_EQ(horiz.coeffs, (std::vector<CycloNumber>{1, 2, 1}));
  try {
    edge_polynomial(f, 2, {0, 2}, {1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnEdge);
  }
  MPoly line_power = (MPoly::x() + MPoly::z()).pow(4);
  BinaryForm e = edge_polynomial(line_power, 2, {0, 0}, {4, 0});
  EXPECT_EQ(e, (LinearBinary{CycloNumber(1), CycloNumber(1)}.power(4)));
}

TEST(Polynomial, EdgePolynomialsMultiply) {
  // Along the x-axis edge of chart z, the edge form of a product is the product of edge forms.
  MPoly f = (MPoly::x() + MPoly::z()).pow(2) + MPoly::monomial({0, 2, 0});
  MPoly g = (MPoly::x() - CycloNumber(2) * MPoly::z()) * MPoly::z() + MPoly::monomial({0, 2, 0});
  BinaryForm ef = edge_polynomial(f, 2, {0, 0}, {2, 0});
  BinaryForm eg = edge_polynomial(g, 2, {0, 0}, {1, 0});
  BinaryForm efg = edge_polynomial(f * g, 2, {0, 0}, {3, 0});
  UniPoly<CycloNumber> prod = ef.dehomogenized() * eg.dehomogenized();
  EXPECT_EQ(efg.dehomogenized(), prod);
}

TEST(Polynomial, DthPowerTest) {
  auto r = dth_power_test(LinearBinary{CycloNumber(1), CycloNumber(1)}.power(3), 3);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->first, CycloNumber(1));
  EXPECT_EQ(r->second, (LinearBinary{CycloNumber(1), CycloNumber(1)}));
  EXPECT_FALSE(dth_power_test(BinaryForm(3, {1, 0, 0, 1}), 3));
  CycloNumber z3 = zeta(3);
  BinaryForm g = LinearBinary{CycloNumber(1), z3}.power(3);
  for (auto& c : g.coeffs) c *= z3;
  r = dth_power_test(g, 3);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->first, z3);
  EXPECT_EQ(r->second.b, z3);
  try {
    dth_power_test(BinaryForm(2, {1, 2, 1}), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
  }
  auto pure = dth_power_test(BinaryForm(2, {5, 0, 0}), 2);
  ASSERT_TRUE(pure);
  EXPECT_EQ(pure->second, (LinearBinary{CycloNumber(0), CycloNumber(1)}));
}

TEST(Polynomial, DthPowerRecoversRandomPowers) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> coef(-5, 5), root(0, 11);
  for (int trial = 0; trial < 30; ++trial) {
    int d = 2 + trial % 5;
    LinearBinary l{CycloNumber(1), CycloNumber(coef(rng)) + CycloNumber::root_of_unity(12, root(rng))};
    CycloNumber c = CycloNumber(coef(rng) == 0 ? 7 : 3) * CycloNumber::root_of_unity(12, root(rng));
    BinaryForm g = l.power(d);
    for (auto& v : g.coeffs) v *= c;
    auto r = dth_power_test(g, d);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->first, c);
    EXPECT_EQ(r->second, l);
    // A perturbed form is no longer a power.
    g.coeffs[1] += CycloNumber(1);
    EXPECT_FALSE(dth_power_test(g, d));
  }
}

TEST(Polynomial, ExactDivide) {
  CycloNumber tau3 = zeta(6);  // tau^3 = -1
  MPoly f = MPoly::x().pow(3) + MPoly::y().pow(3);
  auto q = exact_divide(f, MPoly::linear(1, -tau3, 0));
  ASSERT_TRUE(q);
  EXPECT_EQ(q->degree(), 2);
  EXPECT_EQ(*q * MPoly::linear(1, -tau3, 0), f);
  EXPECT_FALSE(exact_divide(f, MPoly::linear(1, -1, 0)));
}

TEST(Polynomial, ExactDivideRoundTrip) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 12; ++trial) {
    std::int64_t n = trial % 2 == 0 ? 24 : 8;
    MPoly f = random_poly(rng, 1 + trial % 4, n, 5), g = random_poly(rng, 1 + trial % 3, n, 4);
    auto q = exact_divide(f * g, g);
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, f);
  }
}

TEST(Polynomial, Partials) {
  auto p = partials(MPoly::x().pow(4));
  EXPECT_EQ(p[0], CycloNumber(4) * MPoly::x().pow(3));
  EXPECT_TRUE(p[1].is_zero());
  EXPECT_TRUE(p[2].is_zero());
  auto c = partials(MPoly::constant(CycloNumber(5)));
  for (const auto& q : c) EXPECT_TRUE(q.is_zero());
  std::mt19937 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    MPoly f = random_poly(rng, 2 + trial % 5, 12, 7);
    auto d = partials(f);
    MPoly euler = MPoly::x() * d[0] + MPoly::y() * d[1] + MPoly::z() * d[2];
    EXPECT_EQ(euler, CycloNumber(f.degree()) * f);
  }
}

TEST(Polynomial, CoprimeForms) {
  BinaryForm yz3 = LinearBinary{CycloNumber(1), CycloNumber(1)}.power(3);
  BinaryForm y4(4, {0, 0, 0, 0, 1});  // u^4 with u = y
  EXPECT_TRUE(coprime_forms(yz3, y4));
  // (y + z) z^3 = y z^3 + z^4 in u = y, v = z.
  BinaryForm shared(4, {1, 1, 0, 0, 0});
  EXPECT_FALSE(coprime_forms(yz3, shared));
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> root(0, 5);
  for (int trial = 0; trial < 10; ++trial) {
    LinearBinary a{CycloNumber(1), CycloNumber::root_of_unity(6, root(rng))};
    LinearBinary b{CycloNumber(1), CycloNumber(2) + CycloNumber::root_of_unity(6, root(rng))};
    LinearBinary c{CycloNumber(1), CycloNumber(-3)};
    auto prod2 = [](const BinaryForm& p, const BinaryForm& q) {
      auto r = (p.dehomogenized() * q.dehomogenized()).coeffs();
      r.resize(static_cast<std::size_t>(p.degree + q.degree) + 1, CycloNumber(0));
      return BinaryForm(p.degree + q.degree, r);
    };
    EXPECT_TRUE(coprime_forms(prod2(a.power(2), b.power(1)), c.power(3)));
    EXPECT_FALSE(coprime_forms(prod2(a.power(2), c.power(1)), prod2(c.power(2), b.power(1))));
  }
}
