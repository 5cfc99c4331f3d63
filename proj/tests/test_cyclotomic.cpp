#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "zariski/cyclotomic.hpp"

using namespace zariski;

namespace {

CycloNumber zeta(std::int64_t n, std::int64_t k = 1) { return CycloNumber::root_of_unity(n, k); }

CycloNumber random_element(std::mt19937& rng, std::int64_t n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(n)));
  for (auto& v : c) {
    v = Rational(num(rng), den(rng));
    v.canonicalize();
  }
  return CycloNumber::from_poly(n, c);
}

// Brute-force count of k in [1, m) coprime to m, identified under k -> m - k.
std::int64_t coprime_pairs(std::int64_t m) {
  std::int64_t count = 0;
  for (std::int64_t k = 1; k < m; ++k)
    if (std::gcd(k, m) == 1 && k < m - k) ++count;
  return count;
}

}  // namespace

TEST(Cyclotomic, CoefficientLengthIsEulerPhi) {
  for (std::int64_t n = 1; n <= 60; ++n) EXPECT_EQ(CycloNumber::zero_at(n).coeffs().size(), static_cast<std::size_t>(euler_phi(n)));
}

TEST(Cyclotomic, BasicIdentities) {
  EXPECT_EQ(zeta(4) * zeta(4), CycloNumber(-1));
  EXPECT_TRUE((CycloNumber(1) + zeta(3) + zeta(3, 2)).is_zero());
  EXPECT_EQ(zeta(5).conj(), zeta(5, 4));
  EXPECT_EQ(zeta(6, 2), zeta(3));
  EXPECT_EQ(zeta(12, 3), zeta(4));
}

TEST(Cyclotomic, InverseOfZeroThrows) {
  try {
    (void)CycloNumber::zero_at(7).inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidOperand);
  }
}

TEST(Cyclotomic, FieldAxiomsOnRandomElements) {
  std::mt19937 rng(12345);
  for (std::int64_t n : {1, 3, 4, 5, 7, 8, 9, 12, 15, 20, 24, 30, 36, 48, 60}) {
    for (int trial = 0; trial < 4; ++trial) {
      CycloNumber a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
      EXPECT_EQ((a * b) * c, a * (b * c)) << n;
      EXPECT_EQ(a * (b + c), a * b + a * c) << n;
      EXPECT_EQ(a + b, b + a);
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), CycloNumber(1)) << n;
      EXPECT_EQ(a.conj().conj(), a);
    }
  }
}

TEST(Cyclotomic, MixedConductorsAgree) {
  std::mt19937 rng(7);
  CycloNumber a = random_element(rng, 3), b = random_element(rng, 4);
  CycloNumber s = a + b;
  EXPECT_EQ(s.conductor(), 12);
  EXPECT_EQ(s - b, a);
  EXPECT_NEAR(std::abs(s.to_complex() - (a.to_complex() + b.to_complex())), 0.0, 1e-12);
  EXPECT_NEAR(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()), 0.0, 1e-12);
}

TEST(Cyclotomic, ConjFixesOnlyRealRoots) {
  for (std::int64_t n = 1; n <= 24; ++n)
    for (std::int64_t k = 0; k < n; ++k) {
      CycloNumber z = zeta(n, k);
      bool fixed = z.conj() == z;
      bool real = z == CycloNumber(1) || z == CycloNumber(-1);
      EXPECT_EQ(fixed, real) << n << " " << k;
    }
}

TEST(Cyclotomic, ClassifyExamples) {
  auto r = classify_root_of_unity(zeta(6, 2));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->order, 3);
  EXPECT_EQ(r->exponent, 1);
  r = classify_root_of_unity(CycloNumber(1));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->order, 1);
  EXPECT_EQ(r->exponent, 0);
  EXPECT_FALSE(classify_root_of_unity(CycloNumber(2)));
  EXPECT_FALSE(classify_root_of_unity(zeta(5) + CycloNumber(1)));
}

TEST(Cyclotomic, ClassifyRoundTrip) {
  for (std::int64_t n = 1; n <= 48; ++n)
    for (std::int64_t k = 0; k < n; ++k) {
      auto r = classify_root_of_unity(zeta(n, k));
      ASSERT_TRUE(r) << n << " " << k;
      EXPECT_EQ(*r, RootOfUnity(n, k));
      EXPECT_EQ(r->to_cyclo(), zeta(n, k));
    }
}

TEST(Cyclotomic, HalfPlaneClass) {
  EXPECT_EQ(half_plane_class(RootOfUnity(5, 4), 5), RootOfUnity(5, 1));
  EXPECT_EQ(half_plane_class(RootOfUnity(2, 1), 6), RootOfUnity(2, 1));
  EXPECT_EQ(half_plane_class(RootOfUnity(4, 3), 4), RootOfUnity(4, 1));
  try {
    half_plane_class(RootOfUnity(3, 1), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDthRoot);
  }
  for (std::int64_t d = 1; d <= 20; ++d)
    for (std::int64_t k = 0; k < d; ++k) {
      RootOfUnity z(d, k);
      RootOfUnity h = half_plane_class(z, d);
      EXPECT_EQ(half_plane_class(h, d), h);
      EXPECT_EQ(half_plane_class(z.conj(), d), h);
      EXPECT_GE(h.to_complex().imag(), -1e-12);
    }
}

TEST(Cyclotomic, StrataExamples) {
  auto s3 = enumerate_strata(3);
  ASSERT_EQ(s3.size(), 2u);
  EXPECT_EQ(s3[0].zeta, RootOfUnity(1, 0));
  EXPECT_EQ(s3[1].zeta, RootOfUnity(3, 1));
  auto s2 = enumerate_strata(2);
  ASSERT_EQ(s2.size(), 2u);
  EXPECT_FALSE(s2[0].realizable);
  EXPECT_TRUE(s2[1].realizable);
  EXPECT_EQ(s2[1].zeta, RootOfUnity(2, 1));
  auto s4 = enumerate_strata(4);
  ASSERT_EQ(s4.size(), 3u);
  EXPECT_EQ(s4[1].zeta, RootOfUnity(4, 1));
  EXPECT_EQ(s4[2].zeta, RootOfUnity(2, 1));
  EXPECT_THROW(enumerate_strata(1), Error);
}

TEST(Cyclotomic, StrataCountMatchesAngleScan) {
  for (std::int64_t d = 2; d <= 64; ++d) {
    std::size_t scan = 0;
    for (std::int64_t k = 0; k < d; ++k)
      if (std::sin(2.0 * M_PI * static_cast<double>(k) / static_cast<double>(d)) >= -1e-12) ++scan;
    EXPECT_EQ(enumerate_strata(d).size(), scan) << d;
    EXPECT_EQ(enumerate_strata(d).size(), static_cast<std::size_t>(d / 2 + 1));
  }
}

TEST(Cyclotomic, ArithmeticTupleSize) {
  for (std::int64_t m : {5, 7, 8, 9, 10, 11, 12, 15, 30}) EXPECT_EQ(arithmetic_tuple_size(m), coprime_pairs(m)) << m;
  for (std::int64_t m : {1, 2, 3, 4, 6}) {
    try {
      arithmetic_tuple_size(m);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ExcludedOrder);
    }
  }
}

TEST(Cyclotomic, GaloisActsOnRoots) {
  EXPECT_EQ(zeta(5).galois(7), zeta(5, 2));
  EXPECT_EQ(zeta(10, 2).galois(3), zeta(10, 6));
  EXPECT_THROW(zeta(10).galois(5), Error);
  std::mt19937 rng(3);
  CycloNumber a = random_element(rng, 9), b = random_element(rng, 9);
  EXPECT_EQ((a * b).galois(2), a.galois(2) * b.galois(2));
}
