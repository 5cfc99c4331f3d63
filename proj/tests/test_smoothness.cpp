#include <gtest/gtest.h>

#include <random>

#include "zariski/smoothness.hpp"

using namespace zariski;

namespace {

MPoly fermat(int d) { return MPoly::x().pow(d) + MPoly::y().pow(d) + MPoly::z().pow(d); }

Matrix3 random_matrix(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), root(0, 5);
  for (;;) {
    Matrix3 m;
    for (auto& row : m)
      for (auto& v : row) v = CycloNumber(coef(rng)) + CycloNumber::root_of_unity(6, root(rng));
    if (!det3(m).is_zero()) return m;
  }
}

bool singular_at(const MPoly& f, const ProjPoint& p) {
  if (!evaluate(f, p).is_zero()) return false;
  for (const auto& d : partials(f))
    if (!evaluate(d, p).is_zero()) return false;
  return true;
}

}  // namespace

TEST(Smoothness, FermatCurvesAreSmooth) {
  for (int d = 1; d <= 6; ++d) EXPECT_TRUE(is_smooth_exact(fermat(d))) << d;
  for (int d = 7; d <= 9; ++d) EXPECT_TRUE(is_smooth_modular(fermat(d)).smooth) << d;
}

TEST(Smoothness, KnownSingularCurves) {
  MPoly x = MPoly::x(), y = MPoly::y(), z = MPoly::z();
  MPoly node = y * y * z - x * x * (x + z);
  MPoly cusp = y * y * z - x.pow(3);
  MPoly triangle = x * y * z;
  MPoly doubled = (x + y + z).pow(2);
  ProjPoint origin{CycloNumber(0), CycloNumber(0), CycloNumber(1)};
  EXPECT_TRUE(singular_at(node, origin));
  EXPECT_TRUE(singular_at(cusp, origin));
  for (const auto& f : {node, cusp, triangle, doubled}) {
    EXPECT_FALSE(is_smooth_exact(f)) << f.to_string();
    EXPECT_FALSE(is_smooth_modular(f).smooth) << f.to_string();
  }
}

TEST(Smoothness, SingularPointsAtInfinityAreFound) {
  MPoly x = MPoly::x(), y = MPoly::y(), z = MPoly::z();
  // Cusp at [0:1:0] and node at [1:0:0].
  MPoly cusp = x * x * y - z.pow(3);
  MPoly node = y * y * x - z * z * (z + x);
  EXPECT_FALSE(is_smooth_exact(cusp));
  EXPECT_FALSE(is_smooth_exact(node));
}

TEST(Smoothness, TricuspidalQuarticIsSingular) {
  MPoly x = MPoly::x(), y = MPoly::y(), z = MPoly::z();
  MPoly q = x * x * y * y + y * y * z * z + x * x * z * z + CycloNumber(2) * (x * y * z * (x + y - z));
  EXPECT_FALSE(is_smooth_exact(q));
}

TEST(Smoothness, InvariantUnderCoordinateChange) {
  std::mt19937 rng(17);
  MPoly x = MPoly::x(), y = MPoly::y(), z = MPoly::z();
  MPoly node = y * y * z - x * x * (x + z);
  for (int trial = 0; trial < 4; ++trial) {
    Matrix3 m = random_matrix(rng);
    EXPECT_TRUE(is_smooth_exact(linear_substitute(fermat(3 + trial % 2), m)));
    EXPECT_FALSE(is_smooth_exact(linear_substitute(node, m)));
    EXPECT_EQ(is_smooth_modular(linear_substitute(fermat(4), m)).smooth, true);
  }
}

TEST(Smoothness, DispatchMarksMethod) {
  auto exact = check_smoothness(fermat(5));
  EXPECT_TRUE(exact.smooth);
  EXPECT_EQ(exact.method, "exact-resultant");
  EXPECT_FALSE(exact.probabilistic);
  auto mod = check_smoothness(fermat(8));
  EXPECT_TRUE(mod.smooth);
  EXPECT_EQ(mod.method, "modular");
  EXPECT_TRUE(mod.probabilistic);
  EXPECT_EQ(mod.prime % 2, 1u);
}
