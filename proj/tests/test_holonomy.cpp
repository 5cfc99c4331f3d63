#include <gtest/gtest.h>

#include <random>

#include "zariski/corpus.hpp"
#include "zariski/holonomy.hpp"

using namespace zariski;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidOperand;
}

CurveSpec kummer(int d, int a, int b, int variant) {
  return kummer_construct(d, {RootOfUnity(2 * d, 2 * a + 1), RootOfUnity(2 * d, 2 * b + 1), RootOfUnity(2 * d, 1)}, variant).curve;
}

LiftPoint lift(int x, int y, int z, const CycloNumber& t) { return {ProjPoint{CycloNumber(x), CycloNumber(y), CycloNumber(z)}, t}; }

const std::vector<CorpusCurve>& small_corpus() {
  static const std::vector<CorpusCurve> c = hat_corpus(5);
  return c;
}

}  // namespace

TEST(Holonomy, ExactMatchesHatLabel) {
  for (const auto& c : small_corpus()) {
    auto v = verify_hat(c.curve);
    RootOfUnity xi = linking_exact(c.curve);
    EXPECT_EQ(xi, v.certificate.raw_root) << c.name;
    EXPECT_EQ(linking_class(c.curve), v.label.zeta) << c.name;
    EXPECT_EQ(linking_class(c.curve), c.predicted) << c.name;
  }
}

TEST(Holonomy, LiftEndpoints) {
  for (const auto& c : small_corpus()) {
    CycloNumber zeta = verify_hat(c.curve).certificate.raw_zeta;
    EXPECT_EQ(lift_endpoint_check(c.curve, 1), lift(0, 0, 1, CycloNumber(1))) << c.name;
    EXPECT_EQ(lift_endpoint_check(c.curve, 2), lift(1, 0, 0, CycloNumber(1))) << c.name;
    EXPECT_EQ(lift_endpoint_check(c.curve, 3), lift(0, 1, 0, zeta)) << c.name;
  }
  EXPECT_EQ(lift_endpoint_check(kummer(2, 0, 0, 1), 3).to_string(), "[0:1:0:-1]");
  EXPECT_EQ(code_of([] { lift_endpoint_check(kummer(2, 0, 0, 1), 4); }), ErrorCode::PrecondViolation);
}

TEST(Holonomy, ThirdEdgeCubeGivesZeta3) {
  // normalized cubic with F(x, y, 0) = (x + zeta_3 y)^3
  auto k = kummer_construct(3, {RootOfUnity(2, 1), RootOfUnity(6, 1), RootOfUnity(2, 1)}, 2);
  auto v = verify_hat(k.curve);
  LinearBinary third{CycloNumber(1), CycloNumber::root_of_unity(3, 1)};
  LinearBinary third_conj{CycloNumber(1), CycloNumber::root_of_unity(3, 2)};
  bool matches = v.certificate.restrictions[2] == third.power(3, "x", "y") || v.certificate.restrictions[2] == third_conj.power(3, "x", "y");
  EXPECT_TRUE(matches) << v.certificate.restrictions[2].to_string();
  EXPECT_EQ(linking_class(k.curve), RootOfUnity(3, 1));
}

TEST(Holonomy, FermatModelAgreesWithNormalizedModel) {
  for (int d = 2; d <= 4; ++d)
    for (int a = 0; a < d; ++a) {
      auto k = kummer_construct(d, {RootOfUnity(2 * d, 2 * a + 1), RootOfUnity(2 * d, 1), RootOfUnity(2 * d, 3 % (2 * d))}, 1);
      EXPECT_EQ(linking_class(k.fermat_model), linking_class(k.curve)) << d << " " << a;
    }
}

TEST(Holonomy, ReversalInverts) {
  for (const auto& c : small_corpus()) {
    RootOfUnity xi = linking_exact(c.curve);
    EXPECT_EQ(linking_exact(c.curve, true), xi.inverse()) << c.name;
    TriangleCycle cyc = auto_cycle(c.curve);
    cyc.reversed = true;
    auto num = linking_numeric(c.curve, cyc);
    EXPECT_NEAR(std::abs(num.estimate - xi.inverse().to_complex()), 0.0, 1e-8) << c.name;
  }
}

TEST(Holonomy, BaseVertexDoesNotMatter) {
  CurveSpec c = kummer(5, 0, 1, 1);
  auto v = verify_hat(c);
  for (int base = 0; base < 3; ++base) {
    TriangleCycle cyc = auto_cycle(c);
    cyc.base = base;
    EXPECT_EQ(triangle_holonomy(v.certificate.normalized, cyc, 5), v.certificate.raw_zeta);
    EXPECT_NEAR(std::abs(linking_numeric(c, cyc).estimate - v.certificate.raw_zeta.to_complex()), 0.0, 1e-8);
  }
}

TEST(Holonomy, NumericMatchesExact) {
  for (const auto& c : small_corpus()) {
    Complex exact = linking_exact(c.curve).to_complex();
    auto num = linking_numeric(c.curve);
    EXPECT_NEAR(std::abs(num.estimate - exact), 0.0, 1e-8) << c.name;
    ASSERT_FALSE(num.track.samples.empty());
    for (std::size_t i = 1; i < num.track.samples.size(); ++i) {
      const auto& a = num.track.samples[i - 1];
      const auto& b = num.track.samples[i];
      if (a.segment != b.segment) continue;
      EXPECT_LT(std::abs(b.t - a.t), std::abs(a.t) * std::sin(std::numbers::pi / c.curve.d)) << c.name;
    }
  }
}

TEST(Holonomy, TrackIsOnTheCoverAndContinuous) {
  CurveSpec c = kummer(4, 0, 0, 1);
  auto v = verify_hat(c);
  auto num = linking_numeric(c);
  detail::NumericPoly f = detail::embed(v.certificate.normalized);
  TriangleCycle cyc = auto_cycle(c);
  for (const auto& s : num.track.samples) {
    auto seg = detail::segment_path(v.certificate.normalized, cyc, s.segment, 4);
    Complex val = f(seg.point(s.mu));
    EXPECT_NEAR(std::abs(std::pow(s.t, 4) - val), 0.0, 1e-8 * std::max(1.0, std::abs(val)));
  }
  // glued at vertices: last sample of one segment equals the first of the next
  for (std::size_t i = 1; i < num.track.samples.size(); ++i)
    if (num.track.samples[i].segment != num.track.samples[i - 1].segment)
      EXPECT_NEAR(std::abs(num.track.samples[i].t - num.track.samples[i - 1].t), 0.0, 1e-12);
  Complex first = num.track.samples.front().t, last = num.track.samples.back().t;
  EXPECT_NEAR(std::abs(last / first - num.estimate), 0.0, 1e-12);
}

TEST(Holonomy, StepRefinementIsStable) {
  for (const auto& c : small_corpus()) {
    Complex prev;
    for (int steps : {8, 16, 32, 64, 128}) {
      NumericOptions opt;
      opt.steps = steps;
      Complex est = linking_numeric(c.curve, opt).estimate;
      if (steps > 8) EXPECT_LT(std::abs(est - prev), 1e-10) << c.name << " " << steps;
      prev = est;
    }
  }
}

TEST(Holonomy, RandomPerturbationsKeepValue) {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> amp(-0.3, 0.3);
  std::uniform_int_distribution<int> mode(1, 3);
  for (const auto& c : small_corpus()) {
    Complex exact = linking_exact(c.curve).to_complex();
    TriangleCycle base = auto_cycle(c.curve);
    MPoly normalized = verify_hat(c.curve).certificate.normalized;
    int accepted = 0;
    for (int attempt = 0; attempt < 100 && accepted < 10; ++attempt) {
      TriangleCycle cyc = base;
      for (int seg = 0; seg < 3; ++seg) cyc.wiggles.push_back({seg, mode(rng), Complex(amp(rng), amp(rng))});
      if (cycle_clearance(normalized, c.curve.d, cyc) < 0.05) continue;
      ++accepted;
      EXPECT_NEAR(std::abs(linking_numeric(c.curve, cyc).estimate - exact), 0.0, 1e-8) << c.name;
    }
    EXPECT_EQ(accepted, 10) << c.name;
  }
}

TEST(Holonomy, PathThroughTangency) {
  // for zeta = -1 the straight third segment hits the tangency point at mu = 1/2
  CurveSpec c = kummer(2, 0, 0, 1);
  EXPECT_EQ(code_of([&] { linking_numeric(c, standard_cycle()); }), ErrorCode::PathThroughCurve);
  NumericOptions opt;
  opt.clearance = 0.6;
  EXPECT_EQ(code_of([&] { linking_numeric(c, auto_cycle(c), opt); }), ErrorCode::PathThroughCurve);
}

TEST(Holonomy, CoarseStepsBisect) {
  CurveSpec c = kummer(6, 0, 0, 1);
  NumericOptions opt;
  opt.steps = 1;
  auto num = linking_numeric(c, opt);
  EXPECT_GT(num.track.bisections, 0);
  EXPECT_NEAR(std::abs(num.estimate - linking_exact(c).to_complex()), 0.0, 1e-8);
  opt.max_bisections = 0;
  EXPECT_EQ(code_of([&] { linking_numeric(c, opt); }), ErrorCode::BranchAmbiguity);
}

TEST(Holonomy, BadCycles) {
  CurveSpec c = kummer(3, 0, 0, 1);
  TriangleCycle cyc;
  cyc.vertices[0] = ProjPoint{CycloNumber(1), CycloNumber(1), CycloNumber(0)};
  EXPECT_EQ(code_of([&] { linking_numeric(c, cyc); }), ErrorCode::PrecondViolation);
  cyc = standard_cycle();
  cyc.base = 3;
  EXPECT_EQ(code_of([&] { linking_numeric(c, cyc); }), ErrorCode::PrecondViolation);
  CurveSpec secant = c;
  secant.lines[2] = LineForm(1, 1, 1);
  EXPECT_THROW(linking_exact(secant), Error);
}

TEST(Holonomy, ConjugateCurveHasConjugateHolonomy) {
  for (const auto& c : small_corpus()) {
    if (c.name.rfind("cremona", 0) == 0) continue;
    CurveSpec conj = galois_conjugate_curve(c.curve, -1);
    EXPECT_EQ(linking_exact(conj), linking_exact(c.curve).conj()) << c.name;
  }
}

TEST(Holonomy, DistinctStrataSeparate) {
  for (int d = 2; d <= 5; ++d) {
    auto reps = stratum_representatives(d);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) EXPECT_NE(linking_class(reps[i].curve), linking_class(reps[j].curve)) << d;
  }
  // d = 5: the zeta_5 and zeta_5^2 representatives are Galois conjugate (k = 2)
  auto reps = stratum_representatives(5);
  const CorpusCurve* z1 = nullptr;
  for (const auto& r : reps)
    if (r.predicted == RootOfUnity(5, 1)) z1 = &r;
  ASSERT_NE(z1, nullptr);
  CurveSpec conj = galois_conjugate_curve(z1->curve, lift_galois_exponent(2, 5, z1->curve.conductor));
  EXPECT_EQ(linking_class(conj), RootOfUnity(5, 2));
  EXPECT_NE(linking_class(conj), linking_class(z1->curve));
}
