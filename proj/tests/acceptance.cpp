// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--only N] [--known-failures N,M]
//
// Exit status is the number of failing criteria, or with --known-failures, 0 iff
// exactly the listed criteria fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "group_oracles.hpp"
#include "zariski/corpus.hpp"
#include "zariski/groups/builtin.hpp"
#include "zariski/groups/pipelines.hpp"
#include "zariski/groups/snf.hpp"
#include "zariski/groups/todd_coxeter.hpp"
#include "zariski/holonomy.hpp"

using namespace zariski;
using Clock = std::chrono::steady_clock;

namespace tol {
constexpr double strata_seconds = 1.0;
constexpr double construction_seconds = 30.0;
constexpr double numeric_vs_exact = 1e-8;
constexpr double step_doubling = 1e-10;
constexpr int perturbations = 10;
constexpr double perturbation_clearance = 0.05;
constexpr double seconds_per_curve = 10.0;
constexpr double b3s2_seconds = 1.0;
constexpr int rs_depth = 6;
constexpr double rs_seconds = 60.0;
constexpr int witness_depth = 8;
constexpr int corpus_max_d = 6;
}  // namespace tol

namespace {

// Collects failures for one criterion; the first few are echoed.
struct Verdict {
  int failures = 0;
  std::ostringstream notes;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures < 4) notes << "\n      " << what;
    ++failures;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double x) {
  std::ostringstream o;
  o.precision(3);
  o << x;
  return o.str();
}

const std::vector<CorpusCurve>& corpus() {
  static const std::vector<CorpusCurve> c = hat_corpus(tol::corpus_max_d);
  return c;
}

void strata_counting(Verdict& v) {
  auto t0 = Clock::now();
  for (int d = 2; d <= 12; ++d) {
    auto s = enumerate_strata(d);
    v.expect(static_cast<int>(s.size()) == d / 2 + 1, "d=" + std::to_string(d) + " gives " + std::to_string(s.size()) + " strata");
  }
  double secs = seconds_since(t0);
  v.expect(secs < tol::strata_seconds, "runtime " + fmt(secs) + " s");
  for (int m : {5, 7, 8, 9, 12}) {
    int coprime = 0;
    for (int k = 1; k <= m; ++k) coprime += std::gcd(k, m) == 1 ? 1 : 0;
    v.expect(arithmetic_tuple_size(m) == coprime / 2, "m=" + std::to_string(m));
  }
  v.summary = "d=2..12 in " + fmt(secs) + " s; m in {5,7,8,9,12} -> {2,3,2,3,2}";
}

void construction_coverage(Verdict& v) {
  auto t0 = Clock::now();
  int built = 0;
  for (int d = 2; d <= 6; ++d) {
    std::set<std::int64_t> hit;
    auto tau = [d](int a) { return RootOfUnity(2 * d, 2 * a + 1); };
    for (int variant = 1; variant <= 2; ++variant)
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < 2; ++b) {
          if (variant == 2 && a == b) continue;
          auto k = kummer_construct(d, {tau(a), tau(b), tau(0)}, variant);
          RootOfUnity predicted = half_plane_class(k.predicted, d);
          RootOfUnity label = verify_hat(k.curve).label.zeta;
          ++built;
          v.expect(label == predicted, "d=" + std::to_string(d) + " variant " + std::to_string(variant) + ": label " + label.to_string() +
                                           " vs predicted " + predicted.to_string());
          if (label == predicted) hit.insert(label.exponent * (d / label.order));
        }
    if (d >= 3)
      for (int den : {1, 2, 4, 10}) {
        CurveSpec c = degeneration_member(d, {tau(0), tau(1), tau(2)}, Rational(1, den));
        try {
          if (verify_hat(c).label.zeta == RootOfUnity(1, 0)) hit.insert(0);
          ++built;
        } catch (const Error&) {
        }
      }
    for (const auto& s : enumerate_strata(d))
      if (s.realizable) v.expect(hit.count(s.zeta.exponent * (d / s.zeta.order)) == 1, "d=" + std::to_string(d) + " misses " + s.zeta.to_string());
  }
  double secs = seconds_since(t0);
  v.expect(secs < tol::construction_seconds, "runtime " + fmt(secs) + " s");
  v.summary = std::to_string(built) + " curves, every realizable stratum hit, " + fmt(secs) + " s";
}

void linking_invariant(Verdict& v) {
  std::mt19937 rng(20240531);
  std::uniform_real_distribution<double> amp(-0.3, 0.3);
  std::uniform_int_distribution<int> mode(1, 3);
  double worst_err = 0, worst_drift = 0, slowest = 0;
  for (const auto& c : corpus()) {
    auto t0 = Clock::now();
    auto ver = verify_hat(c.curve);
    RootOfUnity xi = linking_exact(c.curve);
    v.expect(half_plane_class(xi, c.curve.d) == ver.label.zeta, c.name + ": linking " + xi.to_string() + " vs label " + ver.label.zeta.to_string());
    v.expect(lift_endpoint_check(c.curve, ver, 1).to_string() == "[0:0:1:1]", c.name + " endpoint 1");
    v.expect(lift_endpoint_check(c.curve, ver, 2).to_string() == "[1:0:0:1]", c.name + " endpoint 2");
    v.expect(lift_endpoint_check(c.curve, ver, 3).to_string() == "[0:1:0:" + ver.certificate.raw_zeta.to_string() + "]", c.name + " endpoint 3");
    TriangleCycle base = auto_cycle(c.curve, ver);
    Complex exact = xi.to_complex();
    NumericOptions opt;
    Complex prev;
    for (int steps : {64, 128, 256}) {
      opt.steps = steps;
      Complex est = linking_numeric(c.curve, ver, base, opt).estimate;
      worst_err = std::max(worst_err, std::abs(est - exact));
      if (steps > 64) worst_drift = std::max(worst_drift, std::abs(est - prev));
      prev = est;
    }
    int accepted = 0;
    for (int attempt = 0; attempt < 200 && accepted < tol::perturbations; ++attempt) {
      TriangleCycle cyc = base;
      for (int seg = 0; seg < 3; ++seg) cyc.wiggles.push_back({seg, mode(rng), Complex(amp(rng), amp(rng))});
      if (cycle_clearance(ver.certificate.normalized, c.curve.d, cyc) < tol::perturbation_clearance) continue;
      ++accepted;
      double err = std::abs(linking_numeric(c.curve, ver, cyc).estimate - exact);
      v.expect(err < tol::numeric_vs_exact, c.name + ": perturbed path error " + fmt(err));
    }
    v.expect(accepted == tol::perturbations, c.name + ": only " + std::to_string(accepted) + " admissible perturbations");
    double secs = seconds_since(t0);
    slowest = std::max(slowest, secs);
    v.expect(secs < tol::seconds_per_curve, c.name + ": " + fmt(secs) + " s");
  }
  v.expect(worst_err < tol::numeric_vs_exact, "numeric error " + fmt(worst_err));
  v.expect(worst_drift < tol::step_doubling, "step doubling drift " + fmt(worst_drift));
  v.summary = std::to_string(corpus().size()) + " curves; max |num-exact| " + fmt(worst_err) + ", max doubling drift " + fmt(worst_drift) +
              ", slowest " + fmt(slowest) + " s";
}

void conjugation_separation(Verdict& v) {
  auto reps5 = stratum_representatives(5);
  const CorpusCurve* z1 = nullptr;
  for (const auto& r : reps5)
    if (r.predicted == RootOfUnity(5, 1)) z1 = &r;
  v.expect(z1 != nullptr, "no zeta_5 representative");
  if (z1) {
    CurveSpec conj = galois_conjugate_curve(z1->curve, lift_galois_exponent(2, 5, z1->curve.conductor));
    v.expect(verify_hat(conj).label.zeta == RootOfUnity(5, 2), "sigma_2 image is not in the zeta_5^2 stratum");
    v.expect(linking_class(conj) != linking_class(z1->curve), "conjugate classes coincide");
  }
  int pairs = 0;
  for (int d = 2; d <= 6; ++d) {
    auto reps = stratum_representatives(d);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        ++pairs;
        v.expect(linking_class(reps[i].curve) != linking_class(reps[j].curve), reps[i].name + " vs " + reps[j].name);
      }
  }
  v.summary = "zeta_5 -> zeta_5^2 under sigma_2; " + std::to_string(pairs) + " stratum pairs at d<=6 separated";
}

void finite_group(Verdict& v) {
  auto t0 = Clock::now();
  auto t = groups::todd_coxeter(groups::builtin_presentation("B3S2", 2));
  v.expect(t.complete(), "enumeration incomplete");
  std::vector<std::size_t> series;
  if (t.complete()) {
    v.expect(t.index() == 12, "order " + std::to_string(t.index()));
    series = groups::derived_series_finite(t);
    v.expect(series == std::vector<std::size_t>{12, 3, 1}, "derived series");
  }
  double secs = seconds_since(t0);
  v.expect(secs < tol::b3s2_seconds, "runtime " + fmt(secs) + " s");
  v.summary = "order " + std::to_string(t.index()) + ", series [12,3,1], " + fmt(secs) + " s";
}

void abelianizations(Verdict& v) {
  int checked = 0;
  auto check = [&](const groups::Presentation& p, int free_rank, std::vector<long> torsion, const std::string& name) {
    ++checked;
    auto a = groups::abelianize(p);
    std::vector<long> engine_torsion;
    for (const auto& x : a.torsion) engine_torsion.push_back(x.get_si());
    v.expect(a.free_rank == free_rank && engine_torsion == torsion, name + ": engine " + a.to_string());
    auto diag = oracle::smith_diagonal_bezout(oracle::exponent_matrix(p.relators, p.rank()));
    auto [o_rank, o_tors] = oracle::invariants(diag, p.rank());
    std::vector<long> oracle_torsion(o_tors.begin(), o_tors.end());
    v.expect(o_rank == free_rank && oracle_torsion == torsion, name + ": dense oracle disagrees");
  };
  using groups::builtin_presentation;
  check(builtin_presentation("G", 2), 5, {}, "G");
  check(builtin_presentation("Artin244", 2), 3, {}, "Artin244");
  for (int d = 2; d <= 6; ++d) {
    std::string ds = "(" + std::to_string(d) + ")";
    check(builtin_presentation("K1hat", d), 2, {d}, "K1hat" + ds);
    check(builtin_presentation("Ktilde", d), d + 1, {}, "Ktilde" + ds);
    for (int h = 1; h < d; ++h) check(builtin_presentation("Kh", d, h), 3, {}, "Kh" + ds);
  }
  for (int d = 4; d <= 6; ++d) check(builtin_presentation("TriplePoint", d), 3, {}, "TriplePoint(" + std::to_string(d) + ")");
  v.summary = std::to_string(checked) + " presentations, engine and dense oracle agree";
}

void rs_fidelity(Verdict& v) {
  auto t0 = Clock::now();
  std::ostringstream unknown;
  int certified = 0, total = 0;
  for (int d = 2; d <= 3; ++d) {
    auto derived = groups::derived_k1hat(d);
    auto builtin = groups::builtin_presentation("K1hat", d);
    v.expect(groups::abelianize(derived) == groups::abelianize(builtin), "d=" + std::to_string(d) + ": invariants differ");
    for (const auto& rc : groups::relators_as_consequences(derived, builtin, tol::rs_depth)) {
      ++total;
      if (rc.result.proved()) {
        ++certified;
      } else {
        unknown << " " << rc.label << "(d=" << d << ")";
        v.expect(false, "d=" + std::to_string(d) + " " + rc.label + ": unknown at depth " + std::to_string(tol::rs_depth));
      }
    }
  }
  double secs = seconds_since(t0);
  v.expect(secs < tol::rs_seconds, "runtime " + fmt(secs) + " s");
  v.summary = std::to_string(certified) + "/" + std::to_string(total) + " relators certified, abelian invariants match, " + fmt(secs) + " s" +
              (unknown.str().empty() ? "" : "; unknown:" + unknown.str());
}

void abelianness_witness(Verdict& v) {
  std::ostringstream sizes;
  for (const auto& w : groups::kh_abelian_witness(4, 2, tol::witness_depth)) {
    v.expect(w.result.proved(), w.name + " unknown");
    if (w.result.proved()) {
      v.expect(groups::verify_certificate(groups::builtin_presentation("Kh", 4, 2), w.word, w.result.certificate), w.name + " certificate does not verify");
      sizes << " " << w.name << ":" << w.result.certificate.size();
    }
  }
  v.summary = "Kh(4,2) depth <= " + std::to_string(tol::witness_depth) + ", factors" + sizes.str();
}

bool proportional(const MPoly& f, const MPoly& g) {
  if (f.terms().size() != g.terms().size() || f.terms().empty()) return false;
  CycloNumber ratio = g.terms().begin()->second / f.terms().begin()->second;
  return ratio * f == g;
}

void cremona_round_trip(Verdict& v) {
  int n = 0;
  for (const auto& c : hat_corpus(3)) {
    if (c.curve.d > 3) continue;
    ++n;
    CurveSpec hat = is_coordinate_triangle(c.curve.lines) ? c.curve : normalize_triangle(c.curve);
    CurveSpec tilde = cremona_map(hat);
    int d = hat.d;
    v.expect(hat.total_degree() == d + 3 && tilde.total_degree() == 2 * d + 3, c.name + ": degrees " + std::to_string(hat.total_degree()) + " -> " +
                                                                                     std::to_string(tilde.total_degree()));
    v.expect(proportional(cremona_map(tilde).main, hat.main), c.name + ": not an involution up to scalar");
    v.expect(verify_sigma(tilde).label.zeta == verify_hat(hat).label.zeta, c.name + ": sigma class differs");
  }
  v.summary = std::to_string(n) + " corpus curves (d = 2, 3): d+3 <-> 2d+3, involutive, same class";
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known, only;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if ((a == "--known-failures" || a == "--only") && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      for (std::string tok; std::getline(ss, tok, ',');) (a == "--only" ? only : known).insert(std::stoi(tok));
    } else {
      std::cerr << "usage: acceptance [--only N,...] [--known-failures N,...]\n";
      return 2;
    }
  }
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
      {"strata counting", strata_counting},
      {"construction coverage", construction_coverage},
      {"linking invariant", linking_invariant},
      {"conjugation separation", conjugation_separation},
      {"finite group B3(S2)", finite_group},
      {"abelianizations", abelianizations},
      {"Reidemeister-Schreier fidelity", rs_fidelity},
      {"abelianness witness", abelianness_witness},
      {"Cremona round trip", cremona_round_trip},
  };
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Verdict v;
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    if (v.failures) failed.insert(id);
    std::cout << "criterion " << id << ": " << (v.failures ? "FAIL" : "PASS") << "  " << criteria[i].first << "  (" << v.summary << ")"
              << v.notes.str() << std::endl;
  }
  std::cout << failed.size() << " failing" << std::endl;
  if (!known.empty()) {
    if (!only.empty()) {
      std::set<int> k;
      for (int x : known)
        if (only.count(x)) k.insert(x);
      known = k;
    }
    return failed == known ? 0 : 1;
  }
  return static_cast<int>(failed.size());
}
