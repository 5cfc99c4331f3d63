#pragma once

#include <cmath>
#include <complex>
#include <future>
#include <numbers>
#include <string>
#include <vector>

#include "zariski/curves.hpp"

namespace zariski {

using Complex = std::complex<double>;

/// Sinusoidal deformation s -> amplitude * sin(mode * pi * s) of one segment's
/// affine parameter; endpoints stay fixed.
struct PathWiggle {
  int segment = 0;
  int mode = 1;
  Complex amplitude;
};

/// Closed path on a triangle: segment i runs inside lines[i] from vertices[i]
/// to vertices[i+1] along mu(s) = s + bump * 4s(1-s) + wiggles, where the point
/// is (1 - mu) vertices[i] + mu vertices[i+1].
struct TriangleCycle {
  std::array<LineForm, 3> lines{LineForm(1, 0, 0), LineForm(0, 1, 0), LineForm(0, 0, 1)};
  std::array<ProjPoint, 3> vertices{ProjPoint{CycloNumber(0), CycloNumber(1), CycloNumber(0)},
                                    ProjPoint{CycloNumber(0), CycloNumber(0), CycloNumber(1)},
                                    ProjPoint{CycloNumber(1), CycloNumber(0), CycloNumber(0)}};
  int base = 0;
  bool reversed = false;
  std::array<Complex, 3> bumps{};
  std::vector<PathWiggle> wiggles;

  void check() const {
    if (base < 0 || base > 2) raise(ErrorCode::PrecondViolation, "base vertex index must be 0, 1 or 2");
    for (std::size_t i = 0; i < 3; ++i) {
      const ProjPoint& p = vertices[i];
      const ProjPoint& q = vertices[(i + 1) % 3];
      if (!lines[i].evaluate(p).is_zero() || !lines[i].evaluate(q).is_zero())
        raise(ErrorCode::PrecondViolation, "line " + std::to_string(i + 1) + " misses one of its vertices");
    }
    Matrix3 m{vertices[0], vertices[1], vertices[2]};
    if (det3(m).is_zero()) raise(ErrorCode::PrecondViolation, "cycle vertices are collinear or repeated");
  }

  /// Segment indices in traversal order.
  std::array<int, 3> order() const {
    if (!reversed) return {base, (base + 1) % 3, (base + 2) % 3};
    return {(base + 2) % 3, (base + 1) % 3, base};
  }
};

/// The standard trajectory [0:1:0] -> [0:0:1] -> [1:0:0] -> [0:1:0].
inline TriangleCycle standard_cycle() { return TriangleCycle{}; }

namespace detail {

// The remaining variable indices after eliminating the pivot of `line`, in the
// order used by restrict_to_line.
inline std::array<int, 2> line_chart(const LineForm& line) {
  int p = line.pivot();
  return {p == 0 ? 1 : 0, p == 2 ? 1 : 2};
}

// Linear form l with f|_line = c * l^d; l evaluated at a point of the line.
struct TangentForm {
  LinearBinary l;
  std::array<int, 2> chart;

  CycloNumber operator()(const ProjPoint& p) const {
    return l.a * p[static_cast<std::size_t>(chart[0])] + l.b * p[static_cast<std::size_t>(chart[1])];
  }
};

inline TangentForm tangent_form(const MPoly& f, const LineForm& line, int d) {
  auto p = dth_power_test(restrict_to_line(f, line), d);
  if (!p) raise(ErrorCode::NotTangentAtOnePoint, "the curve is not tangent to a cycle line at a single point");
  return {p->second, line_chart(line)};
}

}  // namespace detail

/// Holonomy of the d-th root of f around the cycle: on line i the lift is the
/// single branch t = u_i l_i, so each segment contributes l_i(end) / l_i(start).
inline CycloNumber triangle_holonomy(const MPoly& f, const TriangleCycle& cycle, int d) {
  cycle.check();
  CycloNumber h(1);
  for (int i : cycle.order()) {
    auto l = detail::tangent_form(f, cycle.lines[static_cast<std::size_t>(i)], d);
    CycloNumber start = l(cycle.vertices[static_cast<std::size_t>(i)]);
    CycloNumber end = l(cycle.vertices[static_cast<std::size_t>((i + 1) % 3)]);
    if (start.is_zero() || end.is_zero()) raise(ErrorCode::PathThroughCurve, "a cycle vertex lies on the curve");
    h *= cycle.reversed ? start / end : end / start;
  }
  return h;
}

/// Linking invariant computed on the curve's own lines: vertex P1 = L1 ^ L3,
/// P2 = L1 ^ L2, P3 = L2 ^ L3 (columns of the inverse line matrix).
inline RootOfUnity linking_exact(const CurveSpec& c, bool reversed = false) {
  verify_hat(c);
  Matrix3 inv = inverse3(lines_matrix(c.lines));
  auto column = [&](int j) {
    return ProjPoint{inv[0][static_cast<std::size_t>(j)], inv[1][static_cast<std::size_t>(j)], inv[2][static_cast<std::size_t>(j)]};
  };
  TriangleCycle cycle;
  cycle.lines = {c.lines[0], c.lines[1], c.lines[2]};
  cycle.vertices = {column(1), column(2), column(0)};
  cycle.reversed = reversed;
  CycloNumber h = triangle_holonomy(c.main, cycle, c.d);
  auto root = classify_root_of_unity(h);
  if (!root || !root->is_dth_root(c.d)) raise(ErrorCode::NotNormalizable, "holonomy is not a d-th root of unity");
  return *root;
}

/// Unordered invariant {xi, xi^-1}, represented by its half-plane class.
inline RootOfUnity linking_class(const CurveSpec& c) { return half_plane_class(linking_exact(c), c.d); }

struct LiftPoint {
  ProjPoint point;
  CycloNumber t;

  std::string to_string() const {
    return "[" + point[0].to_string() + ":" + point[1].to_string() + ":" + point[2].to_string() + ":" + t.to_string() + "]";
  }
  friend bool operator==(const LiftPoint&, const LiftPoint&) = default;
};

/// End of the lift of segments 1..segment of the standard cycle on the
/// normalized curve, starting from [0:1:0:1].
inline LiftPoint lift_endpoint_check(const CurveSpec& c, const HatVerification& v, int segment) {
  if (segment < 1 || segment > 3) raise(ErrorCode::PrecondViolation, "segment must be 1, 2 or 3");
  const MPoly& f = v.certificate.normalized;
  TriangleCycle cycle = standard_cycle();
  CycloNumber t(1);
  if (evaluate(f, cycle.vertices[0]) != t.pow(c.d)) raise(ErrorCode::NotNormalized, "normalized curve does not take value 1 at [0:1:0]");
  for (int i = 0; i < segment; ++i) {
    auto l = detail::tangent_form(f, cycle.lines[static_cast<std::size_t>(i)], c.d);
    t *= l(cycle.vertices[static_cast<std::size_t>((i + 1) % 3)]) / l(cycle.vertices[static_cast<std::size_t>(i)]);
  }
  LiftPoint out{cycle.vertices[static_cast<std::size_t>(segment % 3)], t};
  if (evaluate(f, out.point) != t.pow(c.d)) raise(ErrorCode::InvalidOperand, "lift endpoint is off the cover");
  return out;
}

inline LiftPoint lift_endpoint_check(const CurveSpec& c, int segment) { return lift_endpoint_check(c, verify_hat(c), segment); }

struct TrackSample {
  int segment = 0;
  double s = 0;
  Complex mu;
  Complex t;
  int branch = 0;  // t = principal root * exp(2 pi i branch / d)
};

struct BranchTrack {
  std::vector<TrackSample> samples;
  int bisections = 0;

  std::vector<int> branch_log() const {
    std::vector<int> out;
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back(s.branch);
    return out;
  }
};

struct NumericOptions {
  int steps = 64;
  double clearance = 1e-3;
  double tolerance = 1e-8;
  int max_bisections = 40;
};

struct NumericLinking {
  Complex estimate;
  BranchTrack track;
};

namespace detail {

struct SegmentPath {
  int index = 0;
  std::array<Complex, 3> from, to;
  Complex bump;
  std::vector<PathWiggle> wiggles;
  bool has_tangency = false;
  Complex tangency;  // value of mu where the line meets the curve

  Complex mu(double s) const {
    Complex m = s + bump * (4.0 * s * (1.0 - s));
    for (const auto& w : wiggles) m += w.amplitude * std::sin(w.mode * std::numbers::pi * s);
    return m;
  }
  std::array<Complex, 3> point(Complex m) const {
    return {(1.0 - m) * from[0] + m * to[0], (1.0 - m) * from[1] + m * to[1], (1.0 - m) * from[2] + m * to[2]};
  }
  double clearance_at(double s) const { return has_tangency ? std::abs(mu(s) - tangency) : INFINITY; }
};

struct NumericPoly {
  std::vector<std::pair<Exponent, Complex>> terms;

  Complex operator()(const std::array<Complex, 3>& p) const {
    Complex acc = 0;
    for (const auto& [e, c] : terms) acc += c * std::pow(p[0], e[0]) * std::pow(p[1], e[1]) * std::pow(p[2], e[2]);
    return acc;
  }
};

inline NumericPoly embed(const MPoly& f) {
  NumericPoly out;
  for (const auto& [e, c] : f.terms()) out.terms.emplace_back(e, c.to_complex());
  return out;
}

inline std::array<Complex, 3> embed(const ProjPoint& p) { return {p[0].to_complex(), p[1].to_complex(), p[2].to_complex()}; }

inline SegmentPath segment_path(const MPoly& f, const TriangleCycle& cycle, int i, int d) {
  SegmentPath seg;
  seg.index = i;
  const ProjPoint& a = cycle.vertices[static_cast<std::size_t>(i)];
  const ProjPoint& b = cycle.vertices[static_cast<std::size_t>((i + 1) % 3)];
  seg.from = embed(a);
  seg.to = embed(b);
  seg.bump = cycle.bumps[static_cast<std::size_t>(i)];
  for (const auto& w : cycle.wiggles)
    if (w.segment == i) seg.wiggles.push_back(w);
  auto l = tangent_form(f, cycle.lines[static_cast<std::size_t>(i)], d);
  Complex la = l(a).to_complex(), lb = l(b).to_complex();
  if (std::abs(la - lb) > 1e-14 * (std::abs(la) + std::abs(lb))) {
    seg.has_tangency = true;
    seg.tangency = la / (la - lb);
  }
  return seg;
}

class SegmentTracker {
 public:
  SegmentTracker(const SegmentPath& seg, const NumericPoly& f, int d, const NumericOptions& opt)
      : seg_(seg), f_(f), d_(d), opt_(opt), margin_(std::sin(std::numbers::pi / d)) {}

  // Continues the principal root at s = s0 to s = s1; returns the ratio t(s1) / t(s0).
  Complex run(double s0, double s1, BranchTrack& track) {
    Complex t0 = root(s0, 0);
    push(track, s0, t0, 0);
    Complex t = t0;
    for (int j = 1; j <= opt_.steps; ++j) {
      double sa = s0 + (s1 - s0) * (j - 1) / opt_.steps;
      double sb = s0 + (s1 - s0) * j / opt_.steps;
      t = advance(sa, sb, t, 0, track);
    }
    return t / t0;
  }

 private:
  Complex root(double s, int k) const {
    Complex v = f_(seg_.point(seg_.mu(s)));
    return std::pow(v, 1.0 / d_) * std::polar(1.0, 2.0 * std::numbers::pi * k / d_);
  }

  void push(BranchTrack& track, double s, Complex t, int k) const {
    if (seg_.clearance_at(s) < opt_.clearance)
      raise(ErrorCode::PathThroughCurve, "segment " + std::to_string(seg_.index + 1) + " passes within the clearance of a tangency point");
    Complex v = f_(seg_.point(seg_.mu(s)));
    if (std::abs(std::pow(t, d_) - v) > opt_.tolerance * std::max(1.0, std::abs(v)))
      raise(ErrorCode::BranchAmbiguity, "tracked value left the cover");
    track.samples.push_back({seg_.index, s, seg_.mu(s), t, k});
  }

  struct Pick {
    int k = 0;
    Complex t;
    double dist = INFINITY, second = INFINITY;
  };

  Pick pick(double s, Complex prev) const {
    Pick p;
    for (int k = 0; k < d_; ++k) {
      Complex cand = root(s, k);
      double dist = std::abs(cand - prev);
      if (dist < p.dist) {
        p.second = p.dist;
        p.dist = dist;
        p.k = k;
        p.t = cand;
      } else if (dist < p.second) {
        p.second = dist;
      }
    }
    return p;
  }

  // A step is accepted when the nearest root is well separated from the others
  // and going through the midpoint selects the same root.
  Complex advance(double sa, double sb, Complex prev, int depth, BranchTrack& track) {
    if (seg_.clearance_at(sb) < opt_.clearance || seg_.clearance_at(0.5 * (sa + sb)) < opt_.clearance)
      raise(ErrorCode::PathThroughCurve, "segment " + std::to_string(seg_.index + 1) + " passes within the clearance of a tangency point");
    double mid = 0.5 * (sa + sb);
    Pick direct = pick(sb, prev);
    Pick half = pick(mid, prev);
    Pick via = pick(sb, half.t);
    bool separated = direct.dist < 0.5 * direct.second && half.dist < 0.5 * half.second && via.dist < 0.5 * via.second;
    bool safe = separated && direct.dist < std::abs(prev) * margin_ && via.k == direct.k;
    if (!safe) {
      if (depth >= opt_.max_bisections) raise(ErrorCode::BranchAmbiguity, "branch choice stays ambiguous after bisection");
      ++track.bisections;
      Complex m = advance(sa, mid, prev, depth + 1, track);
      return advance(mid, sb, m, depth + 1, track);
    }
    push(track, sb, direct.t, direct.k);
    return direct.t;
  }

  const SegmentPath& seg_;
  const NumericPoly& f_;
  int d_;
  NumericOptions opt_;
  double margin_;
};

}  // namespace detail

/// Smallest |mu - tangency| along a sampled segment of the cycle, for a
/// normalized equation of degree d.
inline double cycle_clearance(const MPoly& normalized, int d, const TriangleCycle& cycle, int samples = 512) {
  double best = INFINITY;
  for (int i = 0; i < 3; ++i) {
    auto seg = detail::segment_path(normalized, cycle, i, d);
    for (int j = 0; j <= samples; ++j) best = std::min(best, seg.clearance_at(static_cast<double>(j) / samples));
  }
  return best;
}

inline double cycle_clearance(const CurveSpec& c, const TriangleCycle& cycle, int samples = 512) {
  return cycle_clearance(verify_hat(c).certificate.normalized, c.d, cycle, samples);
}

/// Standard cycle with per-segment bumps chosen to keep away from tangency points.
inline TriangleCycle auto_cycle(const CurveSpec& c, const HatVerification& v, double min_distance = 0.1) {
  TriangleCycle cycle = standard_cycle();
  const std::array<Complex, 5> candidates{Complex(0, 0), Complex(0, 0.5), Complex(0, -0.5), Complex(0, 1), Complex(0, -1)};
  for (int i = 0; i < 3; ++i) {
    double best = -1;
    for (const auto& b : candidates) {
      cycle.bumps[static_cast<std::size_t>(i)] = b;
      auto seg = detail::segment_path(v.certificate.normalized, cycle, i, c.d);
      double dist = INFINITY;
      for (int j = 0; j <= 256; ++j) dist = std::min(dist, seg.clearance_at(j / 256.0));
      if (dist >= min_distance) {
        best = dist;
        break;
      }
    }
    if (best < 0) raise(ErrorCode::PathThroughCurve, "no bumped path avoids the tangency point");
  }
  return cycle;
}

inline TriangleCycle auto_cycle(const CurveSpec& c, double min_distance = 0.1) { return auto_cycle(c, verify_hat(c), min_distance); }

/// Continues the d-th root of the normalized curve's equation along the cycle,
/// always taking the root nearest the previous value. Segments are tracked
/// concurrently and glued at the vertices; the estimate is t_end / t_start.
inline NumericLinking linking_numeric(const CurveSpec& c, const HatVerification& v, const TriangleCycle& cycle, const NumericOptions& opt = {}) {
  if (opt.steps < 1) raise(ErrorCode::PrecondViolation, "steps must be positive");
  cycle.check();
  const MPoly& f = v.certificate.normalized;
  detail::NumericPoly fn = detail::embed(f);
  std::array<detail::SegmentPath, 3> segs;
  for (int i = 0; i < 3; ++i) segs[static_cast<std::size_t>(i)] = detail::segment_path(f, cycle, i, c.d);

  auto order = cycle.order();
  std::array<BranchTrack, 3> tracks;
  std::array<std::future<Complex>, 3> ratios;
  for (std::size_t k = 0; k < 3; ++k) {
    int i = order[k];
    ratios[k] = std::async(std::launch::async, [&, i, k] {
      detail::SegmentTracker tr(segs[static_cast<std::size_t>(i)], fn, c.d, opt);
      return cycle.reversed ? tr.run(1.0, 0.0, tracks[k]) : tr.run(0.0, 1.0, tracks[k]);
    });
  }
  NumericLinking out;
  out.estimate = 1.0;
  for (std::size_t k = 0; k < 3; ++k) {
    Complex ratio = ratios[k].get();
    // glue: rescale this segment so it starts where the previous one ended
    Complex first = tracks[k].samples.front().t;
    Complex target = k == 0 ? first : out.track.samples.back().t;
    Complex scale = target / first;
    for (auto s : tracks[k].samples) {
      s.t *= scale;
      out.track.samples.push_back(s);
    }
    out.track.bisections += tracks[k].bisections;
    out.estimate *= ratio;
  }
  return out;
}

inline NumericLinking linking_numeric(const CurveSpec& c, const TriangleCycle& cycle, const NumericOptions& opt = {}) {
  return linking_numeric(c, verify_hat(c), cycle, opt);
}

inline NumericLinking linking_numeric(const CurveSpec& c, const NumericOptions& opt = {}) {
  auto v = verify_hat(c);
  return linking_numeric(c, v, auto_cycle(c, v), opt);
}

}  // namespace zariski
