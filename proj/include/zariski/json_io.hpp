#pragma once

// JSON mirrors of the exact types. Rationals are [num, den]; integers outside the
// 64-bit range are written as decimal strings.

#include <json.hpp>
#include <string>
#include <vector>

#include "zariski/curves.hpp"
#include "zariski/groups/consequence.hpp"
#include "zariski/groups/presentation.hpp"
#include "zariski/groups/snf.hpp"
#include "zariski/groups/todd_coxeter.hpp"
#include "zariski/holonomy.hpp"

namespace zariski::io {

using json = nlohmann::ordered_json;

inline json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline mpz_class integer_from(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) raise(ErrorCode::InvalidOperand, "bad integer '" + j.get<std::string>() + "'");
    return z;
  }
  raise(ErrorCode::InvalidOperand, "expected an integer, got " + j.dump());
}

inline json to_json(const Rational& q) { return json::array({integer_json(q.get_num()), integer_json(q.get_den())}); }

inline Rational rational_from(const json& j) {
  if (j.is_number_integer() || j.is_string()) return Rational(integer_from(j));
  if (!j.is_array() || j.size() != 2) raise(ErrorCode::InvalidOperand, "rational must be [num, den]");
  mpz_class den = integer_from(j[1]);
  if (den == 0) raise(ErrorCode::InvalidOperand, "zero denominator");
  Rational q(integer_from(j[0]), den);
  q.canonicalize();
  return q;
}

inline json to_json(const CycloNumber& c) {
  json coeffs = json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(to_json(q));
  return {{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

inline CycloNumber cyclo_from(const json& j) {
  if (j.is_number_integer() || j.is_string() || j.is_array()) return CycloNumber(rational_from(j));
  std::vector<Rational> poly;
  for (const auto& q : j.at("coeffs")) poly.push_back(rational_from(q));
  return CycloNumber::from_poly(j.at("conductor").get<std::int64_t>(), std::move(poly));
}

inline json to_json(const RootOfUnity& z) {
  return {{"order", z.order}, {"exponent", z.exponent}, {"text", z.to_string()}};
}

inline RootOfUnity root_from(const json& j) { return RootOfUnity(j.at("order").get<std::int64_t>(), j.at("exponent").get<std::int64_t>()); }

inline json to_json(const MPoly& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coeff", to_json(c)}});
  return {{"degree", f.degree()}, {"terms", terms}};
}

inline MPoly mpoly_from(const json& j) {
  MPoly f(j.at("degree").get<int>());
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exp").get<Exponent>();
    if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != f.degree())
      raise(ErrorCode::DegreeMismatch, "term exponent " + t.at("exp").dump() + " does not match degree");
    f.add_term(e, cyclo_from(t.at("coeff")));
  }
  return f;
}

inline json to_json(const LineForm& l) { return json::array({to_json(l[0]), to_json(l[1]), to_json(l[2])}); }

inline LineForm line_from(const json& j) {
  if (!j.is_array() || j.size() != 3) raise(ErrorCode::InvalidOperand, "line must be [a, b, c]");
  return LineForm(cyclo_from(j[0]), cyclo_from(j[1]), cyclo_from(j[2]));
}

inline json to_json(const Matrix3& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(json::array({to_json(row[0]), to_json(row[1]), to_json(row[2])}));
  return out;
}

inline json to_json(const BinaryForm& b) {
  json coeffs = json::array();
  for (const auto& c : b.coeffs) coeffs.push_back(to_json(c));
  return {{"degree", b.degree}, {"vars", {b.u, b.v}}, {"coeffs", coeffs}, {"text", b.to_string()}};
}

inline json to_json(const CurveSpec& c) {
  json lines = json::array();
  for (const auto& l : c.lines) lines.push_back(to_json(l));
  return {{"family", std::string(to_string(c.family))}, {"d", c.d}, {"conductor", c.conductor}, {"main", to_json(c.main)}, {"lines", lines}};
}

inline CurveSpec curve_from(const json& j) {
  CurveSpec c;
  c.family = family_from_string(j.at("family").get<std::string>());
  c.d = j.at("d").get<int>();
  c.main = mpoly_from(j.at("main"));
  if (j.contains("lines"))
    for (const auto& l : j.at("lines")) c.lines.push_back(line_from(l));
  c.conductor = j.value("conductor", std::int64_t{1});
  std::int64_t needed = c.main.conductor();
  for (const auto& l : c.lines)
    for (int i = 0; i < 3; ++i) needed = std::lcm(needed, l[i].conductor());
  if (c.conductor % needed != 0) c.conductor = std::lcm(c.conductor, needed);
  c.check_shape();
  return c;
}

inline json to_json(const StratumLabel& l) {
  return {{"zeta", to_json(l.zeta)}, {"realizable", l.realizable}, {"genus", l.genus}};
}

inline json to_json(const SmoothnessReport& s) {
  return {{"smooth", s.smooth}, {"method", s.method}, {"probabilistic", s.probabilistic}, {"prime", s.prime}};
}

inline json to_json(const HatVerification& v) {
  const auto& c = v.certificate;
  json restr = json::array();
  for (const auto& r : c.restrictions) restr.push_back(to_json(r));
  return {{"label", to_json(v.label)},
          {"certificate",
           {{"normalizing", to_json(c.normalizing)},
            {"normalized", to_json(c.normalized)},
            {"restrictions", restr},
            {"raw_zeta", to_json(c.raw_zeta)},
            {"raw_root", to_json(c.raw_root)},
            {"smoothness", to_json(c.smoothness)}}}};
}

inline json to_json(const SigmaVerification& v) {
  const auto& c = v.certificate;
  json edges = json::array(), local = json::array();
  for (const auto& e : c.edges) edges.push_back(to_json(e));
  for (const auto& [lo, hi] : c.local_parts) local.push_back(json::array({to_json(lo), to_json(hi)}));
  return {{"label", to_json(v.label)},
          {"certificate",
           {{"edges", edges}, {"local_parts", local}, {"raw_zeta", to_json(c.raw_zeta)}, {"raw_root", to_json(c.raw_root)}, {"warnings", c.warnings}}}};
}

inline json to_json(const LiftPoint& p) {
  return {{"point", json::array({to_json(p.point[0]), to_json(p.point[1]), to_json(p.point[2])})}, {"t", to_json(p.t)}, {"text", p.to_string()}};
}

inline json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const BranchTrack& t) {
  json samples = json::array();
  for (const auto& s : t.samples)
    samples.push_back({{"segment", s.segment}, {"s", s.s}, {"mu", complex_json(s.mu)}, {"t", complex_json(s.t)}, {"branch", s.branch}});
  return {{"bisections", t.bisections}, {"samples", samples}};
}

namespace groups_io {

using namespace zariski::groups;

inline json to_json(const Presentation& p) {
  json rels = json::array();
  for (std::size_t i = 0; i < p.relators.size(); ++i) rels.push_back({{"label", p.label(i)}, {"word", p.relators[i].to_string(p.generators)}});
  json out = {{"generators", p.generators}, {"relators", rels}};
  if (!p.notes.empty()) out["notes"] = p.notes;
  return out;
}

inline Presentation presentation_from(const json& j) {
  Presentation p;
  p.generators = j.at("generators").get<std::vector<std::string>>();
  for (const auto& r : j.at("relators")) {
    if (r.is_string()) {
      p.add(parse_word(r.get<std::string>(), p.generators));
    } else {
      p.add(parse_word(r.at("word").get<std::string>(), p.generators), r.value("label", std::string()));
    }
  }
  p.check();
  return p;
}

inline json to_json(const IntMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(integer_json(x));
    out.push_back(r);
  }
  return out;
}

inline json to_json(const AbelianInvariants& a) {
  json tors = json::array();
  for (const auto& t : a.torsion) tors.push_back(integer_json(t));
  return {{"free_rank", a.free_rank}, {"torsion", tors}, {"text", a.to_string()}};
}

inline json to_json(const CosetTable& t) {
  json rows = json::array();
  if (t.complete())
    for (const auto& row : t.action) rows.push_back(row);
  return {{"status", t.complete() ? "complete" : "cap_exceeded"}, {"index", t.index()}, {"columns", "g, g^-1 per generator"}, {"action", rows}};
}

inline json to_json(const Certificate& c, const Presentation& p) {
  json out = json::array();
  for (const auto& f : c)
    out.push_back({{"conjugator", f.conjugator.to_string(p.generators)}, {"relator", p.label(f.relator)}, {"sign", f.sign}});
  return out;
}

inline json to_json(const ConsequenceResult& r, const Presentation& p) {
  json out = {{"outcome", r.proved() ? "consequence" : "unknown"}, {"levels", r.levels}, {"explored", r.explored}};
  if (r.proved()) out["certificate"] = to_json(r.certificate, p);
  return out;
}

}  // namespace groups_io

}  // namespace zariski::io
