#pragma once

#include <optional>
#include <string>

#include "zariski/groups/presentation.hpp"
#include "zariski/groups/rewriting.hpp"

namespace zariski::groups {

namespace detail {

inline Presentation line_arrangement_group() {
  Presentation p;
  p.generators = {"gx", "gy", "gl", "tx", "ty"};
  auto x = p.gen("gx"), y = p.gen("gy"), l = p.gen("gl"), tx = p.gen("tx"), ty = p.gen("ty");
  p.add(commutator(tx, ty), "G1");
  p.add(commutator(y * l, tx), "G2");
  p.add(commutator(tx * y, l), "G3");
  p.add(commutator(y, x), "G4");
  p.add(commutator(x * ty, l), "G5");
  p.add(commutator(l * x, ty), "G6");
  p.notes.push_back("generators gx, gy, gl, tx, ty are the meridians of l_x, l_y, l, ~l_x, ~l_y");
  return p;
}

inline Presentation orbifold_group(int d) {
  Presentation p = line_arrangement_group();
  auto x = p.gen("gx"), y = p.gen("gy"), l = p.gen("gl"), tx = p.gen("tx"), ty = p.gen("ty");
  Word g_inf = (tx * l * x * ty * y).inverse();
  p.add(x.pow(d), "G7");
  p.add(y.pow(d), "G8");
  p.add(g_inf.pow(d), "G9");
  p.notes.push_back("g_inf = (tx*gl*gx*ty*gy)^-1");
  return p;
}

inline Presentation k1hat(int d) {
  Presentation p;
  p.generators = {"gx", "gl", "tx", "ty"};
  auto x = p.gen("gx"), l = p.gen("gl"), tx = p.gen("tx"), ty = p.gen("ty");
  Word lt = l * tx;
  p.add(x.pow(d), "K1");
  p.add((tx * l * x).pow(d) * ty, "K2");
  p.add(commutator(tx, ty), "K3");
  p.add(commutator(lt.pow(d), tx), "K4");
  p.add(commutator(x * ty, l), "K5");
  p.add(commutator(l * x, ty), "K6");
  for (int j = 1; j < d; ++j) p.add(commutator(x, lt.pow(-j) * l * lt.pow(j)), "K7_" + std::to_string(j));
  p.notes.push_back("K4 and K7 print a bare l inside (l*tx); read as gl, following the conjugation formula derived for gl_j");
  return p;
}

inline std::string tx_name(int i) { return "tx" + std::to_string(i); }

inline Presentation ktilde(int d) {
  Presentation p;
  p.generators = {"gl", "ty"};
  for (int i = 0; i < d; ++i) p.generators.push_back(tx_name(i));
  auto l = p.gen("gl"), ty = p.gen("ty");
  Word w = ty * l;
  auto tx = [&](int i) { return p.gen(tx_name(((i % d) + d) % d)); };
  auto conj = [&](const Word& a, int i) { return w.pow(-i) * a * w.pow(i); };  // w^-i a w^i

  p.add(commutator(w.pow(d), ty), "Kt1");
  for (int i = 0; i < d; ++i) p.add(commutator(tx(i), conj(ty, i)), "Kt2_" + std::to_string(i));
  Word prod;
  for (int j = 0; j < d; ++j) prod *= tx(j) * conj(l, j);
  p.add(prod * ty, "Kt3");
  for (int i = 0; i < d; ++i) p.add(commutator((conj(l, i) * tx(i)).pow(d), tx(i)), "Kt4_" + std::to_string(i));
  for (int i = 0; i < d; ++i)
    for (int j = 1; j < d; ++j) {
      Word a = l * w.pow(i) * tx(i) * w.pow(-i);
      Word b = l * w.pow(i + 1) * tx(i + 1) * w.pow(-i - 1);
      p.add(commutator(l, a.pow(j) * w.inverse() * b.pow(-j)), "Kt5_" + std::to_string(i) + "_" + std::to_string(j));
    }
  p.notes.push_back("Kt4 prints a malformed ~y inside (~y*gl)^i; read as ty");
  p.notes.push_back("Kt5 at i = d-1 uses tx_d = tx0 (indices mod d)");
  return p;
}

inline Presentation triple_point(int d) {
  Presentation p;
  p.generators = {"gl", "tx0", "tx1", "tx2"};
  auto l = p.gen("gl");
  auto tx = [&](int i) { return p.gen(tx_name(i)); };
  p.add((tx(0) * l) * (tx(1) * l) * (tx(2) * l) * l.pow(d - 3), "Kh1");
  for (int i = 0; i < 3; ++i) p.add(commutator((l * tx(i)).pow(d), tx(i)), "Kh2_" + std::to_string(i));
  for (int i = 0; i < 2; ++i)
    for (int j = 1; j < d; ++j) {
      Word a = l.pow(i + 1) * tx(i) * l.pow(-i);
      Word b = l.pow(i + 2) * tx(i + 1) * l.pow(-i - 1);
      p.add(commutator(l, a.pow(j) * l.inverse() * b.pow(-j)), "Kh3_" + std::to_string(i) + "_" + std::to_string(j));
    }
  p.add(commutator(l, tx(2)), "Kh4");
  p.add(commutator(l, tx(0)), "Kh5");
  return p;
}

// Kt(d) with tx_j killed for j not in {0, h}.
inline Presentation kh_group(int d, int h) {
  std::vector<std::string> dead;
  for (int j = 1; j < d; ++j)
    if (j != h) dead.push_back(tx_name(j));
  Presentation p = ktilde(d);
  return dead.empty() ? p : kill_generators(p, dead);
}

}  // namespace detail

inline Presentation builtin_presentation(const std::string& name, int d, std::optional<int> h = std::nullopt) {
  if (d < 2) raise(ErrorCode::BadParameters, "d must be at least 2");
  if (name == "G") return detail::line_arrangement_group();
  if (name == "Gtilde") return detail::orbifold_group(d);
  if (name == "K1hat") return detail::k1hat(d);
  if (name == "Ktilde") return detail::ktilde(d);
  if (name == "Kh") {
    if (!h || *h <= 0 || *h >= d) raise(ErrorCode::BadParameters, "Kh needs 0 < h < d");
    return detail::kh_group(d, *h);
  }
  if (name == "TriplePoint") {
    if (d <= 3) raise(ErrorCode::BadParameters, "TriplePoint needs d > 3");
    return detail::triple_point(d);
  }
  if (name == "B3S2") {
    Presentation p = parse_presentation("gens: s1, s2 ; rels: s1*s2*s1*(s2*s1*s2)^-1, s1*s2^2*s1");
    p.relator_labels = {"braid", "sphere"};
    return p;
  }
  if (name == "Artin244") {
    Presentation p = parse_presentation("gens: a, b, c ; rels: [a,b], (b*c)^2*(c*b)^-2, (c*a)^2*(a*c)^-2");
    p.relator_labels = {"m_ab=2", "m_bc=4", "m_ca=4"};
    p.notes.push_back("triangle Artin group (2,4,4): m(a,b)=2, m(b,c)=4, m(c,a)=4 in that order");
    return p;
  }
  raise(ErrorCode::BadParameters, "unknown builtin presentation '" + name + "'");
}

}  // namespace zariski::groups
