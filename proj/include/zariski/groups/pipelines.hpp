#pragma once

#include <string>
#include <vector>

#include "zariski/groups/builtin.hpp"
#include "zariski/groups/consequence.hpp"
#include "zariski/groups/rewriting.hpp"
#include "zariski/groups/snf.hpp"

namespace zariski::groups {

/// Kernel of rho1 (gy -> 1) on Gtilde(d), reduced to the K1hat generators:
/// gy^d dropped by G8, gx_j = gx_0 by G4, ty_j killed for j > 0, and
/// gl_{j+1}, tx_{j+1} eliminated with G3, G2 at coset j.
inline Presentation derived_k1hat(int d) {
  Presentation g = builtin_presentation("Gtilde", d);
  Presentation p = reidemeister_schreier(g, make_character(g, d, {{"gy", 1}}));
  auto j_ = [](const std::string& base, int j) { return base + "_" + std::to_string(j); };
  p = tietze_eliminate(p, "gy_d", "G8@0");
  for (int j = 0; j + 1 < d; ++j) p = tietze_eliminate(p, j_("gx", j + 1), "G4@" + std::to_string(j));
  std::vector<std::string> dead;
  for (int j = 1; j < d; ++j) dead.push_back(j_("ty", j));
  p = kill_generators(p, dead);
  for (int j = 0; j + 1 < d; ++j) {
    p = tietze_eliminate(p, j_("gl", j + 1), "G3@" + std::to_string(j));
    p = tietze_eliminate(p, j_("tx", j + 1), "G2@" + std::to_string(j));
  }
  p = simplify(p);
  p = rename_generators(p, {{"gx_0", "gx"}, {"gl_0", "gl"}, {"tx_0", "tx"}, {"ty_0", "ty"}});
  // reorder to the K1hat generator order
  Presentation k = builtin_presentation("K1hat", d);
  std::vector<Word> images(p.generators.size());
  for (std::size_t i = 0; i < p.generators.size(); ++i) images[i] = k.gen(p.generators[i]);
  Presentation out;
  out.generators = k.generators;
  out.notes = p.notes;
  for (std::size_t i = 0; i < p.relators.size(); ++i) out.add(p.relators[i].substitute(images), p.label(i));
  return out;
}

struct RelatorCheck {
  std::string label;
  ConsequenceResult result;
};

/// Each relator of `target` searched as a consequence of `source` (same generator names).
inline std::vector<RelatorCheck> relators_as_consequences(const Presentation& source, const Presentation& target, int depth,
                                                          const SearchOptions& opt = {}) {
  if (source.generators != target.generators) raise(ErrorCode::InvalidOperand, "presentations use different generator lists");
  std::vector<RelatorCheck> out;
  for (std::size_t i = 0; i < target.relators.size(); ++i) out.push_back({target.label(i), consequence_search(source, target.relators[i], depth, opt)});
  return out;
}

struct CommutatorWitness {
  std::string name;
  Word word;
  ConsequenceResult result;
};

/// Pairwise commutators of gl, tx0, ty in Kh(d, h); [gl,tx0] is proved first and
/// offered as a lemma for [gl,ty].
inline std::vector<CommutatorWitness> kh_abelian_witness(int d, int h, int depth, SearchOptions opt = {}) {
  Presentation p = builtin_presentation("Kh", d, h);
  Word gl = p.gen("gl"), tx0 = p.gen("tx0"), ty = p.gen("ty");
  std::vector<CommutatorWitness> out;
  out.push_back({"[gl,tx0]", commutator(gl, tx0), consequence_search(p, commutator(gl, tx0), depth, opt)});
  if (out.back().result.proved()) opt.lemmas.push_back({out.back().word, out.back().result.certificate});
  out.push_back({"[gl,ty]", commutator(gl, ty), consequence_search(p, commutator(gl, ty), depth, opt)});
  out.push_back({"[tx0,ty]", commutator(tx0, ty), consequence_search(p, commutator(tx0, ty), depth, opt)});
  return out;
}

}  // namespace zariski::groups
