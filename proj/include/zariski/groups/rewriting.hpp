#pragma once

#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zariski/groups/presentation.hpp"

namespace zariski::groups {

/// Homomorphism onto Z/modulus given by generator images.
struct CyclicCharacter {
  int modulus = 1;
  std::vector<long> images;

  long operator()(const Word& w) const {
    long s = 0;
    for (Letter l : w.letters()) s += (l > 0 ? 1 : -1) * images.at(static_cast<std::size_t>(generator_of(l)));
    return ((s % modulus) + modulus) % modulus;
  }
};

/// Validates that every relator maps to 0.
inline CyclicCharacter make_character(const Presentation& p, int modulus, std::vector<long> images) {
  if (modulus < 1) raise(ErrorCode::BadParameters, "character modulus must be positive");
  if (images.size() != p.generators.size()) raise(ErrorCode::BadParameters, "one image per generator is required");
  CyclicCharacter chi{modulus, std::move(images)};
  for (auto& x : chi.images) x = ((x % modulus) + modulus) % modulus;
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    if (chi(p.relators[i]) != 0) raise(ErrorCode::BadParameters, "relator " + p.label(i) + " does not lie in the kernel");
  return chi;
}

/// Character from name -> image pairs; unnamed generators map to 0.
inline CyclicCharacter make_character(const Presentation& p, int modulus, const std::vector<std::pair<std::string, long>>& named) {
  std::vector<long> images(p.generators.size(), 0);
  for (const auto& [name, v] : named) images[static_cast<std::size_t>(p.index_of(name))] = v;
  return make_character(p, modulus, std::move(images));
}

namespace detail {

inline long mod_inverse(long a, long m) {
  long t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
  while (nr != 0) {
    long q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return ((t % m) + m) % m;
}

}  // namespace detail

/// Reidemeister-Schreier presentation of ker(chi) with transversal g^0..g^(d-1),
/// g the first generator whose image is a unit mod d. Generator a != g at coset j
/// is named a_j (= g^j a g^-k); g^d is named g_d.
inline Presentation reidemeister_schreier(const Presentation& p, const CyclicCharacter& chi) {
  p.check();
  const long d = chi.modulus;
  if (chi.images.size() != p.generators.size()) raise(ErrorCode::BadParameters, "character does not match the presentation");
  int g = -1;
  for (std::size_t i = 0; i < chi.images.size(); ++i)
    if (std::gcd(chi.images[i], d) == 1) {
      g = static_cast<int>(i);
      break;
    }
  if (g < 0) raise(ErrorCode::NotSurjective, "no generator maps to a unit mod " + std::to_string(d));
  const long uinv = detail::mod_inverse(chi.images[static_cast<std::size_t>(g)], d);
  auto step = [&](int a) { return (chi.images[static_cast<std::size_t>(a)] * uinv) % d; };

  Presentation out;
  // index of Schreier generator (coset j, generator a), or -1 when trivial
  std::vector<std::vector<int>> sg(p.generators.size(), std::vector<int>(static_cast<std::size_t>(d), -1));
  for (int a = 0; a < p.rank(); ++a) {
    if (a == g) continue;
    for (long j = 0; j < d; ++j) {
      sg[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] = out.rank();
      out.generators.push_back(p.generators[static_cast<std::size_t>(a)] + "_" + std::to_string(j));
    }
  }
  sg[static_cast<std::size_t>(g)][static_cast<std::size_t>(d - 1)] = out.rank();
  out.generators.push_back(p.generators[static_cast<std::size_t>(g)] + "_d");

  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    for (long j = 0; j < d; ++j) {
      std::vector<Letter> letters;
      long cur = j;
      for (Letter l : p.relators[i].letters()) {
        int a = generator_of(l);
        long s = step(a);
        if (l > 0) {
          int x = sg[static_cast<std::size_t>(a)][static_cast<std::size_t>(cur)];
          if (x >= 0) letters.push_back(letter(x));
          cur = (cur + s) % d;
        } else {
          cur = ((cur - s) % d + d) % d;
          int x = sg[static_cast<std::size_t>(a)][static_cast<std::size_t>(cur)];
          if (x >= 0) letters.push_back(letter(x, -1));
        }
      }
      out.add(Word(std::move(letters)), p.label(i) + "@" + std::to_string(j));
    }
  }
  out.notes = p.notes;
  out.notes.push_back("Reidemeister-Schreier over the kernel of a character onto Z/" + std::to_string(d) + ", transversal " +
                      p.generators[static_cast<std::size_t>(g)] + "^j");
  return out;
}

/// Removes generator `gen` using relator `rel`, in which it must occur exactly once.
inline Presentation tietze_eliminate(const Presentation& p, int gen, std::size_t rel) {
  p.check();
  if (gen < 0 || gen >= p.rank() || rel >= p.relators.size()) raise(ErrorCode::InvalidOperand, "generator or relator index out of range");
  const Word& r = p.relators[rel];
  if (r.occurrences(gen) != 1) raise(ErrorCode::NotEliminable, p.generators[static_cast<std::size_t>(gen)] + " does not occur exactly once in " + p.label(rel));
  const auto& ls = r.letters();
  std::size_t pos = 0;
  while (generator_of(ls[pos]) != gen) ++pos;
  Word a(std::vector<Letter>(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(pos)));
  Word b(std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(pos) + 1, ls.end()));
  Word expr = ls[pos] > 0 ? a.inverse() * b.inverse() : b * a;

  std::vector<Word> images(p.generators.size());
  Presentation out;
  for (int i = 0; i < p.rank(); ++i) {
    if (i == gen) continue;
    images[static_cast<std::size_t>(i)] = Word::gen(out.rank());
    out.generators.push_back(p.generators[static_cast<std::size_t>(i)]);
  }
  images[static_cast<std::size_t>(gen)] = expr.substitute(images);
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    if (i != rel) out.add(p.relators[i].substitute(images), p.label(i));
  out.notes = p.notes;
  out.notes.push_back("eliminated " + p.generators[static_cast<std::size_t>(gen)] + " = " + images[static_cast<std::size_t>(gen)].to_string(out.generators) +
                      " via " + p.label(rel));
  return out;
}

inline Presentation tietze_eliminate(const Presentation& p, const std::string& gen, const std::string& rel_label) {
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    if (p.label(i) == rel_label) return tietze_eliminate(p, p.index_of(gen), i);
  raise(ErrorCode::InvalidOperand, "no relator labelled " + rel_label);
}

/// Eliminates `gen` with the shortest relator containing it exactly once.
inline Presentation tietze_eliminate_auto(const Presentation& p, const std::string& gen) {
  int g = p.index_of(gen);
  std::size_t best = p.relators.size();
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    if (p.relators[i].occurrences(g) == 1 && (best == p.relators.size() || p.relators[i].size() < p.relators[best].size())) best = i;
  if (best == p.relators.size()) raise(ErrorCode::NotEliminable, gen + " occurs exactly once in no relator");
  return tietze_eliminate(p, g, best);
}

/// Quotient by the normal closure of the listed generators.
inline Presentation kill_generators(const Presentation& p, const std::vector<std::string>& names) {
  std::set<int> dead;
  for (const auto& n : names) dead.insert(p.index_of(n));
  std::vector<Word> images(p.generators.size());
  Presentation out;
  for (int i = 0; i < p.rank(); ++i) {
    if (dead.count(i)) continue;
    images[static_cast<std::size_t>(i)] = Word::gen(out.rank());
    out.generators.push_back(p.generators[static_cast<std::size_t>(i)]);
  }
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    Word w = p.relators[i].substitute(images);
    if (!w.cyclic_core().empty()) out.add(std::move(w), p.label(i));
  }
  out.notes = p.notes;
  std::string killed;
  for (const auto& n : names) killed += (killed.empty() ? "" : ", ") + n;
  out.notes.push_back("killed " + killed);
  return out;
}

inline Presentation rename_generators(Presentation p, const std::vector<std::pair<std::string, std::string>>& renames) {
  for (const auto& [from, to] : renames) p.generators[static_cast<std::size_t>(p.index_of(from))] = to;
  return p;
}

/// Drops trivial relators and cyclic/inverse duplicates, keeping first labels.
inline Presentation simplify(const Presentation& p) {
  Presentation out;
  out.generators = p.generators;
  out.notes = p.notes;
  std::set<Word> seen;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    Word c = p.relators[i].cyclic_canonical();
    if (c.empty() || !seen.insert(c).second) continue;
    out.add(p.relators[i], p.label(i));
  }
  return out;
}

}  // namespace zariski::groups
