#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "zariski/groups/presentation.hpp"

namespace zariski::groups {

/// conjugator * relator^sign * conjugator^-1
struct ConjugatedRelator {
  Word conjugator;
  std::size_t relator = 0;
  int sign = 1;
};

using Certificate = std::vector<ConjugatedRelator>;

/// Free product of the certificate factors.
inline Word certificate_product(const Presentation& p, const Certificate& cert) {
  Word out;
  for (const auto& f : cert) out *= p.relators.at(f.relator).pow(f.sign).conjugated_by(f.conjugator);
  return out;
}

inline bool verify_certificate(const Presentation& p, const Word& w, const Certificate& cert) { return certificate_product(p, cert) == w; }

/// A previously certified consequence usable as an extra relator.
struct Lemma {
  Word word;
  Certificate proof;
};

struct SearchOptions {
  std::size_t beam = 4000;       // states kept per level
  std::size_t max_length = 400;  // discard longer intermediate words
  std::vector<Lemma> lemmas;
};

enum class SearchOutcome { Consequence, Unknown };

struct ConsequenceResult {
  SearchOutcome outcome = SearchOutcome::Unknown;
  Certificate certificate;  // empty unless outcome == Consequence
  int levels = 0;           // relator insertions used by the search (lemmas count once)
  std::size_t explored = 0;

  bool proved() const { return outcome == SearchOutcome::Consequence; }
};

namespace detail {

struct Piece {
  std::vector<Letter> letters;  // cyclically reduced, = conj * rel^sign * conj^-1
  std::size_t relator;
  int sign;
  Word conj;
};

inline std::vector<Letter> least_rotation(const std::vector<Letter>& w) {
  std::vector<Letter> best = w, cur = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

struct SearchNode {
  Word word;  // cyclically reduced
  std::size_t parent;
  std::size_t piece;
  std::size_t position;
};

class ConsequenceSearcher {
 public:
  ConsequenceSearcher(const Presentation& p, const SearchOptions& opt) : opt_(opt), nrel_(p.relators.size()) {
    auto add_pieces = [&](const Word& r, std::size_t idx) {
      for (int s : {1, -1}) {
        Word c0;
        Word core = r.pow(s).cyclic_core(&c0);
        if (core.empty()) continue;
        for (std::size_t t = 0; t < core.size(); ++t) {
          Word x(std::vector<Letter>(core.letters().begin(), core.letters().begin() + static_cast<std::ptrdiff_t>(t)));
          Word sigma = core.rotated(t);
          pieces_.push_back({sigma.letters(), idx, s, (c0 * x).inverse()});
          by_last_[sigma.letters().back()].push_back(pieces_.size() - 1);
        }
      }
    };
    for (std::size_t i = 0; i < p.relators.size(); ++i) add_pieces(p.relators[i], i);
    for (std::size_t i = 0; i < opt.lemmas.size(); ++i) add_pieces(opt.lemmas[i].word, nrel_ + i);
  }

  ConsequenceResult run(const Word& w, int depth) {
    ConsequenceResult res;
    Word y0;
    Word start = w.cyclic_core(&y0);
    nodes_.push_back({start, npos, npos, 0});
    if (start.empty()) return finish(res, 0, y0, 0);
    std::set<std::vector<Letter>> seen{least_rotation(start.letters())};
    std::vector<std::size_t> frontier{0};
    for (int level = 1; level <= depth && !frontier.empty(); ++level) {
      struct Child {
        std::size_t len, order;
        Word word;
        std::size_t parent, piece, pos;
      };
      std::vector<Child> children;
      std::size_t order = 0;
      for (std::size_t ni : frontier) {
        const Word& u = nodes_[ni].word;
        const auto& ul = u.letters();
        for (std::size_t pos = 0; pos < ul.size(); ++pos) {
          auto it = by_last_.find(-ul[pos]);
          if (it == by_last_.end()) continue;
          for (std::size_t pi : it->second) {
            const Piece& pc = pieces_[pi];
            std::vector<Letter> raw(ul.begin(), ul.begin() + static_cast<std::ptrdiff_t>(pos));
            raw.insert(raw.end(), pc.letters.begin(), pc.letters.end());
            raw.insert(raw.end(), ul.begin() + static_cast<std::ptrdiff_t>(pos), ul.end());
            Word core = Word(std::move(raw)).cyclic_core();
            ++res.explored;
            if (core.empty()) {
              nodes_.push_back({core, ni, pi, pos});
              return finish(res, nodes_.size() - 1, y0, level);
            }
            if (core.size() > opt_.max_length) continue;
            if (!seen.insert(least_rotation(core.letters())).second) continue;
            children.push_back({core.size(), order++, std::move(core), ni, pi, pos});
          }
        }
      }
      std::size_t keep = std::min(children.size(), opt_.beam);
      std::partial_sort(children.begin(), children.begin() + static_cast<std::ptrdiff_t>(keep), children.end(),
                        [](const Child& a, const Child& b) { return std::tie(a.len, a.order) < std::tie(b.len, b.order); });
      frontier.clear();
      for (std::size_t k = 0; k < keep; ++k) {
        nodes_.push_back({std::move(children[k].word), children[k].parent, children[k].piece, children[k].pos});
        frontier.push_back(nodes_.size() - 1);
      }
    }
    return res;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // Replays the path, keeping u = (prod F) * X w X^-1, then inverts it at u = 1.
  ConsequenceResult finish(ConsequenceResult res, std::size_t leaf, const Word& y0, int levels) {
    std::vector<std::size_t> path;
    for (std::size_t n = leaf; nodes_[n].parent != npos; n = nodes_[n].parent) path.push_back(n);
    std::reverse(path.begin(), path.end());
    Word x = y0.inverse();
    Certificate f;  // factors of prod F, in order
    for (std::size_t n : path) {
      const SearchNode& node = nodes_[n];
      const Word& u = nodes_[node.parent].word;
      const Piece& pc = pieces_[node.piece];
      Word prefix(std::vector<Letter>(u.letters().begin(), u.letters().begin() + static_cast<std::ptrdiff_t>(node.position)));
      f.insert(f.begin(), {prefix * pc.conj, pc.relator, pc.sign});
      Word raw = Word(std::vector<Letter>(prefix.letters())) * Word(pc.letters) *
                 Word(std::vector<Letter>(u.letters().begin() + static_cast<std::ptrdiff_t>(node.position), u.letters().end()));
      Word y;
      raw.cyclic_core(&y);
      Word c = y.inverse();
      for (auto& fac : f) fac.conjugator = c * fac.conjugator;
      x = c * x;
    }
    Word xi = x.inverse();
    Certificate raw_cert;
    for (auto it = f.rbegin(); it != f.rend(); ++it) raw_cert.push_back({xi * it->conjugator, it->relator, -it->sign});
    res.outcome = SearchOutcome::Consequence;
    res.levels = levels;
    res.certificate = expand(raw_cert);
    return res;
  }

  Certificate expand(const Certificate& cert) const {
    Certificate out;
    for (const auto& fac : cert) {
      if (fac.relator < nrel_) {
        out.push_back(fac);
        continue;
      }
      const Certificate& proof = opt_.lemmas[fac.relator - nrel_].proof;
      if (fac.sign > 0) {
        for (const auto& g : proof) out.push_back({fac.conjugator * g.conjugator, g.relator, g.sign});
      } else {
        for (auto it = proof.rbegin(); it != proof.rend(); ++it) out.push_back({fac.conjugator * it->conjugator, it->relator, -it->sign});
      }
    }
    return out;
  }

  const SearchOptions& opt_;
  std::size_t nrel_;
  std::vector<Piece> pieces_;
  std::map<Letter, std::vector<std::size_t>> by_last_;
  std::vector<SearchNode> nodes_;
};

}  // namespace detail

/// Bounded search for w in the normal closure of the relators: at most `depth`
/// relator (or lemma) conjugates inserted into the cyclic word, keeping the
/// `beam` shortest words per level. Unknown is not a refutation.
inline ConsequenceResult consequence_search(const Presentation& p, const Word& w, int depth, const SearchOptions& opt = {}) {
  if (depth < 1) raise(ErrorCode::PrecondViolation, "search depth must be at least 1");
  p.check();
  for (const auto& l : opt.lemmas)
    if (!verify_certificate(p, l.word, l.proof)) raise(ErrorCode::InvalidOperand, "lemma certificate does not multiply out");
  ConsequenceResult res = detail::ConsequenceSearcher(p, opt).run(w, depth);
  if (res.proved() && !verify_certificate(p, w, res.certificate)) throw std::logic_error("consequence certificate failed to verify");
  return res;
}

}  // namespace zariski::groups
