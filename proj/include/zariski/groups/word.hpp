#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "zariski/error.hpp"

namespace zariski::groups {

/// A letter is +(g + 1) for generator g and -(g + 1) for its inverse.
using Letter = int;

inline Letter letter(int gen, int exponent = 1) { return exponent > 0 ? gen + 1 : -(gen + 1); }
inline int generator_of(Letter l) { return std::abs(l) - 1; }

/// Freely reduced word in the generators.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) { reduce(); }

  static Word gen(int g, int power = 1) {
    std::vector<Letter> l(static_cast<std::size_t>(std::abs(power)), letter(g, power));
    return Word(std::move(l));
  }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) l = -l;
    Word w;
    w.letters_ = std::move(out);
    return w;
  }

  friend Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> out = a.letters_;
    for (Letter l : b.letters_) {
      if (!out.empty() && out.back() == -l)
        out.pop_back();
      else
        out.push_back(l);
    }
    Word w;
    w.letters_ = std::move(out);
    return w;
  }
  Word& operator*=(const Word& b) { return *this = *this * b; }

  Word pow(int e) const {
    Word base = e < 0 ? inverse() : *this;
    Word out;
    for (int i = 0; i < std::abs(e); ++i) out *= base;
    return out;
  }

  /// Conjugate u w u^-1.
  Word conjugated_by(const Word& u) const { return u * *this * u.inverse(); }

  /// Cyclically reduced core; the stripped prefix is returned through `conj`
  /// so that *this = conj * core * conj^-1.
  Word cyclic_core(Word* conj = nullptr) const {
    std::size_t i = 0, j = letters_.size();
    while (j - i >= 2 && letters_[i] == -letters_[j - 1]) {
      ++i;
      --j;
    }
    if (conj) *conj = Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(i)));
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(i), letters_.begin() + static_cast<std::ptrdiff_t>(j)));
  }

  Word rotated(std::size_t k) const {
    Word w;
    w.letters_ = letters_;
    if (!w.letters_.empty()) std::rotate(w.letters_.begin(), w.letters_.begin() + static_cast<std::ptrdiff_t>(k % w.letters_.size()), w.letters_.end());
    return w;
  }

  /// Lexicographically least rotation of the cyclic core, over the word and its inverse.
  Word cyclic_canonical() const {
    Word core = cyclic_core();
    Word best = core;
    for (const Word& base : {core, core.inverse()})
      for (std::size_t k = 0; k < base.size(); ++k) {
        Word r = base.rotated(k);
        if (r.letters_ < best.letters_) best = r;
      }
    return best;
  }

  std::vector<long> exponent_sums(int generators) const {
    std::vector<long> out(static_cast<std::size_t>(generators), 0);
    for (Letter l : letters_) {
      int g = generator_of(l);
      if (g >= generators) raise(ErrorCode::InvalidOperand, "letter index outside the generator range");
      out[static_cast<std::size_t>(g)] += l > 0 ? 1 : -1;
    }
    return out;
  }

  int max_generator() const {
    int m = -1;
    for (Letter l : letters_) m = std::max(m, generator_of(l));
    return m;
  }

  /// Replaces each generator g by images[g]; images must cover every generator used.
  Word substitute(const std::vector<Word>& images) const {
    Word out;
    for (Letter l : letters_) {
      const Word& im = images.at(static_cast<std::size_t>(generator_of(l)));
      out *= l > 0 ? im : im.inverse();
    }
    return out;
  }

  int occurrences(int g) const {
    int n = 0;
    for (Letter l : letters_)
      if (generator_of(l) == g) ++n;
    return n;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < letters_.size()) {
      std::size_t j = i;
      while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
      long run = static_cast<long>(j - i);
      if (!out.empty()) out += "*";
      const std::string& name = names.at(static_cast<std::size_t>(generator_of(letters_[i])));
      out += name;
      long e = letters_[i] > 0 ? run : -run;
      if (e != 1) out += "^" + std::to_string(e);
      i = j;
    }
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  void reduce() {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (Letter l : letters_) {
      if (l == 0) raise(ErrorCode::InvalidOperand, "zero letter");
      if (!out.empty() && out.back() == -l)
        out.pop_back();
      else
        out.push_back(l);
    }
    letters_ = std::move(out);
  }

  std::vector<Letter> letters_;
};

/// [u, v] = u v u^-1 v^-1.
inline Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

}  // namespace zariski::groups
