#pragma once

#include <map>
#include <set>
#include <vector>

#include "zariski/groups/presentation.hpp"

namespace zariski::groups {

enum class EnumerationStatus { Complete, CapExceeded };

struct CosetTable {
  EnumerationStatus status = EnumerationStatus::CapExceeded;
  int generators = 0;
  // action[c][2g] = c.g, action[c][2g+1] = c.g^-1; cosets are numbered 0..index-1
  std::vector<std::vector<int>> action;
  std::size_t defined = 0;  // total cosets ever defined

  bool complete() const { return status == EnumerationStatus::Complete; }
  std::size_t index() const { return action.size(); }

  std::vector<int> permutation(int g, bool inverse = false) const {
    std::vector<int> p(action.size());
    for (std::size_t c = 0; c < action.size(); ++c) p[c] = action[c][static_cast<std::size_t>(2 * g + (inverse ? 1 : 0))];
    return p;
  }

  int apply(int coset, const Word& w) const {
    for (Letter l : w.letters()) coset = action[static_cast<std::size_t>(coset)][static_cast<std::size_t>(column(l))];
    return coset;
  }

  static int column(Letter l) { return 2 * generator_of(l) + (l < 0 ? 1 : 0); }
};

namespace detail {

class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& p, std::size_t cap) : cols_(2 * p.generators.size()), cap_(cap) {
    for (const auto& r : p.relators) {
      Word core = r.cyclic_core();
      if (!core.empty()) rels_.push_back(to_columns(core));
    }
    new_coset();
  }

  CosetTable run(const std::vector<Word>& subgroup) {
    CosetTable out;
    out.generators = static_cast<int>(cols_ / 2);
    try {
      for (const auto& h : subgroup)
        if (!h.empty()) scan_and_fill(0, to_columns(h));
      for (std::size_t a = 0; a < table_.size(); ++a) {
        if (!live(a)) continue;
        for (const auto& r : rels_) {
          scan_and_fill(a, r);
          if (!live(a)) break;
        }
        if (!live(a)) continue;
        for (std::size_t x = 0; x < cols_; ++x)
          if (table_[a][x] < 0) define(a, x);
      }
    } catch (const CapReached&) {
      out.status = EnumerationStatus::CapExceeded;
      out.defined = table_.size();
      return out;
    }
    std::vector<int> renumber(table_.size(), -1);
    int next = 0;
    for (std::size_t a = 0; a < table_.size(); ++a)
      if (live(a)) renumber[a] = next++;
    for (std::size_t a = 0; a < table_.size(); ++a) {
      if (!live(a)) continue;
      std::vector<int> row(cols_);
      for (std::size_t x = 0; x < cols_; ++x) row[x] = renumber[static_cast<std::size_t>(table_[a][x])];
      out.action.push_back(std::move(row));
    }
    out.status = EnumerationStatus::Complete;
    out.defined = table_.size();
    return out;
  }

 private:
  struct CapReached {};

  std::vector<std::size_t> to_columns(const Word& w) const {
    std::vector<std::size_t> c;
    for (Letter l : w.letters()) c.push_back(static_cast<std::size_t>(CosetTable::column(l)));
    return c;
  }
  static std::size_t inv(std::size_t x) { return x ^ 1U; }

  bool live(std::size_t a) const { return parent_[a] == static_cast<int>(a); }

  std::size_t new_coset() {
    table_.emplace_back(cols_, -1);
    parent_.push_back(static_cast<int>(table_.size() - 1));
    ++alive_;
    return table_.size() - 1;
  }

  void define(std::size_t a, std::size_t x) {
    if (alive_ >= cap_) {
      lookahead();
      if (alive_ >= cap_ || table_.size() >= 4 * cap_) throw CapReached{};
      if (!live(a) || table_[a][x] >= 0) return;
    }
    std::size_t b = new_coset();
    table_[a][x] = static_cast<int>(b);
    table_[b][inv(x)] = static_cast<int>(a);
  }

  // Scans every live coset under every relator without defining new cosets.
  void lookahead() {
    for (std::size_t a = 0; a < table_.size(); ++a) {
      if (!live(a)) continue;
      for (const auto& r : rels_) {
        scan(a, r);
        if (!live(a)) break;
      }
    }
  }

  void scan(std::size_t a, const std::vector<std::size_t>& w) {
    std::size_t f = a, b = a;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (i <= j && table_[f][w[static_cast<std::size_t>(i)]] >= 0) f = static_cast<std::size_t>(table_[f][w[static_cast<std::size_t>(i++)]]);
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && table_[b][inv(w[static_cast<std::size_t>(j)])] >= 0) b = static_cast<std::size_t>(table_[b][inv(w[static_cast<std::size_t>(j--)])]);
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      table_[f][w[static_cast<std::size_t>(i)]] = static_cast<int>(b);
      table_[b][inv(w[static_cast<std::size_t>(i)])] = static_cast<int>(f);
    }
  }

  void scan_and_fill(std::size_t a, const std::vector<std::size_t>& w) {
    std::size_t f = a, b = a;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j && table_[f][w[static_cast<std::size_t>(i)]] >= 0) f = static_cast<std::size_t>(table_[f][w[static_cast<std::size_t>(i++)]]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][inv(w[static_cast<std::size_t>(j)])] >= 0) b = static_cast<std::size_t>(table_[b][inv(w[static_cast<std::size_t>(j--)])]);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[static_cast<std::size_t>(i)]] = static_cast<int>(b);
        table_[b][inv(w[static_cast<std::size_t>(i)])] = static_cast<int>(f);
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
      if (!live(f) || !live(b)) return;
    }
  }

  std::size_t rep(std::size_t k) {
    std::size_t r = k;
    while (parent_[r] != static_cast<int>(r)) r = static_cast<std::size_t>(parent_[r]);
    while (parent_[k] != static_cast<int>(k)) {
      std::size_t n = static_cast<std::size_t>(parent_[k]);
      parent_[k] = static_cast<int>(r);
      k = n;
    }
    return r;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
    std::size_t a = rep(k), b = rep(l);
    if (a == b) return;
    std::size_t lo = std::min(a, b), hi = std::max(a, b);
    parent_[hi] = static_cast<int>(lo);
    --alive_;
    queue.push_back(hi);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::size_t g = queue[qi];
      for (std::size_t x = 0; x < cols_; ++x) {
        if (table_[g][x] < 0) continue;
        std::size_t d = static_cast<std::size_t>(table_[g][x]);
        table_[d][inv(x)] = -1;
        std::size_t m = rep(g), n = rep(d);
        if (table_[m][x] >= 0) {
          merge(n, static_cast<std::size_t>(table_[m][x]), queue);
        } else if (table_[n][inv(x)] >= 0) {
          merge(m, static_cast<std::size_t>(table_[n][inv(x)]), queue);
        } else {
          table_[m][x] = static_cast<int>(n);
          table_[n][inv(x)] = static_cast<int>(m);
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t cap_;
  std::size_t alive_ = 0;
  std::vector<std::vector<std::size_t>> rels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
};

}  // namespace detail

/// HLT coset enumeration of the cosets of <subgroup> with coincidence
/// processing and a lookahead pass when the live-coset cap is reached.
inline CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup = {}, std::size_t cap = 1000000) {
  if (cap < 1) raise(ErrorCode::PrecondViolation, "coset cap must be positive");
  p.check();
  return detail::CosetEnumerator(p, cap).run(subgroup);
}

using Permutation = std::vector<int>;

inline Permutation compose(const Permutation& a, const Permutation& b) {  // first a, then b
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<std::size_t>(a[i])];
  return out;
}

inline Permutation invert(const Permutation& a) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return out;
}

/// All elements of the permutation group generated by `gens`.
inline std::vector<Permutation> group_elements(const std::vector<Permutation>& gens, std::size_t degree, std::size_t limit = 200000) {
  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<int>(i);
  std::set<Permutation> seen{id};
  std::vector<Permutation> out{id};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens) {
      Permutation n = compose(out[k], g);
      if (seen.insert(n).second) {
        out.push_back(n);
        if (out.size() > limit) raise(ErrorCode::PrecondViolation, "permutation group too large for explicit enumeration");
      }
    }
  return out;
}

/// Orders of G, G', G'', ... for the permutation group realized by a complete
/// table, stopping at the trivial group or when the series stabilizes.
inline std::vector<std::size_t> derived_series_finite(const CosetTable& t) {
  if (!t.complete()) raise(ErrorCode::IncompleteTable, "derived series needs a complete coset table");
  std::size_t n = t.index();
  std::vector<Permutation> gens;
  for (int g = 0; g < t.generators; ++g) gens.push_back(t.permutation(g));
  std::vector<Permutation> elems = group_elements(gens, n);
  std::vector<std::size_t> orders{elems.size()};
  while (elems.size() > 1) {
    std::set<Permutation> comms;
    for (const auto& a : gens)
      for (const auto& b : gens) {
        Permutation c = compose(compose(compose(a, b), invert(a)), invert(b));
        for (const auto& h : elems) comms.insert(compose(compose(invert(h), c), h));
      }
    std::vector<Permutation> next_gens(comms.begin(), comms.end());
    std::vector<Permutation> next = group_elements(next_gens, n);
    if (next.size() == elems.size()) break;
    gens = std::move(next_gens);
    elems = std::move(next);
    orders.push_back(elems.size());
  }
  return orders;
}

}  // namespace zariski::groups
