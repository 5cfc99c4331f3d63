#pragma once

#include <string>
#include <vector>

#include "zariski/groups/presentation.hpp"
#include "zariski/groups/snf.hpp"

namespace zariski::groups {

/// Element x_1^a_1 ... x_n^a_n * prod_{i<j} [x_i, x_j]^c_ij of the free class-2 nilpotent group.
struct Class2Element {
  std::vector<BigInt> a;
  std::vector<BigInt> c;
};

class FreeClass2 {
 public:
  explicit FreeClass2(int n) : n_(static_cast<std::size_t>(n)) {}

  std::size_t pairs() const { return n_ * (n_ - 1) / 2; }
  std::size_t pair_index(std::size_t i, std::size_t j) const { return i * n_ - i * (i + 1) / 2 + (j - i - 1); }  // i < j

  Class2Element identity() const { return {std::vector<BigInt>(n_, 0), std::vector<BigInt>(pairs(), 0)}; }

  // x_j^p x_i^q = x_i^q x_j^p [x_i, x_j]^(-pq) for i < j
  Class2Element multiply(const Class2Element& x, const Class2Element& y) const {
    Class2Element out = identity();
    for (std::size_t i = 0; i < n_; ++i) out.a[i] = x.a[i] + y.a[i];
    for (std::size_t k = 0; k < pairs(); ++k) out.c[k] = x.c[k] + y.c[k];
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) out.c[pair_index(i, j)] -= x.a[j] * y.a[i];
    return out;
  }

  Class2Element inverse(const Class2Element& x) const {
    Class2Element out = identity();
    for (std::size_t i = 0; i < n_; ++i) out.a[i] = -x.a[i];
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) out.c[pair_index(i, j)] = -x.c[pair_index(i, j)] - x.a[j] * x.a[i];
    return out;
  }

  Class2Element power(const Class2Element& x, BigInt k) const {
    Class2Element base = k < 0 ? inverse(x) : x;
    if (k < 0) k = -k;
    Class2Element out = identity();
    while (k > 0) {
      if (k % 2 == 1) out = multiply(out, base);
      base = multiply(base, base);
      k /= 2;
    }
    return out;
  }

  Class2Element evaluate(const Word& w) const {
    Class2Element out = identity();
    for (Letter l : w.letters()) {
      Class2Element g = identity();
      g.a[static_cast<std::size_t>(generator_of(l))] = l > 0 ? 1 : -1;
      out = multiply(out, g);
    }
    return out;
  }

  // commutator coordinates of [u, v] for abelian parts u, v
  std::vector<BigInt> wedge(const std::vector<BigInt>& u, const std::vector<BigInt>& v) const {
    std::vector<BigInt> out(pairs(), 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) out[pair_index(i, j)] = u[i] * v[j] - u[j] * v[i];
    return out;
  }

 private:
  std::size_t n_;
};

/// Commutator lattice of the relators in the class-2 quotient: [x_u, r_i] for all
/// generators and relators, plus the commutator parts of relator products with
/// zero exponent sum.
inline std::vector<std::vector<BigInt>> class2_commutator_lattice(const Presentation& p) {
  FreeClass2 f(p.rank());
  std::vector<Class2Element> rel;
  for (const auto& r : p.relators) rel.push_back(f.evaluate(r));
  std::vector<std::vector<BigInt>> span;
  for (int u = 0; u < p.rank(); ++u) {
    std::vector<BigInt> e(static_cast<std::size_t>(p.rank()), 0);
    e[static_cast<std::size_t>(u)] = 1;
    for (const auto& r : rel) span.push_back(f.wedge(e, r.a));
  }
  IntMatrix m = relation_matrix(p);
  if (!m.empty()) {
    SmithForm s = smith_normal_form(m, static_cast<std::size_t>(p.rank()));
    for (std::size_t row = s.rank; row < m.size(); ++row) {
      Class2Element prod = f.identity();
      for (std::size_t i = 0; i < rel.size(); ++i)
        if (s.u[row][i] != 0) prod = f.multiply(prod, f.power(rel[i], s.u[row][i]));
      span.push_back(prod.c);
    }
  }
  return span;
}

struct CentralityReport {
  bool central = true;
  std::vector<std::string> failing;  // generators x with [g, x] outside the relator lattice
};

/// Whether generator `gen` is central in the class-2 nilpotent quotient of p.
inline CentralityReport central_in_class2_quotient(const Presentation& p, const std::string& gen) {
  p.check();
  int g = p.index_of(gen);
  FreeClass2 f(p.rank());
  auto span = class2_commutator_lattice(p);
  CentralityReport out;
  for (int x = 0; x < p.rank(); ++x) {
    if (x == g) continue;
    auto target = f.evaluate(commutator(Word::gen(g), Word::gen(x))).c;
    if (!lattice_contains(span, target)) {
      out.central = false;
      out.failing.push_back(p.generators[static_cast<std::size_t>(x)]);
    }
  }
  return out;
}

}  // namespace zariski::groups
