#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qchar/laurent.hpp"
#include "qchar/monomial.hpp"

namespace qchar {

/* Finite formal sum of monomials with integer coefficients.  Term iteration
 * order is the canonical monomial ordering, so emitted output is
 * reproducible byte for byte. */
struct Character {
  std::map<Monomial, long long> terms;
  std::optional<Monomial> head;
  bool truncated = false;
  /* Set when the run saw a dominant monomial other than the head (its
   * coefficient is forced to zero by the algorithm). */
  bool extra_dominant_seen = false;

  long long coeff(const Monomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? 0 : it->second;
  }
  void add_term(const Monomial& m, long long c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms[m] = c;
    } else if ((it->second += c) == 0) {
      terms.erase(it);
    }
  }
  bool is_zero() const { return terms.empty(); }
  size_t monomial_count() const { return terms.size(); }
  long long coefficient_sum() const {
    long long s = 0;
    for (auto& [m, c] : terms) s += c;
    return s;
  }

  static Character unit() {
    Character ch;
    ch.terms[Monomial{}] = 1;
    ch.head = Monomial{};
    return ch;
  }
  static Character of(const Monomial& m, long long c = 1) {
    Character ch;
    ch.add_term(m, c);
    ch.head = m;
    return ch;
  }
};

Character add(const Character& a, const Character& b);
Character scale(const Character& a, long long c);
/* Commutative convolution on exponent maps; the head of the product is the
 * product of heads when both are present. */
Character multiply(const Character& a, const Character& b);

/* Injection into t-coefficients (all coefficients become constants). */
std::map<Monomial, TPoly> to_tpoly(const Character& a);

struct HeightSlice {
  long long height;
  std::vector<std::pair<Monomial, long long>> terms;
};

/* Partition by total A-degree v(m * head^{-1}); heights ascend.  Throws
 * std::domain_error naming the offending monomial when a term is not
 * comparable below the head. */
std::vector<HeightSlice> height_slices(const CartanData& cd,
                                       const Character& ch,
                                       const Monomial& head);

std::vector<std::pair<Monomial, long long>> j_dominant_terms(
    const Character& ch, const NodeSet& J);

}  // namespace qchar
