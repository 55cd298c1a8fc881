#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qchar/algorithm.hpp"
#include "qchar/character.hpp"
#include "qchar/laurent.hpp"
#include "qchar/monomial.hpp"

namespace qchar {

/* t-deformed character: terms are (Y-monomial, A-inverse-vector) pairs below
 * a fixed head, keyed by the A-vector (the A-monomials are algebraically
 * independent, so v determines y and conversely). */
struct TCharacter {
  Monomial head;
  std::map<AVector, TPoly> terms;
  bool truncated = false;
  bool extra_dominant_seen = false;
  /* Set when a consistency candidate was stored only up to a power of t. */
  bool gauge_fixed = false;

  Monomial y_of(const CartanData& cd, const AVector& v) const {
    return v.empty() ? head : head.times(expand_a_inverses(cd, v));
  }
  void add_term(const AVector& v, const TPoly& c) {
    if (c.is_zero()) return;
    auto it = terms.find(v);
    if (it == terms.end()) {
      terms[v] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  /* Merge pair-terms with equal y-monomial (injective in practice). */
  std::map<Monomial, TPoly> by_monomial(const CartanData& cd) const;

  static TCharacter of(const Monomial& head) {
    TCharacter t;
    t.head = head;
    t.terms[AVector{}] = TPoly(1);
    return t;
  }
};

/* The twist exponent D((m,v),(m',v')) of the *_t product; m, m' are the
 * heads of the two pairs and v, v' their A-inverse vectors. */
long long star_t_exponent(const CartanData& cd, const Monomial& m,
                          const AVector& v, const Monomial& mp,
                          const AVector& vp);

/* Bilinear extension of (m,v) *_t (m',v') = t^D (mm', vv'). */
TCharacter star_t(const CartanData& cd, const TCharacter& a,
                  const TCharacter& b);

/* The same product computed on bar-canonical coefficients: the twist is the
 * antisymmetrized exponent (D(a,b) - D(b,a)) / 2.  This is the product under
 * which the engine's coefficient gauge is multiplicative. */
TCharacter star_b(const CartanData& cd, const TCharacter& a,
                  const TCharacter& b);

/* t-deformed node-i kernel element for i-dominant m.  Multiplicity-one
 * slices reproduce F_i(m) with all coefficients 1; otherwise the *_t-ordered
 * product of segment strings (segments by (residue, start) ascending,
 * multiplicities as *_t powers), head-normalized and corrected at any lower
 * i-dominant monomials. */
TCharacter F_it(const CartanData& cd, int i, const Monomial& m);

/* The expansion recursion run with t-coefficients and F_it in place of F_i.
 * Requires C_{ij} C_{ji} <= 3 for i != j. */
TCharacter t_algorithm(const CartanData& cd, const Monomial& head,
                       const RunLimits& limits = {});

/* q,t-character of the standard module with the given fundamental factors:
 * the *_t product in nondecreasing shift order (equal shifts in node
 * order). */
TCharacter qt_standard(const CartanData& cd,
                       const std::vector<std::pair<int, int>>& factors,
                       const RunLimits& limits = {});

/* Sum coefficients at t = 1 and merge pair-terms with equal y-monomial. */
Character specialize_t1(const CartanData& cd, const TCharacter& tch);

/* t^delta * p when some integer delta makes the result invariant under
 * t <-> t^{-1}; absent otherwise. */
std::optional<TPoly> bar_symmetrize(const TPoly& p);

TCharacter shift_tcharacter(const TCharacter& tch, int c);

}  // namespace qchar
