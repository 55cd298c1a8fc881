#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qchar/cartan.hpp"

namespace qchar {

/* Set of Dynkin nodes, 1-based. */
class NodeSet {
public:
  NodeSet() = default;
  static NodeSet all(int n) { return NodeSet(n >= 64 ? ~0ull : (1ull << n) - 1); }
  static NodeSet single(int i) { return NodeSet(1ull << (i - 1)); }
  static NodeSet of(const std::vector<int>& nodes) {
    uint64_t m = 0;
    for (int i : nodes) m |= 1ull << (i - 1);
    return NodeSet(m);
  }
  bool contains(int i) const { return (mask_ >> (i - 1)) & 1; }
  bool empty() const { return mask_ == 0; }
  NodeSet without(int i) const { return NodeSet(mask_ & ~(1ull << (i - 1))); }
  std::vector<int> nodes(int n) const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }
  bool operator==(const NodeSet& o) const { return mask_ == o.mask_; }

private:
  explicit NodeSet(uint64_t m) : mask_(m) {}
  uint64_t mask_ = 0;
};

/* Sparse exponent map (node, shift) -> nonzero integer, kept sorted by
 * (node, shift); the canonical form shared by Y-monomials and A-vectors. */
class ExpMap {
public:
  struct Entry {
    int node;
    int shift;
    int exp;
    bool operator==(const Entry&) const = default;
  };

  ExpMap() = default;

  static ExpMap variable(int node, int shift, int exp = 1);

  const std::vector<Entry>& entries() const { return e_; }
  bool empty() const { return e_.empty(); }
  size_t size() const { return e_.size(); }
  int exponent(int node, int shift) const;
  void set(int node, int shift, int exp);   // exp 0 erases
  void add(int node, int shift, int exp);   // cancels to canonical form

  ExpMap times(const ExpMap& o) const;      // exponent addition
  ExpMap over(const ExpMap& o) const;       // exponent subtraction
  ExpMap inverse() const;
  ExpMap power(int k) const;

  /* Sum of exponents, optionally restricted to a node set. */
  long long total() const;

  bool operator==(const ExpMap& o) const { return e_ == o.e_; }
  bool operator!=(const ExpMap& o) const { return e_ != o.e_; }
  /* Canonical ordering: lexicographic over the entry list. */
  bool operator<(const ExpMap& o) const;

  size_t hash() const;

private:
  std::vector<Entry> e_;
};

using Monomial = ExpMap;

/* Exponents of A_{i,l}^{-1} factors; all entries nonnegative. */
class AVector {
public:
  AVector() = default;
  static AVector single(int node, int shift, int mult = 1);

  const std::vector<ExpMap::Entry>& entries() const { return m_.entries(); }
  bool empty() const { return m_.empty(); }
  int at(int node, int shift) const { return m_.exponent(node, shift); }
  void add(int node, int shift, int mult);
  AVector plus(const AVector& o) const;
  /* Total number of A-inverse steps: the height v(m). */
  long long height() const { return m_.total(); }

  bool operator==(const AVector& o) const { return m_ == o.m_; }
  bool operator!=(const AVector& o) const { return m_ != o.m_; }
  bool operator<(const AVector& o) const { return m_ < o.m_; }
  size_t hash() const { return m_.hash(); }

private:
  ExpMap m_;
};

/* The monomial A_{i,l} expanded in Y-variables (coweight factor dropped):
 * +1 at (i, l-r_i) and (i, l+r_i); for each j with C(j,i) < 0, -1 at
 * (j, l+r) for r = C(j,i)+1, C(j,i)+3, ..., -C(j,i)-1. */
Monomial a_monomial(const CartanData& cd, int i, int l);

/* Expansion of the product over A_{i,l}^{-v_{i,l}} in Y-variables. */
Monomial expand_a_inverses(const CartanData& cd, const AVector& v);

/* A (Y-monomial, A-inverse vector) pair below a fixed head:
 * y = head * prod A_{i,l}^{-v_{i,l}}. */
struct TrackedMonomial {
  Monomial head;
  Monomial y;
  AVector v;
};

TrackedMonomial tracked_head(const Monomial& head);
TrackedMonomial apply_a_inverse(const CartanData& cd, const TrackedMonomial& tm,
                                int i, int l);

struct UStats {
  long long total = 0;                     // u_J
  long long plus = 0;                      // u_J^+
  long long minus = 0;                     // u_J^-
  std::map<std::pair<int, int>, int> table;  // (node, shift) -> exponent
};

UStats u_stats(const Monomial& m, const NodeSet& J);

/* Keep only exponents at nodes in J (m^{(J)} with coweights dropped). */
Monomial truncate(const Monomial& m, const NodeSet& J);

bool is_dominant(const Monomial& m, const NodeSet& J);

/* True iff at every maximal occupied shift all exponents are <= 0.
 * Empty monomial: nullopt (neither right negative nor not). */
std::optional<bool> is_right_negative(const Monomial& m);

/* Unique v with lo = hi * prod A^{-v} if it exists (dominance order
 * lo <= hi); absent otherwise. Triangular peel from the top shift. */
std::optional<AVector> dominance_compare(const CartanData& cd,
                                         const Monomial& lo,
                                         const Monomial& hi);

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};
struct AVectorHash {
  size_t operator()(const AVector& v) const { return v.hash(); }
};

}  // namespace qchar
