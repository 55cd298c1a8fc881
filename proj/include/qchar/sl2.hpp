#pragma once

#include <map>
#include <vector>

#include "qchar/character.hpp"
#include "qchar/monomial.hpp"

namespace qchar {

/* 2-segment inside one residue class mod 2 r_i: the shifts
 * start, start + 2r_i, ..., start + 2r_i (count-1), with multiplicity. */
struct Segment {
  int node;
  int start;
  int count;  // number of shifts (k+1)
  int mult;
  int step;   // 2 r_i

  int end() const { return start + step * (count - 1); }
  int residue() const { return ((start % step) + step) % step; }
  Monomial head_monomial() const {
    Monomial m;
    for (int p = 0; p < count; ++p) m.add(node, start + step * p, 1);
    return m;
  }
  bool operator==(const Segment&) const = default;
};

/* True iff the union of the two segments (same node, same residue class) is
 * a segment properly containing each of them. */
bool in_special_position(const Segment& a, const Segment& b);

/* Unique decomposition of a shift multiset into pairwise-non-special
 * segments; equal segments merge into one with multiplicity.  Output sorted
 * by (residue, start, count). */
std::vector<Segment> segment_decompose(const CartanData& cd, int i,
                                       const std::map<int, int>& shifts);

/* Segment decomposition of the i-slice of m (m need not be i-dominant as a
 * whole; the slice must be). */
std::vector<Segment> slice_segments(const CartanData& cd, int i,
                                    const Monomial& m);

/* The (count+1) tracked terms of one multiplicity-one string: the head, then
 * successive multiplications by A_{i, end + r_i}^{-1}, A_{i, end - 2r_i +
 * r_i}^{-1}, ..., A_{i, start + r_i}^{-1}. */
std::vector<TrackedMonomial> string_tracked(const CartanData& cd,
                                            const Segment& seg);

/* The string character of a multiplicity-one segment (all coefficients 1). */
Character string_character(const CartanData& cd, const Segment& seg);

/* Expansion of the product over segments of string characters (mult as
 * powers), recorded as A-inverse vectors over node i with integer
 * coefficients relative to the slice head; the empty vector has
 * coefficient 1.  This product lies in the node-i screening kernel but may
 * contain i-dominant monomials below the head when distinct segments nest. */
std::vector<std::pair<AVector, long long>> slice_expansion(
    const CartanData& cd, int i, const Monomial& m);

/* The canonical kernel element F_i(m) for i-dominant m: the unique element
 * of the node-i kernel whose only i-dominant monomial is m.  Computed as the
 * string product corrected recursively at any lower i-dominant monomials. */
Character F_i(const CartanData& cd, int i, const Monomial& m);

/* Same, as (A-vector, coefficient) pairs relative to m. */
std::vector<std::pair<AVector, long long>> F_i_expansion(const CartanData& cd,
                                                         int i,
                                                         const Monomial& m);

/* Monomial set of L_i(m) (the string-product support). */
std::vector<Monomial> L_i_monomials(const CartanData& cd, int i,
                                    const Monomial& m);

}  // namespace qchar
