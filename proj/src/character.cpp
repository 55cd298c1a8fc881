#include "qchar/character.hpp"

#include <sstream>

#include "qchar/io.hpp"

namespace qchar {

Character add(const Character& a, const Character& b) {
  Character out = a;
  for (auto& [m, c] : b.terms) out.add_term(m, c);
  out.head.reset();
  out.truncated = a.truncated || b.truncated;
  return out;
}

Character scale(const Character& a, long long c) {
  Character out;
  out.head = a.head;
  out.truncated = a.truncated;
  if (c == 0) return out;
  for (auto& [m, k] : a.terms) out.terms[m] = k * c;
  return out;
}

Character multiply(const Character& a, const Character& b) {
  Character out;
  for (auto& [ma, ca] : a.terms)
    for (auto& [mb, cb] : b.terms) out.add_term(ma.times(mb), ca * cb);
  if (a.head && b.head) out.head = a.head->times(*b.head);
  out.truncated = a.truncated || b.truncated;
  return out;
}

std::map<Monomial, TPoly> to_tpoly(const Character& a) {
  std::map<Monomial, TPoly> out;
  for (auto& [m, c] : a.terms) out[m] = TPoly(c);
  return out;
}

std::vector<HeightSlice> height_slices(const CartanData& cd,
                                       const Character& ch,
                                       const Monomial& head) {
  std::map<long long, HeightSlice> slices;
  for (auto& [m, c] : ch.terms) {
    auto v = dominance_compare(cd, m, head);
    if (!v) {
      std::ostringstream os;
      os << "height_slices: term " << monomial_to_text(m)
         << " is not comparable below the head " << monomial_to_text(head);
      throw std::domain_error(os.str());
    }
    long long h = v->height();
    auto& slice = slices[h];
    slice.height = h;
    slice.terms.emplace_back(m, c);
  }
  std::vector<HeightSlice> out;
  out.reserve(slices.size());
  for (auto& [h, s] : slices) out.push_back(std::move(s));
  return out;
}

std::vector<std::pair<Monomial, long long>> j_dominant_terms(
    const Character& ch, const NodeSet& J) {
  std::vector<std::pair<Monomial, long long>> out;
  for (auto& [m, c] : ch.terms)
    if (is_dominant(m, J)) out.emplace_back(m, c);
  return out;
}

}  // namespace qchar
