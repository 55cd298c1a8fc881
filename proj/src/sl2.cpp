#include "qchar/sl2.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qchar/io.hpp"

namespace qchar {

bool in_special_position(const Segment& a, const Segment& b) {
  if (a.node != b.node || a.step != b.step || a.residue() != b.residue())
    return false;
  const Segment& lo = a.start <= b.start ? a : b;
  const Segment& hi = a.start <= b.start ? b : a;
  // Union is a segment iff there is no gap; it properly contains each iff
  // the starts and ends are strictly staggered.
  return lo.start < hi.start && hi.start <= lo.end() + lo.step &&
         lo.end() < hi.end();
}

std::vector<Segment> segment_decompose(const CartanData& cd, int i,
                                       const std::map<int, int>& shifts) {
  const int step = 2 * cd.r(i);
  for (auto& [s, u] : shifts)
    if (u <= 0) throw std::invalid_argument("segment_decompose: multiplicities must be positive");

  // Group by residue class, walk shifts ascending.  Open chains behave as a
  // stack: at a multiplicity drop the latest-opened chains close, which is
  // the unique way to avoid special position among the results.
  std::map<int, std::vector<std::pair<int, int>>> classes;  // residue -> (shift, mult)
  for (auto& [s, u] : shifts) {
    int res = ((s % step) + step) % step;
    classes[res].emplace_back(s, u);
  }
  std::vector<Segment> out;
  for (auto& [res, list] : classes) {
    std::vector<int> starts;  // open chains, in opening order
    int prev = 0;
    bool have_prev = false;
    auto close_from = [&](size_t keep, int last) {
      for (size_t k = starts.size(); k > keep; --k) {
        int st = starts[k - 1];
        out.push_back({i, st, (last - st) / step + 1, 1, step});
      }
      starts.resize(keep);
    };
    for (auto& [s, u] : list) {
      if (have_prev && s != prev + step) close_from(0, prev);
      if (static_cast<int>(starts.size()) > u) close_from(u, prev);
      while (static_cast<int>(starts.size()) < u) starts.push_back(s);
      prev = s;
      have_prev = true;
    }
    if (have_prev) close_from(0, prev);
  }
  std::sort(out.begin(), out.end(), [](const Segment& a, const Segment& b) {
    return std::tuple(a.residue(), a.start, a.count) <
           std::tuple(b.residue(), b.start, b.count);
  });
  // merge equal segments into multiplicities
  std::vector<Segment> merged;
  for (auto& s : out) {
    if (!merged.empty() && merged.back().start == s.start &&
        merged.back().count == s.count) {
      merged.back().mult += 1;
    } else {
      merged.push_back(s);
    }
  }
  return merged;
}

std::vector<Segment> slice_segments(const CartanData& cd, int i,
                                    const Monomial& m) {
  std::map<int, int> shifts;
  for (auto& en : m.entries()) {
    if (en.node != i) continue;
    if (en.exp < 0)
      throw std::invalid_argument("slice_segments: slice is not dominant");
    shifts[en.shift] = en.exp;
  }
  return segment_decompose(cd, i, shifts);
}

std::vector<TrackedMonomial> string_tracked(const CartanData& cd,
                                            const Segment& seg) {
  if (seg.mult != 1)
    throw std::invalid_argument("string_tracked: multiplicity must be 1");
  const int r = cd.r(seg.node);
  std::vector<TrackedMonomial> out;
  TrackedMonomial tm = tracked_head(seg.head_monomial());
  out.push_back(tm);
  for (int p = seg.count - 1; p >= 0; --p) {
    tm = apply_a_inverse(cd, tm, seg.node, seg.start + seg.step * p + r);
    out.push_back(tm);
  }
  return out;
}

Character string_character(const CartanData& cd, const Segment& seg) {
  Character ch;
  auto terms = string_tracked(cd, seg);
  ch.head = terms.front().y;
  for (auto& tm : terms) ch.add_term(tm.y, 1);
  return ch;
}

std::vector<std::pair<AVector, long long>> slice_expansion(
    const CartanData& cd, int i, const Monomial& m) {
  std::map<AVector, long long> acc;
  acc[AVector{}] = 1;
  for (const Segment& seg : slice_segments(cd, i, m)) {
    Segment one = seg;
    one.mult = 1;
    auto terms = string_tracked(cd, one);
    for (int rep = 0; rep < seg.mult; ++rep) {
      std::map<AVector, long long> next;
      for (auto& [w, c] : acc)
        for (auto& tm : terms) next[w.plus(tm.v)] += c;
      acc = std::move(next);
    }
  }
  return {acc.begin(), acc.end()};
}

namespace {

/* Correct the raw string product at i-dominant monomials below the head so
 * that the head is the unique i-dominant monomial. */
std::vector<std::pair<AVector, long long>> canonical_expansion(
    const CartanData& cd, int i, const Monomial& m) {
  std::map<AVector, long long> acc;
  for (auto& [w, c] : slice_expansion(cd, i, m)) acc[w] = c;
  while (true) {
    // lowest extra i-dominant term, by height then by A-vector order
    const AVector* extra = nullptr;
    long long coeff = 0;
    for (auto& [w, c] : acc) {
      if (w.empty() || c == 0) continue;
      Monomial y = m.times(expand_a_inverses(cd, w));
      if (!is_dominant(y, NodeSet::single(i))) continue;
      if (!extra || w.height() < extra->height()) {
        extra = &w;
        coeff = c;
      }
    }
    if (!extra) break;
    AVector base = *extra;
    Monomial y = m.times(expand_a_inverses(cd, base));
    for (auto& [w, c] : canonical_expansion(cd, i, y))
      acc[base.plus(w)] -= coeff * c;
    for (auto it = acc.begin(); it != acc.end();)
      it = it->second == 0 ? acc.erase(it) : std::next(it);
  }
  return {acc.begin(), acc.end()};
}

}  // namespace

std::vector<std::pair<AVector, long long>> F_i_expansion(const CartanData& cd,
                                                         int i,
                                                         const Monomial& m) {
  if (!is_dominant(m, NodeSet::single(i))) {
    std::ostringstream os;
    os << "F_i: monomial " << monomial_to_text(m) << " is not " << i
       << "-dominant";
    throw std::domain_error(os.str());
  }
  return canonical_expansion(cd, i, truncate(m, NodeSet::single(i)));
}

Character F_i(const CartanData& cd, int i, const Monomial& m) {
  Character ch;
  ch.head = m;
  int dominant_terms = 0;
  for (auto& [w, c] : F_i_expansion(cd, i, m)) {
    Monomial y = m.times(expand_a_inverses(cd, w));
    ch.add_term(y, c);
    if (is_dominant(y, NodeSet::single(i))) ++dominant_terms;
  }
  if (dominant_terms != 1 || ch.coeff(m) != 1)
    throw std::logic_error("F_i: head is not the unique i-dominant monomial");
  return ch;
}

std::vector<Monomial> L_i_monomials(const CartanData& cd, int i,
                                    const Monomial& m) {
  if (!is_dominant(m, NodeSet::single(i)))
    throw std::domain_error("L_i_monomials: monomial is not i-dominant");
  std::vector<Monomial> out;
  for (auto& [w, c] : slice_expansion(cd, i, truncate(m, NodeSet::single(i))))
    out.push_back(m.times(expand_a_inverses(cd, w)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace qchar
