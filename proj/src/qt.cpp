#include "qchar/qt.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "engine.hpp"
#include "qchar/io.hpp"
#include "qchar/sl2.hpp"

namespace qchar {

namespace {

/* Sum over (i,l) of X(i, l + r_i) * Y(i, l), where Y runs over the entries
 * of an exponent map and X is an exponent lookup. */
template <class Lookup>
long long dot_shift(const CartanData& cd, Lookup&& x,
                    const std::vector<ExpMap::Entry>& y) {
  long long s = 0;
  for (auto& en : y)
    s += static_cast<long long>(x(en.node, en.shift + cd.r(en.node))) * en.exp;
  return s;
}

}  // namespace

long long star_t_exponent(const CartanData& cd, const Monomial& m,
                          const AVector& v, const Monomial& mp,
                          const AVector& vp) {
  const Monomial ev = v.empty() ? Monomial{} : expand_a_inverses(cd, v);
  const Monomial evp = vp.empty() ? Monomial{} : expand_a_inverses(cd, vp);
  auto look_m = [&](int n, int s) { return m.exponent(n, s); };
  auto look_va = [&](int n, int s) { return v.at(n, s); };
  auto look_ev = [&](int n, int s) { return ev.exponent(n, s); };
  long long d = 0;
  d += 2 * dot_shift(cd, look_m, vp.entries());
  d += 2 * dot_shift(cd, look_va, mp.entries());
  d += dot_shift(cd, look_va, evp.entries());
  d += dot_shift(cd, look_ev, vp.entries());
  return d;
}

TCharacter star_t(const CartanData& cd, const TCharacter& a,
                  const TCharacter& b) {
  TCharacter out;
  out.head = a.head.times(b.head);
  out.truncated = a.truncated || b.truncated;
  for (auto& [va, ca] : a.terms) {
    for (auto& [vb, cb] : b.terms) {
      long long d = star_t_exponent(cd, a.head, va, b.head, vb);
      out.add_term(va.plus(vb), (ca * cb).shifted(static_cast<int>(d)));
    }
  }
  return out;
}

std::map<Monomial, TPoly> TCharacter::by_monomial(const CartanData& cd) const {
  std::map<Monomial, TPoly> out;
  for (auto& [v, c] : terms) {
    auto& slot = out[y_of(cd, v)];
    slot += c;
  }
  return out;
}

std::optional<TPoly> bar_symmetrize(const TPoly& p) {
  if (p.is_zero()) return p;
  const int lo = p.min_exp(), hi = p.max_exp();
  if ((lo + hi) % 2 != 0) return std::nullopt;
  TPoly q = p.shifted(-(lo + hi) / 2);
  if (q.reversed() != q) return std::nullopt;
  return q;
}

namespace {

/* The normalization pairing between a pair basis element (y, w) and the
 * bar-canonical basis element of the underlying monomial: kappa is half the
 * symmetrized commutation form over the constituent variables (the Y-factors
 * of y and the A-inverse factors of w).  Y-Y pairs never contribute; Y-A
 * pairs contribute only on the step's own node; A-A pairs are read off the
 * A-monomial exponents. */
long long kappa(const CartanData& cd, const Monomial& y, const AVector& w) {
  long long ya = 0;
  for (auto& en : w.entries()) {
    const int r = cd.r(en.node);
    ya += static_cast<long long>(en.exp) *
          (y.exponent(en.node, en.shift - r) +
           y.exponent(en.node, en.shift + r));
  }
  if (w.entries().size() == 0) return ya;
  std::vector<Monomial> amons;
  amons.reserve(w.entries().size());
  for (auto& en : w.entries())
    amons.push_back(a_monomial(cd, en.node, en.shift));
  long long s_all = 0;
  const auto& ents = w.entries();
  for (size_t p = 0; p < ents.size(); ++p) {
    for (size_t q = 0; q < ents.size(); ++q) {
      const int i = ents[p].node, s = ents[p].shift;
      const int i2 = ents[q].node, s2 = ents[q].shift;
      long long sym = -(amons[q].exponent(i, s - cd.r(i)) +
                        amons[p].exponent(i2, s2 + cd.r(i2)) +
                        amons[p].exponent(i2, s2 - cd.r(i2)) +
                        amons[q].exponent(i, s + cd.r(i)));
      s_all += static_cast<long long>(ents[p].exp) * ents[q].exp * sym;
    }
  }
  long long quad = s_all + 4 * w.height();
  if (quad % 4 != 0)
    throw std::logic_error("kappa: symmetrized pairing is not divisible by 4");
  return ya + quad / 4;
}

using TExp = detail::ExpTerm<TPoly>;

/* Node-i kernel-element expansion of the i-slice of m in the bar-canonical
 * coefficient gauge: the *_t product of the segment strings (segments by
 * (residue, start) ascending, multiplicities as *_t powers), each A-inverse
 * step dressed with one power of t, converted by the kappa normalization.
 * The anchor (empty vector) has coefficient exactly 1.  Equal-height paths
 * through nested segments combine into genuinely non-unit coefficients. */
std::vector<TExp> slice_b_expansion(const CartanData& cd, int i,
                                    const Monomial& m) {
  struct Pair {
    Monomial head;
    AVector v;
    TPoly coeff;
  };
  std::vector<Pair> acc{{Monomial{}, AVector{}, TPoly(1)}};
  for (const Segment& seg : slice_segments(cd, i, m)) {
    Segment one = seg;
    one.mult = 1;
    auto str = string_tracked(cd, one);
    for (int rep = 0; rep < seg.mult; ++rep) {
      std::map<std::pair<Monomial, AVector>, TPoly> next;
      for (auto& p : acc) {
        for (auto& tm : str) {
          long long d = star_t_exponent(cd, p.head, p.v, tm.head, tm.v);
          auto& slot = next[{p.head.times(tm.head), p.v.plus(tm.v)}];
          slot += p.coeff.shifted(static_cast<int>(d));
        }
      }
      acc.clear();
      for (auto& [key, c] : next)
        if (!c.is_zero()) acc.push_back({key.first, key.second, c});
    }
  }
  const Monomial slice = truncate(m, NodeSet::single(i));
  std::map<AVector, TPoly> merged;
  for (auto& p : acc) {
    long long gauge = p.v.height() - kappa(cd, slice, p.v);
    auto& slot = merged[p.v];
    slot += p.coeff.shifted(static_cast<int>(gauge));
  }
  auto it = merged.find(AVector{});
  if (it == merged.end() || !it->second.is_one())
    throw std::logic_error("slice_b_expansion: anchor coefficient is not 1");
  std::vector<TExp> out;
  out.reserve(merged.size());
  for (auto& [v, c] : merged)
    out.push_back({v, v.empty() ? Monomial{} : expand_a_inverses(cd, v), c});
  return out;
}

/* Correct the raw product at i-dominant monomials below the head so the
 * head is the unique i-dominant monomial; in the canonical gauge the
 * corrections are plain subtractions. */
std::vector<TExp> canonical_t_expansion(const CartanData& cd, int i,
                                        const Monomial& m) {
  std::map<AVector, TPoly> acc;
  std::map<AVector, Monomial> expcache;
  for (auto& t : slice_b_expansion(cd, i, m)) {
    acc[t.w] = t.coeff;
    expcache[t.w] = t.w_expanded;
  }
  for (;;) {
    const AVector* extra = nullptr;
    for (auto& [w, c] : acc) {
      if (w.empty() || c.is_zero()) continue;
      if (!is_dominant(m.times(expcache[w]), NodeSet::single(i))) continue;
      if (!extra || w.height() < extra->height()) extra = &w;
    }
    if (!extra) break;
    AVector base = *extra;
    TPoly coeff = acc[base];
    Monomial base_exp = expcache[base];
    for (auto& t : canonical_t_expansion(cd, i, m.times(base_exp))) {
      AVector full = base.plus(t.w);
      if (expcache.find(full) == expcache.end())
        expcache[full] = base_exp.times(t.w_expanded);
      auto& slot = acc[full];
      slot -= coeff * t.coeff;
    }
    for (auto it = acc.begin(); it != acc.end();)
      it = it->second.is_zero() ? acc.erase(it) : std::next(it);
  }
  std::vector<TExp> out;
  out.reserve(acc.size());
  for (auto& [v, c] : acc) out.push_back({v, expcache[v], c});
  return out;
}

struct TPolicy {
  using Coeff = TPoly;
  const CartanData& cd;

  TPoly zero() const { return TPoly(); }
  TPoly one() const { return TPoly(1); }
  bool is_zero(const TPoly& c) const { return c.is_zero(); }
  void add_to(TPoly& a, const TPoly& b) const { a += b; }
  TPoly sub(const TPoly& a, const TPoly& b) const { return a - b; }
  std::string debug_str(const TPoly& c) const { return c.to_string(); }

  std::map<std::pair<int, Monomial>, std::vector<TExp>> memo;
  std::mutex memo_mutex;

  const std::vector<TExp>& expansion(int j, const Monomial& slice) {
    {
      std::lock_guard<std::mutex> g(memo_mutex);
      auto it = memo.find({j, slice});
      if (it != memo.end()) return it->second;
    }
    auto terms = slice_b_expansion(cd, j, slice);
    std::lock_guard<std::mutex> g(memo_mutex);
    return memo.emplace(std::pair{j, slice}, std::move(terms)).first->second;
  }

  TPoly transport(const Monomial&, const AVector&, const Monomial&,
                  const TExp& term, const TPoly& packet) const {
    return packet * term.coeff;
  }

  TPoly combine(const Monomial& m,
                const std::vector<std::pair<int, TPoly>>& cands,
                bool& gauge_fixed) const {
    bool all_equal = true;
    for (size_t k = 1; k < cands.size(); ++k)
      if (cands[k].second != cands[0].second) all_equal = false;
    if (all_equal) return cands.front().second;

    // Safety valve: accept disagreement by one global power of t, store the
    // bar-symmetrized representative.  The canonical gauge is expected to
    // make candidates literally equal.
    bool any_zero = false, all_zero = true;
    for (auto& [j, c] : cands) {
      if (c.is_zero()) any_zero = true;
      else all_zero = false;
    }
    if (all_zero) return TPoly();
    TPoly base = cands.front().second;
    if (any_zero || base.is_zero()) {
      std::ostringstream os;
      os << "t-deformed recursion: zero/nonzero s_j mismatch at "
         << monomial_to_text(m);
      throw InconsistentAlgorithm(os.str());
    }
    TPoly norm0 = base.shifted(-base.min_exp());
    for (size_t k = 1; k < cands.size(); ++k) {
      const TPoly& c = cands[k].second;
      if (c.shifted(-c.min_exp()) != norm0) {
        std::ostringstream os;
        os << "t-deformed recursion: s_" << cands[0].first << " = "
           << base.to_string() << " vs s_" << cands[k].first << " = "
           << c.to_string() << " at " << monomial_to_text(m)
           << " (beyond a power of t)";
        throw InconsistentAlgorithm(os.str());
      }
    }
    gauge_fixed = true;
    if (auto bar = bar_symmetrize(base)) return *bar;
    return base;  // smallest node index comes first
  }
};

}  // namespace

TCharacter F_it(const CartanData& cd, int i, const Monomial& m) {
  if (!is_dominant(m, NodeSet::single(i))) {
    std::ostringstream os;
    os << "F_it: monomial " << monomial_to_text(m) << " is not " << i
       << "-dominant";
    throw std::domain_error(os.str());
  }
  TCharacter out;
  out.head = m;
  int dominant_terms = 0;
  for (auto& t : canonical_t_expansion(cd, i, m)) {
    out.add_term(t.w, t.coeff);
    if (is_dominant(m.times(t.w_expanded), NodeSet::single(i)))
      ++dominant_terms;
  }
  if (dominant_terms != 1)
    throw std::logic_error("F_it: head is not the unique i-dominant monomial");
  return out;
}

TCharacter t_algorithm(const CartanData& cd, const Monomial& head,
                       const RunLimits& limits) {
  for (int i = 1; i <= cd.n(); ++i)
    for (int j = 1; j <= cd.n(); ++j)
      if (i != j && cd.C(i, j) * cd.C(j, i) > 3)
        throw std::invalid_argument(
            "t_algorithm: matrix violates C_ij * C_ji <= 3");
  TPolicy pol{cd};
  auto res = detail::run_worklist(cd, head, limits, pol);
  TCharacter out;
  out.head = head;
  out.truncated = res.truncated;
  out.extra_dominant_seen = res.extra_dominant;
  out.gauge_fixed = res.gauge_fixed;
  for (auto& [m, t] : res.terms) out.terms[t.v] = t.coeff;
  return out;
}

TCharacter shift_tcharacter(const TCharacter& tch, int c) {
  TCharacter out;
  out.head = shift_monomial(tch.head, c);
  out.truncated = tch.truncated;
  out.extra_dominant_seen = tch.extra_dominant_seen;
  out.gauge_fixed = tch.gauge_fixed;
  for (auto& [v, coeff] : tch.terms) {
    AVector sv;
    for (auto& en : v.entries()) sv.add(en.node, en.shift + c, en.exp);
    out.terms[sv] = coeff;
  }
  return out;
}

/* Product of t-characters in the bar-canonical gauge: the twist is the
 * antisymmetrized pair exponent, so reversing the factors inverts it. */
TCharacter star_b(const CartanData& cd, const TCharacter& a,
                  const TCharacter& b) {
  TCharacter out;
  out.head = a.head.times(b.head);
  out.truncated = a.truncated || b.truncated;
  for (auto& [va, ca] : a.terms) {
    for (auto& [vb, cb] : b.terms) {
      long long d = star_t_exponent(cd, a.head, va, b.head, vb) -
                    star_t_exponent(cd, b.head, vb, a.head, va);
      if (d % 2 != 0)
        throw std::logic_error("star_b: odd commutation exponent");
      out.add_term(va.plus(vb), (ca * cb).shifted(static_cast<int>(d / 2)));
    }
  }
  return out;
}

TCharacter qt_standard(const CartanData& cd,
                       const std::vector<std::pair<int, int>>& factors,
                       const RunLimits& limits) {
  std::vector<std::pair<int, int>> ordered;  // (shift, node)
  for (auto& [i, l] : factors) ordered.emplace_back(l, i);
  std::sort(ordered.begin(), ordered.end());

  TCharacter out = TCharacter::of(Monomial{});
  std::map<int, TCharacter> base;
  for (auto& [l, i] : ordered) {
    auto it = base.find(i);
    if (it == base.end())
      it = base.emplace(i, t_algorithm(cd, Monomial::variable(i, 0), limits))
               .first;
    out = star_b(cd, out, shift_tcharacter(it->second, l));
  }
  return out;
}

Character specialize_t1(const CartanData& cd, const TCharacter& tch) {
  Character out;
  out.head = tch.head;
  out.truncated = tch.truncated;
  out.extra_dominant_seen = tch.extra_dominant_seen;
  for (auto& [v, c] : tch.terms)
    out.add_term(tch.y_of(cd, v), c.eval_at_one());
  return out;
}

}  // namespace qchar
