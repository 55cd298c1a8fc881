#include "qchar/algorithm.hpp"

#include <algorithm>
#include <climits>
#include <mutex>
#include <sstream>

#include "engine.hpp"
#include "qchar/io.hpp"
#include "qchar/sl2.hpp"

namespace qchar {

namespace {

struct ClassicalPolicy {
  using Coeff = long long;
  const CartanData& cd;

  Coeff zero() const { return 0; }
  Coeff one() const { return 1; }
  bool is_zero(Coeff c) const { return c == 0; }
  void add_to(Coeff& a, const Coeff& b) const { a += b; }
  Coeff sub(const Coeff& a, const Coeff& b) const { return a - b; }
  std::string debug_str(const Coeff& c) const { return std::to_string(c); }

  std::map<std::pair<int, Monomial>, std::vector<detail::ExpTerm<Coeff>>> memo;
  std::mutex memo_mutex;

  const std::vector<detail::ExpTerm<Coeff>>& expansion(int j,
                                                       const Monomial& slice) {
    {
      std::lock_guard<std::mutex> g(memo_mutex);
      auto it = memo.find({j, slice});
      if (it != memo.end()) return it->second;
    }
    std::vector<detail::ExpTerm<Coeff>> terms;
    for (auto& [w, c] : slice_expansion(cd, j, slice))
      terms.push_back({w, expand_a_inverses(cd, w), c});
    std::lock_guard<std::mutex> g(memo_mutex);
    return memo.emplace(std::pair{j, slice}, std::move(terms))
        .first->second;
  }

  Coeff transport(const Monomial&, const AVector&, const Monomial&,
                  const detail::ExpTerm<Coeff>& term,
                  const Coeff& packet) const {
    return packet * term.coeff;
  }

  Coeff combine(const Monomial& m,
                const std::vector<std::pair<int, Coeff>>& cands,
                bool&) const {
    for (size_t k = 1; k < cands.size(); ++k) {
      if (cands[k].second != cands[0].second) {
        std::ostringstream os;
        os << "classical recursion: s_" << cands[0].first << " = "
           << cands[0].second << " but s_" << cands[k].first << " = "
           << cands[k].second << " at " << monomial_to_text(m);
        throw InconsistentAlgorithm(os.str());
      }
    }
    return cands.front().second;
  }
};

Character to_character(const CartanData& cd, const Monomial& head,
                       const detail::EngineResult<ClassicalPolicy>& res) {
  Character ch;
  ch.head = head;
  ch.truncated = res.truncated;
  ch.extra_dominant_seen = res.extra_dominant;
  for (auto& [m, t] : res.terms) ch.terms[m] = t.coeff;
  return ch;
}

}  // namespace

Character classical_algorithm(const CartanData& cd, const Monomial& head,
                              const RunLimits& limits) {
  ClassicalPolicy pol{cd};
  auto res = detail::run_worklist(cd, head, limits, pol);
  return to_character(cd, head, res);
}

Character fundamental_qcharacter(const CartanData& cd, int i, int l,
                                 const RunLimits& limits) {
  if (i < 1 || i > cd.n())
    throw std::invalid_argument("fundamental_qcharacter: node out of range");
  Character ch = classical_algorithm(cd, Monomial::variable(i, l), limits);
  if (!cd.affine()) {
    int dominant = 0;
    for (auto& [m, c] : ch.terms)
      if (is_dominant(m, NodeSet::all(cd.n()))) ++dominant;
    if (dominant != 1 || ch.coeff(*ch.head) != 1)
      throw std::logic_error(
          "fundamental_qcharacter: head is not the unique dominant monomial");
  }
  return ch;
}

Monomial shift_monomial(const Monomial& m, int c) {
  Monomial out;
  for (auto& en : m.entries()) out.add(en.node, en.shift + c, en.exp);
  return out;
}

Character shift_character(const Character& ch, int c) {
  Character out;
  out.truncated = ch.truncated;
  out.extra_dominant_seen = ch.extra_dominant_seen;
  if (ch.head) out.head = shift_monomial(*ch.head, c);
  for (auto& [m, k] : ch.terms) out.terms[shift_monomial(m, c)] = k;
  return out;
}

Character standard_qcharacter(const CartanData& cd,
                              const std::vector<std::pair<int, int>>& factors,
                              const RunLimits& limits) {
  Character out = Character::unit();
  std::map<int, Character> base;  // node -> fundamental at shift 0
  for (auto& [i, l] : factors) {
    auto it = base.find(i);
    if (it == base.end())
      it = base.emplace(i, fundamental_qcharacter(cd, i, 0, limits)).first;
    out = multiply(out, shift_character(it->second, l));
  }
  return out;
}

namespace {

struct Subdiagram {
  CartanData cd;
  std::vector<int> to_full;  // sub node (1-based) -> full node
};

Subdiagram make_subdiagram(const CartanData& cd, const NodeSet& J) {
  Subdiagram sub;
  sub.to_full = J.nodes(cd.n());
  const int k = static_cast<int>(sub.to_full.size());
  if (k == 0) throw std::invalid_argument("subdiagram: empty node set");
  sub.cd.family = Family::A;  // placeholder; the matrix is what matters
  sub.cd.rank = k;
  sub.cd.mat.assign(k, std::vector<int>(k));
  sub.cd.sym.assign(k, 1);
  for (int a = 0; a < k; ++a) {
    sub.cd.sym[a] = cd.r(sub.to_full[a]);
    for (int b = 0; b < k; ++b)
      sub.cd.mat[a][b] = cd.C(sub.to_full[a], sub.to_full[b]);
  }
  if (!is_finite_type(sub.cd.mat, sub.cd.sym))
    throw std::domain_error("subdiagram is not of finite type");
  return sub;
}

}  // namespace

Character subdiagram_kernel_element(const CartanData& cd, const Monomial& m,
                                    const NodeSet& J,
                                    const RunLimits& limits) {
  if (!is_dominant(m, J))
    throw std::domain_error(
        "subdiagram_kernel_element: monomial is not J-dominant");
  bool full = true;
  for (int i = 1; i <= cd.n(); ++i)
    if (!J.contains(i)) full = false;
  if (full && !cd.affine()) return classical_algorithm(cd, m, limits);

  Subdiagram sub = make_subdiagram(cd, J);
  std::vector<int> to_sub(cd.n() + 1, 0);
  for (size_t a = 0; a < sub.to_full.size(); ++a)
    to_sub[sub.to_full[a]] = static_cast<int>(a) + 1;

  Monomial sub_head;
  for (auto& en : m.entries())
    if (J.contains(en.node)) sub_head.add(to_sub[en.node], en.shift, en.exp);

  ClassicalPolicy pol{sub.cd};
  auto res = detail::run_worklist(sub.cd, sub_head, limits, pol);

  // mu_J^I substitution: replay each sub-A-inverse vector with the
  // full-diagram A-monomials on the original monomial.
  Character out;
  out.head = m;
  out.truncated = res.truncated;
  out.extra_dominant_seen = res.extra_dominant;
  for (auto& [sm, t] : res.terms) {
    AVector vfull;
    for (auto& en : t.v.entries())
      vfull.add(sub.to_full[en.node - 1], en.shift, en.exp);
    out.add_term(m.times(expand_a_inverses(cd, vfull)), t.coeff);
  }
  return out;
}

Character restrict_L_J(const CartanData& cd, const Monomial& m,
                       const NodeSet& J, const RunLimits& limits) {
  Character out = subdiagram_kernel_element(cd, m, J, limits);
  if (out.extra_dominant_seen)
    throw std::domain_error(
        "restrict_L_J: subdiagram character is not simple (extra dominant "
        "monomial present)");
  return out;
}

std::vector<std::pair<Monomial, long long>> kernel_decompose(
    const CartanData& cd, const Character& ch, const NodeSet& J,
    const RunLimits& limits) {
  if (!ch.head)
    throw std::invalid_argument("kernel_decompose: character has no head");
  const Monomial head = *ch.head;

  std::map<Monomial, long long> residual = ch.terms;
  std::map<Monomial, long long> heights;
  auto height_of = [&](const Monomial& m) -> long long {
    auto it = heights.find(m);
    if (it != heights.end()) return it->second;
    auto v = dominance_compare(cd, m, head);
    long long h = v ? v->height() : LLONG_MAX / 2;
    heights.emplace(m, h);
    return h;
  };

  std::vector<std::pair<Monomial, long long>> out;
  for (;;) {
    const Monomial* pick = nullptr;
    long long pick_h = 0;
    for (auto& [m, c] : residual) {
      if (c == 0 || !is_dominant(m, J)) continue;
      long long h = height_of(m);
      if (!pick || h < pick_h) {
        pick = &m;
        pick_h = h;
      }
    }
    if (!pick) break;
    Monomial anchor = *pick;
    long long c = residual[anchor];
    out.emplace_back(anchor, c);
    Character k = subdiagram_kernel_element(cd, anchor, J, limits);
    for (auto& [m, kc] : k.terms) {
      auto it = residual.find(m);
      long long nv = (it == residual.end() ? 0 : it->second) - c * kc;
      if (nv == 0) {
        if (it != residual.end()) residual.erase(it);
      } else {
        residual[m] = nv;
      }
    }
  }
  for (auto& [m, c] : residual) {
    if (c != 0) {
      std::ostringstream os;
      os << "kernel_decompose: residue " << c << " at " << monomial_to_text(m);
      throw NonzeroResidue(os.str());
    }
  }
  return out;
}

}  // namespace qchar
