#include "qchar/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace qchar {

ExpMap ExpMap::variable(int node, int shift, int exp) {
  ExpMap m;
  if (exp != 0) m.e_.push_back({node, shift, exp});
  return m;
}

int ExpMap::exponent(int node, int shift) const {
  Entry probe{node, shift, 0};
  auto it = std::lower_bound(e_.begin(), e_.end(), probe,
                             [](const Entry& a, const Entry& b) {
                               return std::pair(a.node, a.shift) <
                                      std::pair(b.node, b.shift);
                             });
  if (it != e_.end() && it->node == node && it->shift == shift) return it->exp;
  return 0;
}

void ExpMap::set(int node, int shift, int exp) {
  Entry probe{node, shift, 0};
  auto it = std::lower_bound(e_.begin(), e_.end(), probe,
                             [](const Entry& a, const Entry& b) {
                               return std::pair(a.node, a.shift) <
                                      std::pair(b.node, b.shift);
                             });
  const bool present =
      it != e_.end() && it->node == node && it->shift == shift;
  if (exp == 0) {
    if (present) e_.erase(it);
  } else if (present) {
    it->exp = exp;
  } else {
    e_.insert(it, {node, shift, exp});
  }
}

void ExpMap::add(int node, int shift, int exp) {
  if (exp == 0) return;
  set(node, shift, exponent(node, shift) + exp);
}

ExpMap ExpMap::times(const ExpMap& o) const {
  ExpMap out;
  out.e_.reserve(e_.size() + o.e_.size());
  auto a = e_.begin(), b = o.e_.begin();
  while (a != e_.end() || b != o.e_.end()) {
    if (b == o.e_.end() || (a != e_.end() && std::pair(a->node, a->shift) <
                                                 std::pair(b->node, b->shift))) {
      out.e_.push_back(*a++);
    } else if (a == e_.end() || std::pair(b->node, b->shift) <
                                    std::pair(a->node, a->shift)) {
      out.e_.push_back(*b++);
    } else {
      int s = a->exp + b->exp;
      if (s != 0) out.e_.push_back({a->node, a->shift, s});
      ++a, ++b;
    }
  }
  return out;
}

ExpMap ExpMap::over(const ExpMap& o) const { return times(o.inverse()); }

ExpMap ExpMap::inverse() const {
  ExpMap out = *this;
  for (auto& en : out.e_) en.exp = -en.exp;
  return out;
}

ExpMap ExpMap::power(int k) const {
  if (k == 0) return ExpMap();
  ExpMap out = *this;
  for (auto& en : out.e_) en.exp *= k;
  return out;
}

long long ExpMap::total() const {
  long long s = 0;
  for (auto& en : e_) s += en.exp;
  return s;
}

bool ExpMap::operator<(const ExpMap& o) const {
  return std::lexicographical_compare(
      e_.begin(), e_.end(), o.e_.begin(), o.e_.end(),
      [](const Entry& a, const Entry& b) {
        return std::tie(a.node, a.shift, a.exp) <
               std::tie(b.node, b.shift, b.exp);
      });
}

size_t ExpMap::hash() const {
  uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto mix = [&h](uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  for (auto& en : e_) {
    mix(static_cast<uint64_t>(static_cast<uint32_t>(en.node)));
    mix(static_cast<uint64_t>(static_cast<uint32_t>(en.shift)));
    mix(static_cast<uint64_t>(static_cast<uint32_t>(en.exp)));
  }
  return static_cast<size_t>(h);
}

AVector AVector::single(int node, int shift, int mult) {
  AVector v;
  v.add(node, shift, mult);
  return v;
}

void AVector::add(int node, int shift, int mult) {
  if (mult == 0) return;
  m_.add(node, shift, mult);
  if (m_.exponent(node, shift) < 0)
    throw std::logic_error("AVector: negative multiplicity");
}

AVector AVector::plus(const AVector& o) const {
  AVector out;
  out.m_ = m_.times(o.m_);
  return out;
}

Monomial a_monomial(const CartanData& cd, int i, int l) {
  Monomial m;
  m.add(i, l - cd.r(i), 1);
  m.add(i, l + cd.r(i), 1);
  for (int j : cd.neighbors_into(i)) {
    const int c = cd.C(j, i);
    for (int r = c + 1; r <= -c - 1; r += 2) m.add(j, l + r, -1);
  }
  return m;
}

Monomial expand_a_inverses(const CartanData& cd, const AVector& v) {
  Monomial out;
  for (auto& en : v.entries())
    out = out.times(a_monomial(cd, en.node, en.shift).power(-en.exp));
  return out;
}

TrackedMonomial tracked_head(const Monomial& head) {
  return TrackedMonomial{head, head, AVector{}};
}

TrackedMonomial apply_a_inverse(const CartanData& cd, const TrackedMonomial& tm,
                                int i, int l) {
  TrackedMonomial out;
  out.head = tm.head;
  out.y = tm.y.over(a_monomial(cd, i, l));
  out.v = tm.v;
  out.v.add(i, l, 1);
  return out;
}

UStats u_stats(const Monomial& m, const NodeSet& J) {
  UStats s;
  for (auto& en : m.entries()) {
    if (!J.contains(en.node)) continue;
    s.total += en.exp;
    if (en.exp > 0) s.plus += en.exp;
    else s.minus += en.exp;
    s.table[{en.node, en.shift}] = en.exp;
  }
  return s;
}

Monomial truncate(const Monomial& m, const NodeSet& J) {
  Monomial out;
  for (auto& en : m.entries())
    if (J.contains(en.node)) out.add(en.node, en.shift, en.exp);
  return out;
}

bool is_dominant(const Monomial& m, const NodeSet& J) {
  for (auto& en : m.entries())
    if (J.contains(en.node) && en.exp < 0) return false;
  return true;
}

std::optional<bool> is_right_negative(const Monomial& m) {
  if (m.empty()) return std::nullopt;
  int top = m.entries().front().shift;
  for (auto& en : m.entries()) top = std::max(top, en.shift);
  for (auto& en : m.entries())
    if (en.shift == top && en.exp > 0) return false;
  return true;
}

namespace {

/* Exact integer solve of C d = b (Gauss over rationals, long double-free:
 * fraction-free forward pass then exact rational back substitution).
 * Returns false if no solution with all d_i integers >= 0 exists or the
 * matrix is singular. */
bool solve_nonneg_heights(const CartanData& cd, const std::vector<long long>& b,
                          std::vector<long long>& d) {
  const int n = cd.n();
  // augmented matrix over long long, fraction-free elimination
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = cd.mat[i][j];
    a[i][n] = b[i];
  }
  long long prev = 1;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { p = i; break; }
      if (p < 0) return false;  // singular
      std::swap(a[k], a[p]);
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j <= n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  d.assign(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    long long num = a[i][n];
    for (int j = i + 1; j < n; ++j) num -= a[i][j] * d[j];
    if (a[i][i] == 0 || num % a[i][i] != 0) return false;
    d[i] = num / a[i][i];
    if (d[i] < 0) return false;
  }
  return true;
}

}  // namespace

std::optional<AVector> dominance_compare(const CartanData& cd,
                                         const Monomial& lo,
                                         const Monomial& hi) {
  Monomial q = lo.over(hi);
  AVector v;
  if (q.empty()) return v;

  // For finite families the per-node A-inverse totals are forced by the
  // root-lattice coordinates of the quotient; reject early when they are
  // not nonnegative integers.
  if (!cd.affine()) {
    std::vector<long long> u(cd.n(), 0);
    for (auto& en : q.entries()) u[en.node - 1] -= en.exp;
    std::vector<long long> d;
    if (!solve_nonneg_heights(cd, u, d)) return std::nullopt;
  }

  long long guard = 0;
  while (!q.empty()) {
    if (++guard > 2000000)
      throw std::logic_error("dominance_compare: peel did not terminate");
    int top = q.entries().front().shift;
    for (auto& en : q.entries()) top = std::max(top, en.shift);
    // All top-shift exponents must be <= 0 and can only come from the
    // (i, l + r_i) leg of A_{i, top - r_i}^{-1}.
    std::vector<std::pair<int, int>> peel;  // (node, count)
    for (auto& en : q.entries()) {
      if (en.shift != top) continue;
      if (en.exp > 0) return std::nullopt;
      peel.emplace_back(en.node, -en.exp);
    }
    for (auto& [node, count] : peel) {
      v.add(node, top - cd.r(node), count);
      q = q.times(a_monomial(cd, node, top - cd.r(node)).power(count));
    }
  }
  return v;
}

}  // namespace qchar
