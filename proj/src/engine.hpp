#pragma once

// Internal worklist core shared by the classical and t-deformed expansions.
// Heights are processed in nondecreasing order; every monomial of a node-j
// expansion other than its anchor has strictly larger height, so a
// monomial's s-value is final before anything below it is touched.

#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "qchar/algorithm.hpp"
#include "qchar/io.hpp"
#include "qchar/monomial.hpp"

namespace qchar::detail {

/* One term of a node-j kernel-element expansion, relative to its anchor:
 * the added A-inverse steps w (nonempty except for the anchor itself), the
 * Y-expansion of those steps, and the coefficient. */
template <class Coeff>
struct ExpTerm {
  AVector w;
  Monomial w_expanded;
  Coeff coeff;
};

template <class Policy>
struct EngineResult {
  using Coeff = typename Policy::Coeff;
  struct Term {
    AVector v;
    Coeff coeff;
  };
  std::map<Monomial, Term> terms;
  bool truncated = false;
  bool extra_dominant = false;
  bool gauge_fixed = false;
};

/* Policy supplies:
 *   using Coeff;  zero(), one(), is_zero(c), add_to(a,b), mul(a,b), sub(a,b)
 *   const std::vector<ExpTerm<Coeff>>& expansion(int j, const Monomial& slice)
 *   Coeff transport(const Monomial& head, const AVector& pv,
 *                   const Monomial& pv_expanded, const ExpTerm<Coeff>& term,
 *                   const Coeff& packet)
 *   Coeff combine(const Monomial& m,
 *                 const std::vector<std::pair<int, Coeff>>& candidates,
 *                 bool& gauge_fixed)
 */
template <class Policy>
EngineResult<Policy> run_worklist(const CartanData& cd, const Monomial& head,
                                  const RunLimits& lim, Policy& pol) {
  using Coeff = typename Policy::Coeff;
  const int n = cd.n();
  const NodeSet all = NodeSet::all(n);
  if (!is_dominant(head, all))
    throw std::domain_error("worklist: head monomial is not dominant");
  if (cd.affine() && !lim.max_height)
    throw std::invalid_argument(
        "worklist: affine families require an explicit max_height");

  struct Node {
    AVector v;
    bool v_set = false;
    std::map<int, Coeff> sj;
  };
  std::map<long long, std::map<Monomial, Node>> levels;
  levels[0][head].v_set = true;

  EngineResult<Policy> res;
  long long distinct = 1;
  const char* dbg_target = std::getenv("QCHAR_DEBUG_TARGET");

  struct Task {
    const Monomial* m;
    const AVector* v;
    int j;
    Coeff weight;
  };

  while (!levels.empty()) {
    auto lvl = levels.begin();
    const long long h = lvl->first;
    std::vector<Task> tasks;

    for (auto& [m, node] : lvl->second) {
      Coeff s;
      if (is_dominant(m, all)) {
        s = h == 0 ? pol.one() : pol.zero();
        if (h > 0) res.extra_dominant = true;
      } else {
        std::vector<std::pair<int, Coeff>> cands;
        for (int j = 1; j <= n; ++j) {
          if (is_dominant(m, NodeSet::single(j))) continue;
          auto it = node.sj.find(j);
          cands.emplace_back(j, it == node.sj.end() ? pol.zero() : it->second);
        }
        s = pol.combine(m, cands, res.gauge_fixed);
      }
      if (!pol.is_zero(s)) res.terms[m] = {node.v, s};
      for (int j = 1; j <= n; ++j) {
        if (!is_dominant(m, NodeSet::single(j))) continue;
        auto it = node.sj.find(j);
        Coeff w = it == node.sj.end() ? s : pol.sub(s, it->second);
        if (!pol.is_zero(w)) tasks.push_back({&m, &node.v, j, w});
      }
    }

    struct Child {
      Monomial m;
      AVector v;
      long long height;
      int j;
      Coeff contribution;
    };
    std::vector<std::vector<Child>> outputs(tasks.size());
    std::atomic<bool> saw_truncation{false};

    auto run_task = [&](size_t ti) {
      const Task& t = tasks[ti];
      const Monomial slice = truncate(*t.m, NodeSet::single(t.j));
      const auto& exp = pol.expansion(t.j, slice);
      const Monomial pv_expanded =
          t.v->empty() ? Monomial{} : expand_a_inverses(cd, *t.v);
      for (const auto& term : exp) {
        if (term.w.empty()) continue;  // the anchor itself
        long long ch = h + term.w.height();
        if (lim.max_height && ch > *lim.max_height) {
          saw_truncation = true;
          continue;
        }
        Child c;
        c.m = t.m->times(term.w_expanded);
        c.v = t.v->plus(term.w);
        c.height = ch;
        c.j = t.j;
        c.contribution = pol.transport(head, *t.v, pv_expanded, term, t.weight);
        if (dbg_target && monomial_to_text(c.m) == dbg_target) {
          std::ostringstream os;
          os << "  contrib to " << dbg_target << " via j=" << t.j
             << " from " << monomial_to_text(*t.m) << " weight "
             << pol.debug_str(t.weight) << " term "
             << pol.debug_str(term.coeff) << " -> "
             << pol.debug_str(c.contribution);
          fprintf(stderr, "%s\n", os.str().c_str());
        }
        outputs[ti].push_back(std::move(c));
      }
    };

    const int threads = std::max(1, lim.threads);
    if (threads == 1 || tasks.size() <= 1) {
      for (size_t ti = 0; ti < tasks.size(); ++ti) run_task(ti);
    } else {
      std::vector<std::thread> pool;
      std::exception_ptr first_error;
      std::mutex err_mutex;
      std::atomic<size_t> next{0};
      for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&]() {
          for (;;) {
            size_t ti = next.fetch_add(1);
            if (ti >= tasks.size()) return;
            try {
              run_task(ti);
            } catch (...) {
              std::lock_guard<std::mutex> g(err_mutex);
              if (!first_error) first_error = std::current_exception();
              return;
            }
          }
        });
      }
      for (auto& th : pool) th.join();
      if (first_error) std::rethrow_exception(first_error);
    }
    if (saw_truncation) res.truncated = true;

    // Serialized merge in task order; the resulting maps are ordered, so the
    // outcome is identical for every thread count.
    for (auto& out : outputs) {
      for (auto& c : out) {
        auto& node = levels[c.height][c.m];
        if (!node.v_set) {
          node.v = c.v;
          node.v_set = true;
          ++distinct;
          if (lim.max_terms && distinct > *lim.max_terms) {
            std::ostringstream os;
            os << "worklist: monomial budget of " << *lim.max_terms
               << " exceeded at height " << c.height;
            throw BudgetExceeded(os.str());
          }
        } else if (!(node.v == c.v)) {
          throw std::logic_error(
              "worklist: two A-inverse routes disagree on the same monomial");
        }
        auto it = node.sj.find(c.j);
        if (it == node.sj.end())
          node.sj.emplace(c.j, std::move(c.contribution));
        else
          pol.add_to(it->second, c.contribution);
      }
    }

    levels.erase(lvl);
  }
  return res;
}

}  // namespace qchar::detail
