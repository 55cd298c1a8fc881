#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace qchar {

/* Sparse Laurent polynomial in one variable with integer coefficients.
 * Used both for the quantized Cartan matrix (variable z) and for
 * t-coefficients of deformed characters (variable t). Canonical form:
 * no zero coefficients stored. */
class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(long long constant) {
    if (constant != 0) coeff_[0] = constant;
  }
  static LaurentPoly monomial(int exp, long long c = 1) {
    LaurentPoly p;
    if (c != 0) p.coeff_[exp] = c;
    return p;
  }

  bool is_zero() const { return coeff_.empty(); }
  bool is_one() const {
    return coeff_.size() == 1 && coeff_.begin()->first == 0 &&
           coeff_.begin()->second == 1;
  }
  bool is_constant() const {
    return coeff_.empty() ||
           (coeff_.size() == 1 && coeff_.begin()->first == 0);
  }
  long long constant_value() const {
    if (coeff_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("LaurentPoly: not a constant");
    return coeff_.begin()->second;
  }

  long long coeff(int exp) const {
    auto it = coeff_.find(exp);
    return it == coeff_.end() ? 0 : it->second;
  }
  const std::map<int, long long>& terms() const { return coeff_; }
  int min_exp() const { return coeff_.begin()->first; }
  int max_exp() const { return coeff_.rbegin()->first; }

  void add_term(int exp, long long c) {
    if (c == 0) return;
    auto it = coeff_.find(exp);
    if (it == coeff_.end()) {
      coeff_[exp] = c;
    } else if ((it->second += c) == 0) {
      coeff_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.coeff_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.coeff_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [ea, ca] : a.coeff_)
      for (auto& [eb, cb] : b.coeff_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly operator-() const {
    LaurentPoly r;
    for (auto& [e, c] : coeff_) r.coeff_[e] = -c;
    return r;
  }
  /* Multiply by the monomial t^exp. */
  LaurentPoly shifted(int exp) const {
    LaurentPoly r;
    for (auto& [e, c] : coeff_) r.coeff_[e + exp] = c;
    return r;
  }
  /* Substitute the variable by its inverse. */
  LaurentPoly reversed() const {
    LaurentPoly r;
    for (auto& [e, c] : coeff_) r.coeff_[-e] = c;
    return r;
  }

  /* Exact division; throws if the remainder is nonzero. Division happens in
   * the ordinary polynomial ring after clearing denominators. */
  LaurentPoly divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    if (is_zero()) return LaurentPoly();
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const int dlead = d.max_exp();
    const long long dc = d.coeff(dlead);
    while (!rem.is_zero()) {
      const int rlead = rem.max_exp();
      const long long rc = rem.coeff(rlead);
      if (rc % dc != 0) throw std::domain_error("LaurentPoly: inexact division");
      LaurentPoly term = monomial(rlead - dlead, rc / dc);
      quot += term;
      rem -= term * d;
      if (!rem.is_zero() && rem.max_exp() >= rlead)
        throw std::logic_error("LaurentPoly: division failed to reduce");
    }
    return quot;
  }

  long long eval_at_one() const {
    long long s = 0;
    for (auto& [e, c] : coeff_) s += c;
    return s;
  }

  bool operator==(const LaurentPoly& o) const { return coeff_ == o.coeff_; }
  bool operator!=(const LaurentPoly& o) const { return coeff_ != o.coeff_; }
  bool operator<(const LaurentPoly& o) const { return coeff_ < o.coeff_; }

  /* Renders like "(t^{-1}+t)", "t^2", "-3"; variable name supplied by the
   * caller so the same class serves z- and t-polynomials. */
  std::string to_string(const std::string& var = "t") const;

private:
  std::map<int, long long> coeff_;
};

using TPoly = LaurentPoly;

}  // namespace qchar
