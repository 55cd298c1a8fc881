#pragma once

#include <array>
#include <string>
#include <vector>

#include "qchar/algorithm.hpp"
#include "qchar/character.hpp"
#include "qchar/io.hpp"
#include "qchar/qt.hpp"

namespace qchar {

enum class Verdict { pass, fail, skipped };

std::string verdict_name(Verdict v);

struct CheckReport {
  std::string name;
  std::string target;
  Verdict verdict = Verdict::skipped;
  std::vector<std::string> witnesses;
  std::string note;

  bool ok() const { return verdict != Verdict::fail; }
  static CheckReport passed(std::string name, std::string target,
                            std::string note = "");
  static CheckReport skip(std::string name, std::string target,
                          std::string note);
  void fail_with(const std::string& witness);
};

/* Every term comparable below the head. */
CheckReport check_dominance(const CartanData& cd, const Character& ch);

/* For types A, AffineA, B, C: every u_{j,l} <= 1 and every coefficient 1;
 * other families report skipped. */
CheckReport check_multiplicity_one(const CartanData& cd, const Character& ch);

/* Every non-head term right negative. */
CheckReport check_right_negative(const CartanData& cd, const Character& ch);

/* B_n fundamentals: every j-dominant term has u_j <= 2. */
CheckReport check_bn_bound(const CartanData& cd, const Character& ch);

/* C_n fundamentals: u_n <= 1 on n-dominant terms, u_j <= 2 on j-dominant. */
CheckReport check_cn_bound(const CartanData& cd, const Character& ch);

/* F(Y_{i,l+c}) equals F(Y_{i,l}) with every shift translated by c. */
CheckReport check_shift_equivariance(const CartanData& cd, int i, int l, int c,
                                     const RunLimits& limits = {});

/* Golden comparison against the appendix listing: monomial counts,
 * coefficient sums, and the exact translated set of non-unit-coefficient
 * monomials, each bar-symmetrizing to t + t^{-1} (all others to 1). */
CheckReport check_f4_appendix(const CartanData& cd,
                              const std::array<Character, 4>& classical,
                              const std::array<TCharacter, 4>& deformed,
                              const std::vector<FixtureEntry>& fixture);

/* Positivity, monomial-set match with the classical product, and the t=1
 * specialization identity for one standard-module factor list. */
CheckReport check_qt_standard(const CartanData& cd,
                              const std::vector<std::pair<int, int>>& factors,
                              const RunLimits& limits = {});

std::string render_report_table(const std::vector<CheckReport>& reports);
std::string render_report_json(const std::vector<CheckReport>& reports);

}  // namespace qchar
