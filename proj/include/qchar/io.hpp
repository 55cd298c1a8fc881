#pragma once

#include <string>
#include <vector>

#include "qchar/character.hpp"
#include "qchar/laurent.hpp"
#include "qchar/monomial.hpp"

namespace qchar {

struct TCharacter;  // qt.hpp

/* Appendix-style monomial text: factors Y_{i,l}, Y^{-1}_{i,l}, Y^{e}_{i,l}
 * concatenated without separators, entries in canonical (node, shift) order;
 * the unit monomial renders as "1". */
std::string monomial_to_text(const Monomial& m);
Monomial monomial_from_text(const std::string& s);

/* Machine grammar for CLI input: "Y[i,l]^e * Y[j,k] * ...", or "1". */
Monomial monomial_from_machine(const std::string& s);

std::string tpoly_to_text(const TPoly& p);
TPoly tpoly_from_text(const std::string& s);

/* One numbered line per term, canonical order:
 *   Monomial <k>: (<coeff>) <monomial>
 * preceded by "# truncated" when the character is a window. */
std::string emit_character_text(const Character& ch);
std::string emit_character_json(const CartanData& cd, const Character& ch);
std::string emit_tcharacter_text(const CartanData& cd, const TCharacter& tch);
std::string emit_tcharacter_json(const CartanData& cd, const TCharacter& tch);

/* Character re-loaded from the JSON emission (used by the branch command). */
Character character_from_json(const std::string& text);

/* One entry of the golden appendix listing. */
struct FixtureEntry {
  int rep = 0;
  int index = 0;
  TPoly coeff;
  Monomial monomial;
};

/* Fixture syntax: "rep <k>" section headers followed by
 * "Monomial <index>: (<coeff>) <monomial>" lines; '#' lines are comments.
 * Throws std::runtime_error naming the line on malformed input. */
std::vector<FixtureEntry> parse_fixture(const std::string& text);
std::string emit_fixture(const std::vector<FixtureEntry>& entries);

}  // namespace qchar
