#include "qchar/io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qchar/qt.hpp"

namespace qchar {

std::string LaurentPoly::to_string(const std::string& var) const {
  if (coeff_.empty()) return "0";
  auto render = [&](int e, long long c, bool lead) {
    std::ostringstream os;
    if (c < 0) {
      os << "-";
    } else if (!lead) {
      os << "+";
    }
    long long a = c < 0 ? -c : c;
    if (e == 0) {
      os << a;
    } else {
      if (a != 1) os << a;
      os << var;
      if (e != 1) {
        if (e < 0)
          os << "^{" << e << "}";
        else
          os << "^" << e;
      }
    }
    return os.str();
  };
  std::ostringstream os;
  bool lead = true;
  for (auto& [e, c] : coeff_) {
    os << render(e, c, lead);
    lead = false;
  }
  if (coeff_.size() > 1) return "(" + os.str() + ")";
  return os.str();
}

std::string tpoly_to_text(const TPoly& p) { return p.to_string("t"); }

namespace {

struct Scanner {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  long long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == digits)
      throw std::runtime_error("expected integer at '" + s.substr(start) +
                               "'");
    return std::stoll(s.substr(start, pos - start));
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error(what + " at '" + s.substr(pos) + "'");
  }
};

/* Exponent in "^{e}" or "^e" form; 1 when absent. */
int parse_exponent(Scanner& sc) {
  if (!sc.eat('^')) return 1;
  if (sc.eat('{')) {
    int e = static_cast<int>(sc.integer());
    if (!sc.eat('}')) sc.fail("expected '}'");
    return e;
  }
  return static_cast<int>(sc.integer());
}

}  // namespace

std::string monomial_to_text(const Monomial& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  for (auto& en : m.entries()) {
    os << "Y";
    if (en.exp != 1) os << "^{" << en.exp << "}";
    os << "_{" << en.node << "," << en.shift << "}";
  }
  return os.str();
}

Monomial monomial_from_text(const std::string& s) {
  Scanner sc{s};
  Monomial m;
  if (sc.peek() == '1') {
    sc.eat('1');
    if (!sc.done()) sc.fail("trailing input after unit monomial");
    return m;
  }
  while (!sc.done()) {
    if (!sc.eat('Y')) sc.fail("expected 'Y'");
    int e = parse_exponent(sc);
    if (!sc.eat('_')) sc.fail("expected '_'");
    if (!sc.eat('{')) sc.fail("expected '{'");
    int node = static_cast<int>(sc.integer());
    if (!sc.eat(',')) sc.fail("expected ','");
    int shift = static_cast<int>(sc.integer());
    if (!sc.eat('}')) sc.fail("expected '}'");
    if (node < 1) sc.fail("node indices are 1-based");
    m.add(node, shift, e);
  }
  return m;
}

Monomial monomial_from_machine(const std::string& s) {
  Scanner sc{s};
  Monomial m;
  if (sc.peek() == '1') {
    sc.eat('1');
    if (!sc.done()) sc.fail("trailing input after unit monomial");
    return m;
  }
  bool first = true;
  while (!sc.done()) {
    if (!first && !sc.eat('*')) sc.fail("expected '*'");
    if (!sc.eat('Y')) sc.fail("expected 'Y'");
    if (!sc.eat('[')) sc.fail("expected '['");
    int node = static_cast<int>(sc.integer());
    if (!sc.eat(',')) sc.fail("expected ','");
    int shift = static_cast<int>(sc.integer());
    if (!sc.eat(']')) sc.fail("expected ']'");
    int e = parse_exponent(sc);
    if (node < 1) sc.fail("node indices are 1-based");
    m.add(node, shift, e);
    first = false;
  }
  return m;
}

TPoly tpoly_from_text(const std::string& s) {
  Scanner sc{s};
  TPoly p;
  bool parens = sc.eat('(');
  bool first = true;
  for (;;) {
    sc.skip_ws();
    if (sc.done()) break;
    char c = sc.peek();
    if (c == ')') break;
    long long sign = 1;
    if (sc.eat('+')) {
    } else if (sc.eat('-')) {
      sign = -1;
    } else if (!first) {
      sc.fail("expected '+' or '-'");
    }
    long long coeff = 1;
    sc.skip_ws();
    if (sc.pos < s.size() &&
        std::isdigit(static_cast<unsigned char>(s[sc.pos])))
      coeff = sc.integer();
    int exp = 0;
    if (sc.eat('t')) exp = parse_exponent(sc);
    p.add_term(exp, sign * coeff);
    first = false;
  }
  if (parens && !sc.eat(')')) sc.fail("expected ')'");
  if (!sc.done()) sc.fail("trailing input after polynomial");
  return p;
}

std::string emit_character_text(const Character& ch) {
  std::ostringstream os;
  if (ch.truncated) os << "# truncated\n";
  int k = 0;
  for (auto& [m, c] : ch.terms) {
    os << "Monomial " << ++k << ": (" << c << ") " << monomial_to_text(m)
       << "\n";
  }
  return os.str();
}

std::string emit_tcharacter_text(const CartanData& cd, const TCharacter& tch) {
  std::ostringstream os;
  if (tch.truncated) os << "# truncated\n";
  int k = 0;
  for (auto& [m, c] : tch.by_monomial(cd)) {
    os << "Monomial " << ++k << ": (" << tpoly_to_text(c) << ") "
       << monomial_to_text(m) << "\n";
  }
  return os.str();
}

namespace {

nlohmann::ordered_json monomial_json(const Monomial& m) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (auto& en : m.entries())
    a.push_back({en.node, en.shift, en.exp});
  return a;
}

nlohmann::ordered_json tpoly_json(const TPoly& p) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (auto& [e, c] : p.terms()) a.push_back({e, c});
  return a;
}

}  // namespace

std::string emit_character_json(const CartanData& cd, const Character& ch) {
  nlohmann::ordered_json j;
  j["family"] = cd.label();
  j["mode"] = "integer";
  j["truncated"] = ch.truncated;
  if (ch.head) j["head"] = monomial_json(*ch.head);
  auto terms = nlohmann::ordered_json::array();
  for (auto& [m, c] : ch.terms) {
    nlohmann::ordered_json t;
    t["monomial"] = monomial_json(m);
    t["coeff"] = c;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump(2) + "\n";
}

std::string emit_tcharacter_json(const CartanData& cd, const TCharacter& tch) {
  nlohmann::ordered_json j;
  j["family"] = cd.label();
  j["mode"] = "t";
  j["truncated"] = tch.truncated;
  j["head"] = monomial_json(tch.head);
  auto terms = nlohmann::ordered_json::array();
  for (auto& [m, c] : tch.by_monomial(cd)) {
    nlohmann::ordered_json t;
    t["monomial"] = monomial_json(m);
    t["coeff"] = tpoly_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump(2) + "\n";
}

Character character_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  Character ch;
  ch.truncated = j.value("truncated", false);
  if (j.contains("head")) {
    Monomial h;
    for (auto& f : j["head"]) h.add(f[0], f[1], f[2]);
    ch.head = h;
  }
  for (auto& t : j["terms"]) {
    Monomial m;
    for (auto& f : t["monomial"]) m.add(f[0], f[1], f[2]);
    if (!t["coeff"].is_number())
      throw std::runtime_error(
          "character_from_json: expected integer coefficients");
    ch.add_term(m, t["coeff"].get<long long>());
  }
  return ch;
}

std::vector<FixtureEntry> parse_fixture(const std::string& text) {
  std::vector<FixtureEntry> out;
  std::istringstream in(text);
  std::string line;
  int rep = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fail = [&](const std::string& what) {
      std::ostringstream os;
      os << "fixture line " << lineno << ": " << what;
      throw std::runtime_error(os.str());
    };
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    if (line.compare(i, 4, "rep ") == 0) {
      rep = std::stoi(line.substr(i + 4));
      continue;
    }
    if (line.compare(i, 9, "Monomial ") != 0) fail("expected 'Monomial N:'");
    if (rep == 0) fail("entry before any 'rep' header");
    size_t colon = line.find(':', i);
    if (colon == std::string::npos) fail("expected ':'");
    FixtureEntry e;
    e.rep = rep;
    try {
      e.index = std::stoi(line.substr(i + 9, colon - i - 9));
    } catch (const std::exception&) {
      fail("bad monomial index");
    }
    size_t open = line.find('(', colon);
    if (open == std::string::npos) fail("expected '('");
    size_t close = line.find(')', open);
    if (close == std::string::npos) fail("expected ')'");
    try {
      e.coeff = tpoly_from_text(line.substr(open, close - open + 1));
      e.monomial = monomial_from_text(line.substr(close + 1));
    } catch (const std::exception& ex) {
      fail(ex.what());
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string emit_fixture(const std::vector<FixtureEntry>& entries) {
  std::ostringstream os;
  int rep = 0;
  for (auto& e : entries) {
    if (e.rep != rep) {
      rep = e.rep;
      os << "rep " << rep << "\n";
    }
    os << "Monomial " << e.index << ": (" << tpoly_to_text(e.coeff) << ") "
       << monomial_to_text(e.monomial) << "\n";
  }
  return os.str();
}

}  // namespace qchar
