#ifndef LSTA_FORMAT_HPP
#define LSTA_FORMAT_HPP

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

#include "lsta/automaton.hpp"

namespace lsta {

// .lsta text format, one item per line:
//
//   # comment
//   root p q
//   p -> x1 (q, r) {1}
//   q -> x (q, r) {1,2}
//   r -> 1/s2 {1,2}
//
// States are named by identifiers and numbered in order of first appearance.

namespace detail {

inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'' || c == '+' || c == '-' ||
         c == '#' || c == '^';
}

inline bool valid_ident(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!ident_char(c)) return false;
  return true;
}

inline std::string trim_ws(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace detail

inline Lsta parse_lsta(std::string_view text) {
  using K = ParseError::Kind;
  Lsta a;
  std::map<std::string, StateId> ids;
  auto state = [&](const std::string& nm, int line) {
    if (!detail::valid_ident(nm)) throw ParseError(K::Syntax, line, "bad state name '" + nm + "'");
    auto it = ids.find(nm);
    if (it != ids.end()) return it->second;
    StateId q = a.add_state(nm);
    ids.emplace(nm, q);
    return q;
  };
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    // '#' may also occur inside generated state names; a comment starts a line or follows whitespace
    if (hash != std::string::npos && (hash == 0 || std::isspace(static_cast<unsigned char>(raw[hash - 1]))))
      raw.resize(hash);
    std::string s = detail::trim_ws(raw);
    if (s.empty()) continue;
    if (s.rfind("root", 0) == 0 && (s.size() == 4 || std::isspace(static_cast<unsigned char>(s[4])))) {
      std::istringstream ws(s.substr(4));
      std::string nm;
      while (ws >> nm) {
        StateId q = state(nm, line);
        if (std::find(a.roots.begin(), a.roots.end(), q) == a.roots.end()) a.roots.push_back(q);
      }
      continue;
    }
    auto arrow = s.find("->");
    if (arrow == std::string::npos) throw ParseError(K::Syntax, line, "expected 'root' or '->'");
    StateId top = state(detail::trim_ws(s.substr(0, arrow)), line);
    std::string rhs = detail::trim_ws(s.substr(arrow + 2));
    auto lb = rhs.rfind('{');
    auto rb = rhs.rfind('}');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb || rb + 1 != rhs.size())
      throw ParseError(K::Syntax, line, "expected a choice set {..} at the end");
    std::vector<Choice> cs;
    {
      std::string body = rhs.substr(lb + 1, rb - lb - 1);
      std::istringstream cl(body);
      std::string tok;
      while (std::getline(cl, tok, ',')) {
        tok = detail::trim_ws(tok);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9)
          throw ParseError(K::Syntax, line, "bad choice '" + tok + "'");
        cs.push_back(static_cast<Choice>(std::stoul(tok)));
      }
    }
    std::string sym = detail::trim_ws(rhs.substr(0, lb));
    Transition t;
    t.top = top;
    t.choices = make_choices(std::move(cs));
    bool internal = !sym.empty() && sym[0] == 'x';
    if (internal) {
      auto open = sym.find('(');
      auto close = sym.rfind(')');
      auto comma = sym.find(',', open == std::string::npos ? 0 : open);
      if (open == std::string::npos || close == std::string::npos || comma == std::string::npos || comma > close ||
          close + 1 != sym.size())
        throw ParseError(K::Syntax, line, "expected x<i> (left, right)");
      std::string label = detail::trim_ws(sym.substr(0, open));
      if (label == "x") {
        t.symbol = Symbol::any();
      } else {
        std::string digits = label.substr(1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9)
          throw ParseError(K::Syntax, line, "bad symbol '" + label + "'");
        auto idx = std::stoul(digits);
        if (idx == 0) throw ParseError(K::IndexOutOfRange, line, "qubit indices start at 1");
        t.symbol = Symbol::internal(static_cast<std::uint32_t>(idx));
      }
      t.left = state(detail::trim_ws(sym.substr(open + 1, comma - open - 1)), line);
      t.right = state(detail::trim_ws(sym.substr(comma + 1, close - comma - 1)), line);
    } else {
      try {
        t.symbol = Symbol::leaf(AlgebraicComplex::parse(sym));
      } catch (const Error& e) {
        throw ParseError(K::Syntax, line, e.what());
      }
    }
    a.add(std::move(t));
  }
  auto issues = validate(a);
  if (!issues.empty()) throw ParseError(K::Validation, 0, issues.front());
  return a;
}

inline std::string serialize_lsta(const Lsta& a) {
  // keep the names only if they survive a reparse unchanged
  std::set<std::string> seen;
  bool named = true;
  for (StateId q = 0; q < a.state_count && named; ++q) {
    std::string n = a.name(q);
    named = detail::valid_ident(n) && seen.insert(n).second;
  }
  auto nm = [&](StateId q) { return named ? a.name(q) : "q" + std::to_string(q); };
  std::ostringstream out;
  out << "root";
  for (StateId r : a.roots) out << ' ' << nm(r);
  out << '\n';
  for (const auto& t : a.transitions) {
    out << nm(t.top) << " -> " << t.symbol.str();
    if (!t.is_leaf()) out << " (" << nm(t.left) << ", " << nm(t.right) << ")";
    out << " {";
    for (std::size_t i = 0; i < t.choices.size(); ++i) out << (i ? "," : "") << t.choices[i];
    out << "}\n";
  }
  return out.str();
}

}  // namespace lsta

#endif  // LSTA_FORMAT_HPP
