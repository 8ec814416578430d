#ifndef LSTA_QASM_HPP
#define LSTA_QASM_HPP

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lsta/gates.hpp"
#include "lsta/param_gates.hpp"

namespace lsta {

struct Circuit {
  std::uint32_t qubits = 0;
  std::vector<GateOp> gates;

  friend bool operator==(const Circuit& a, const Circuit& b) { return a.qubits == b.qubits && a.gates == b.gates; }
};

struct ParamCircuit {
  std::vector<ParamGateOp> gates;
};

namespace qasm_detail {

using K = ParseError::Kind;

inline std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

inline std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline bool all_digits(const std::string& s) {
  return !s.empty() && s.size() <= 9 && s.find_first_not_of("0123456789") == std::string::npos;
}

/// Angle expression to n with angle = n*pi/4. Accepted: 0, [-][k*]pi[/d].
inline long long parse_angle(const std::string& raw, int line) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "0" || s == "-0") return 0;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  long long num = 1, den = 1;
  auto pi = s.find("pi");
  if (pi == std::string::npos) throw ParseError(K::UnsupportedAngle, line, "angle '" + raw + "' is not a multiple of pi/4");
  std::string before = s.substr(0, pi), after = s.substr(pi + 2);
  if (!before.empty()) {
    if (before.back() != '*' || !all_digits(before.substr(0, before.size() - 1)))
      throw ParseError(K::UnsupportedAngle, line, "angle '" + raw + "' is not of the form k*pi/d");
    num = std::stoll(before.substr(0, before.size() - 1));
  }
  if (!after.empty()) {
    if (after[0] != '/' || !all_digits(after.substr(1)))
      throw ParseError(K::UnsupportedAngle, line, "angle '" + raw + "' is not of the form k*pi/d");
    den = std::stoll(after.substr(1));
  }
  try {
    long long n = quarter_pi_multiple(num, den);
    return neg ? -n : n;
  } catch (const UnsupportedAngle& e) {
    throw ParseError(K::UnsupportedAngle, line, e.what());
  }
}

inline std::string angle_text(long long n) {
  if (n == 0) return "0";
  long long g = std::gcd(n < 0 ? -n : n, 4LL);
  long long num = n / g, den = 4 / g;
  std::string s = num < 0 ? "-" : "";
  long long a = num < 0 ? -num : num;
  if (a != 1) s += std::to_string(a) + "*";
  s += "pi";
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

struct Named {
  const char* name;
  GateMatrix (*make)();
};

inline const std::vector<Named>& fixed_gates() {
  static const std::vector<Named> table{{"x", gates::x},     {"y", gates::y}, {"z", gates::z},
                                        {"h", gates::h},     {"s", gates::s}, {"sdg", gates::sdg},
                                        {"t", gates::t},     {"tdg", gates::tdg}};
  return table;
}

inline const char* dagger_name(const std::string& n) {
  if (n == "s") return "sdg";
  if (n == "sdg") return "s";
  if (n == "t") return "tdg";
  if (n == "tdg") return "t";
  return nullptr;
}

}  // namespace qasm_detail

/// Parses the OpenQASM 2.0 subset. q[i] is qubit i+1.
inline Circuit parse_qasm(std::string_view text) {
  using namespace qasm_detail;
  Circuit c;
  bool have_reg = false;
  std::string reg;

  // split into statements, dropping // comments, remembering start lines
  std::vector<std::pair<std::string, int>> stmts;
  {
    std::string cur;
    int line = 1, start = 1;
    bool in_comment = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char ch = text[i];
      if (ch == '\n') {
        ++line;
        in_comment = false;
        cur += ' ';
        continue;
      }
      if (in_comment) continue;
      if (ch == '/' && i + 1 < text.size() && text[i + 1] == '/') {
        in_comment = true;
        continue;
      }
      if (ch == ';') {
        stmts.emplace_back(strip(cur), start);
        cur.clear();
        continue;
      }
      if (strip(cur).empty() && !std::isspace(static_cast<unsigned char>(ch))) start = line;
      cur += ch;
    }
    if (!strip(cur).empty()) throw ParseError(K::Syntax, start, "missing ';'");
  }

  auto operand = [&](const std::string& s, int line) -> std::uint32_t {
    std::string t = strip(s);
    auto lb = t.find('['), rb = t.find(']');
    if (lb == std::string::npos || rb == std::string::npos || rb != t.size() - 1)
      throw ParseError(K::Syntax, line, "expected q[i], got '" + t + "'");
    if (!have_reg) throw ParseError(K::Syntax, line, "qreg must be declared before use");
    if (strip(t.substr(0, lb)) != reg) throw ParseError(K::Syntax, line, "unknown register '" + t.substr(0, lb) + "'");
    std::string idx = strip(t.substr(lb + 1, rb - lb - 1));
    if (!all_digits(idx)) throw ParseError(K::Syntax, line, "bad index '" + idx + "'");
    auto i = std::stoul(idx);
    if (i >= c.qubits)
      throw ParseError(K::IndexOutOfRange, line, "qubit index " + idx + " out of range for " + std::to_string(c.qubits));
    return static_cast<std::uint32_t>(i + 1);
  };

  bool seen_header = false;
  for (const auto& [st, line] : stmts) {
    if (st.empty()) continue;
    std::size_t p = 0;
    while (p < st.size() && (std::isalnum(static_cast<unsigned char>(st[p])) || st[p] == '_')) ++p;
    std::string head = st.substr(0, p);
    std::string rest = strip(st.substr(p));
    if (head == "OPENQASM") {
      if (rest != "2.0") throw ParseError(K::Syntax, line, "only OPENQASM 2.0 is supported");
      seen_header = true;
      continue;
    }
    if (!seen_header) throw ParseError(K::Syntax, line, "missing 'OPENQASM 2.0;' header");
    if (head == "include") {
      if (rest != "\"qelib1.inc\"") throw ParseError(K::UnsupportedOperation, line, "only qelib1.inc may be included");
      continue;
    }
    if (head == "qreg") {
      if (have_reg) throw ParseError(K::UnsupportedOperation, line, "only one qreg is supported");
      auto lb = rest.find('['), rb = rest.find(']');
      if (lb == std::string::npos || rb == std::string::npos || rb != rest.size() - 1)
        throw ParseError(K::Syntax, line, "expected qreg name[size]");
      reg = strip(rest.substr(0, lb));
      std::string n = strip(rest.substr(lb + 1, rb - lb - 1));
      if (!all_digits(n) || std::stoul(n) == 0) throw ParseError(K::Syntax, line, "bad register size");
      c.qubits = static_cast<std::uint32_t>(std::stoul(n));
      have_reg = true;
      continue;
    }
    if (head == "creg" || head == "barrier") continue;  // no effect on the quantum state
    if (head == "measure" || head == "reset" || head == "if" || head == "gate" || head == "opaque")
      throw ParseError(K::UnsupportedOperation, line, "'" + head + "' is not supported");

    std::string name = lower(head);
    {
      static const char* known[] = {"x", "y", "z", "h", "s", "sdg", "t", "tdg", "rx", "rz", "cx", "cz", "ccx", "cnx", "swap"};
      if (std::find(std::begin(known), std::end(known), name) == std::end(known))
        throw ParseError(K::UnsupportedGate, line, "unsupported gate '" + head + "'");
    }
    long long angle = 0;
    bool has_angle = false;
    if (!rest.empty() && rest[0] == '(') {
      auto close = rest.find(')');
      if (close == std::string::npos) throw ParseError(K::Syntax, line, "unbalanced parenthesis");
      angle = parse_angle(rest.substr(1, close - 1), line);
      has_angle = true;
      rest = strip(rest.substr(close + 1));
    }
    std::vector<std::uint32_t> qs;
    {
      std::istringstream ops(rest);
      std::string tok;
      while (std::getline(ops, tok, ',')) qs.push_back(operand(tok, line));
    }
    for (std::size_t i = 0; i < qs.size(); ++i)
      for (std::size_t j = i + 1; j < qs.size(); ++j)
        if (qs[i] == qs[j]) throw ParseError(K::Syntax, line, "repeated qubit operand");
    auto arity = [&](std::size_t n) {
      if (qs.size() != n)
        throw ParseError(K::Syntax, line, "'" + name + "' takes " + std::to_string(n) + " qubit operand(s)");
    };
    auto no_angle = [&] {
      if (has_angle) throw ParseError(K::Syntax, line, "'" + name + "' takes no parameter");
    };

    bool done = false;
    for (const auto& g : fixed_gates()) {
      if (name != g.name) continue;
      no_angle();
      arity(1);
      c.gates.push_back(GateOp::make(name, g.make(), qs[0]));
      done = true;
    }
    if (done) continue;
    if (name == "rx" || name == "rz") {
      if (!has_angle) throw ParseError(K::Syntax, line, "'" + name + "' needs an angle");
      arity(1);
      c.gates.push_back(GateOp::make(name, name == "rx" ? gates::rx(angle) : gates::rz(angle), qs[0], {}, angle));
    } else if (name == "cx" || name == "cz") {
      no_angle();
      arity(2);
      c.gates.push_back(GateOp::make(name == "cx" ? "x" : "z", name == "cx" ? gates::x() : gates::z(), qs[1], {qs[0]}));
    } else if (name == "ccx") {
      no_angle();
      arity(3);
      c.gates.push_back(GateOp::make("x", gates::x(), qs[2], {qs[0], qs[1]}));
    } else if (name == "cnx") {
      no_angle();
      if (qs.size() < 2) throw ParseError(K::Syntax, line, "'cnx' needs at least one control and a target");
      std::vector<std::uint32_t> ctl(qs.begin(), qs.end() - 1);
      c.gates.push_back(GateOp::make("x", gates::x(), qs.back(), ctl));
    } else if (name == "swap") {
      no_angle();
      arity(2);
      c.gates.push_back(GateOp::make("x", gates::x(), qs[1], {qs[0]}));
      c.gates.push_back(GateOp::make("x", gates::x(), qs[0], {qs[1]}));
      c.gates.push_back(GateOp::make("x", gates::x(), qs[1], {qs[0]}));
    } else {
      throw ParseError(K::UnsupportedGate, line, "unsupported gate '" + head + "'");
    }
  }
  if (!have_reg && !stmts.empty() && seen_header) throw ParseError(K::Syntax, 0, "no qreg declared");
  if (!seen_header) throw ParseError(K::Syntax, 1, "missing 'OPENQASM 2.0;' header");
  return c;
}

/// Name of the core gate as a qasm mnemonic, recovering it from the matrix
/// when the gate was built without one.
inline std::string gate_mnemonic(const GateOp& g) {
  using namespace qasm_detail;
  if (g.name == "rx" || g.name == "rz") return g.name + "(" + angle_text(g.angle) + ")";
  for (const auto& n : fixed_gates())
    if (g.u == n.make()) return n.name;
  for (long long k = -7; k <= 8; ++k) {
    if (g.u == gates::rz(k)) return "rz(" + angle_text(k) + ")";
    if (g.u == gates::rx(k)) return "rx(" + angle_text(k) + ")";
  }
  throw InvalidArgument("gate matrix has no qasm name");
}

inline std::string serialize_qasm(const Circuit& c) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.qubits << "];\n";
  auto q = [](std::uint32_t i) { return "q[" + std::to_string(i - 1) + "]"; };
  for (const auto& g : c.gates) {
    std::string m = gate_mnemonic(g);
    if (g.controls.empty()) {
      out << m << ' ' << q(g.target) << ";\n";
      continue;
    }
    if (m == "z" && g.controls.size() == 1) {
      out << "cz " << q(g.controls[0]) << ',' << q(g.target) << ";\n";
      continue;
    }
    if (m != "x") throw InvalidArgument("controlled '" + m + "' has no qasm form");
    const char* head = g.controls.size() == 1 ? "cx" : g.controls.size() == 2 ? "ccx" : "cnx";
    out << head << ' ';
    for (auto ctl : g.controls) out << q(ctl) << ',';
    out << q(g.target) << ";\n";
  }
  return out.str();
}

/// The inverse circuit: reversed order, every gate conjugate-transposed.
inline Circuit dagger(const Circuit& c) {
  Circuit r;
  r.qubits = c.qubits;
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    GateOp g = *it;
    g.u = g.u.dagger();
    if (auto n = qasm_detail::dagger_name(g.name)) g.name = n;
    g.angle = -g.angle;
    r.gates.push_back(std::move(g));
  }
  return r;
}

inline Circuit concat(const Circuit& a, const Circuit& b) {
  Circuit r = a;
  r.qubits = std::max(a.qubits, b.qubits);
  r.gates.insert(r.gates.end(), b.gates.begin(), b.gates.end());
  return r;
}

// Parameterized circuits, one directive per line:
//
//   H 1            gate on qubit 1 (any fixed top index; unfold, apply, fold)
//   RX_FIRST n     rotation by n*pi/4 on the first qubit (RX, RZ, PH)
//   H_LAST         gate on the last qubit; rotations take n as well
//   CXN, CXNINV, XALL, ALTCNOT even|odd, PHALL N m
//
// Single-qubit gate names: X Y Z H S SDG T TDG; rotations RX RZ PH.

namespace qasm_detail {

inline bool single_gate(const std::string& name, GateMatrix& u) {
  for (const auto& g : fixed_gates())
    if (name == g.name) {
      u = g.make();
      return true;
    }
  return false;
}

inline bool rotation(const std::string& name, long long n, GateMatrix& u) {
  if (name == "rx") {
    u = gates::rx(n);
  } else if (name == "rz") {
    u = gates::rz(n);
  } else if (name == "ph") {
    u = gates::ph(n);
  } else {
    return false;
  }
  return true;
}

inline long long parse_int(const std::string& s, int line) {
  std::string t = s;
  bool neg = !t.empty() && t[0] == '-';
  if (neg || (!t.empty() && t[0] == '+')) t = t.substr(1);
  if (!all_digits(t)) throw ParseError(K::Syntax, line, "expected an integer, got '" + s + "'");
  long long v = std::stoll(t);
  return neg ? -v : v;
}

}  // namespace qasm_detail

inline ParamCircuit parse_pqasm(std::string_view text) {
  using namespace qasm_detail;
  ParamCircuit c;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    std::istringstream ws(raw);
    std::vector<std::string> tok;
    for (std::string t; ws >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    ParamGateOp g;
    g.text = strip(raw);
    std::string d = lower(tok[0]);
    auto args = [&](std::size_t n) {
      if (tok.size() != n + 1)
        throw ParseError(K::Syntax, line, "'" + tok[0] + "' takes " + std::to_string(n) + " argument(s)");
    };
    using PK = ParamGateOp::Kind;
    if (d == "cxn" || d == "cxninv" || d == "xall") {
      args(0);
      g.kind = d == "cxn" ? PK::CXn : d == "cxninv" ? PK::CXnInv : PK::XAll;
    } else if (d == "altcnot") {
      args(1);
      std::string p = lower(tok[1]);
      if (p != "even" && p != "odd") throw ParseError(K::Syntax, line, "ALTCNOT takes even or odd");
      g.kind = PK::AltCnot;
      g.odd = p == "odd";
    } else if (d == "phall") {
      args(2);
      g.kind = PK::PhaseAll;
      long long n = parse_int(tok[1], line);
      if (n <= 0 || 16 % n != 0) throw ParseError(K::UnsupportedOperation, line, "PHALL: N must divide 16");
      g.n = static_cast<unsigned>(n);
      g.m = parse_int(tok[2], line);
    } else {
      std::string base = d;
      enum { At, First, Last } where = At;
      if (d.size() > 6 && d.substr(d.size() - 6) == "_first") {
        base = d.substr(0, d.size() - 6);
        where = First;
      } else if (d.size() > 5 && d.substr(d.size() - 5) == "_last") {
        base = d.substr(0, d.size() - 5);
        where = Last;
      }
      std::size_t pos = 1;
      if (where == At) {
        if (tok.size() < 2) throw ParseError(K::Syntax, line, "'" + tok[0] + "' needs a qubit index");
        long long t = parse_int(tok[1], line);
        if (t <= 0) throw ParseError(K::IndexOutOfRange, line, "qubit indices start at 1");
        g.target = static_cast<std::uint32_t>(t);
        pos = 2;
      }
      if (single_gate(base, g.u)) {
        if (tok.size() != pos) throw ParseError(K::Syntax, line, "too many arguments");
      } else if (tok.size() == pos + 1 && rotation(base, parse_int(tok[pos], line), g.u)) {
      } else if (base == "rx" || base == "rz" || base == "ph") {
        throw ParseError(K::Syntax, line, "'" + tok[0] + "' needs the rotation n (angle n*pi/4)");
      } else {
        throw ParseError(K::UnsupportedGate, line, "unknown directive '" + tok[0] + "'");
      }
      g.kind = where == Last ? PK::SingleLast : PK::SingleAt;
      if (where == First) g.target = 1;
    }
    c.gates.push_back(std::move(g));
  }
  return c;
}

}  // namespace lsta

#endif  // LSTA_QASM_HPP
