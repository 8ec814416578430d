#ifndef LSTA_BENCHMARKS_HPP
#define LSTA_BENCHMARKS_HPP

#include <random>
#include <string>
#include <vector>

#include "lsta/predicates.hpp"
#include "lsta/qasm.hpp"

namespace lsta::bench {

struct Problem {
  Lsta pre;
  Circuit circuit;
  Lsta post;
};

struct ParamProblem {
  Lsta pre;
  ParamCircuit circuit;
  Lsta post;
};

inline GateOp h(std::uint32_t q) { return GateOp::make("h", gates::h(), q); }
inline GateOp x(std::uint32_t q) { return GateOp::make("x", gates::x(), q); }
inline GateOp cx(std::uint32_t c, std::uint32_t t) { return GateOp::make("x", gates::x(), t, {c}); }
inline GateOp ccx(std::uint32_t c1, std::uint32_t c2, std::uint32_t t) {
  return GateOp::make("x", gates::x(), t, {c1, c2});
}

/// H on qubit 1, then CX(i, i+1) down the register.
inline Circuit ghz_circuit(std::uint32_t n) {
  Circuit c{n, {h(1)}};
  for (std::uint32_t i = 1; i < n; ++i) c.gates.push_back(cx(i, i + 1));
  return c;
}

/// |0^n> to the GHZ state.
inline Problem ghz_single(std::uint32_t n) {
  return {predicates::basis_single(std::vector<int>(n, 0)), ghz_circuit(n), predicates::ghz_fixed(n)};
}

/// Every basis state through the GHZ circuit.
inline Problem ghz_all(std::uint32_t n) { return {predicates::basis_all(n), ghz_circuit(n), predicates::ghz_all_fixed(n)}; }

inline Problem bell() { return {predicates::basis_all(2), ghz_circuit(2), predicates::bell()}; }

/// Bernstein-Vazirani with the secret in the odd qubits: s1 w1 .. sn wn anc.
inline Problem bv(std::uint32_t n) {
  const std::uint32_t anc = 2 * n + 1;
  Circuit c{anc, {}};
  for (std::uint32_t i = 1; i <= n; ++i) c.gates.push_back(h(2 * i));
  c.gates.push_back(h(anc));
  for (std::uint32_t i = 1; i <= n; ++i) c.gates.push_back(ccx(2 * i - 1, 2 * i, anc));
  for (std::uint32_t i = 1; i <= n; ++i) c.gates.push_back(h(2 * i));
  c.gates.push_back(h(anc));
  return {predicates::bv_pre(n), c, predicates::bv_post(n)};
}

/// n-control Toffoli from standard Toffoli gates and n-1 ancillas.
inline Circuit mc_toffoli_circuit(std::uint32_t n) {
  using predicates::mc_ancilla;
  using predicates::mc_control;
  Circuit c{2 * n, {}};
  std::vector<GateOp> up;
  up.push_back(ccx(mc_control(1), mc_control(2), mc_ancilla(1)));
  for (std::uint32_t j = 2; j <= n - 1; ++j) up.push_back(ccx(mc_ancilla(j - 1), mc_control(j + 1), mc_ancilla(j)));
  c.gates = up;
  c.gates.push_back(cx(mc_ancilla(n - 1), 2 * n));
  for (auto it = up.rbegin(); it != up.rend(); ++it) c.gates.push_back(*it);
  return c;
}

inline Problem mc_toffoli(std::uint32_t n, int k) {
  return {predicates::mc_toffoli_pre(n, k), mc_toffoli_circuit(n), predicates::mc_toffoli_post(n, k)};
}

/// H twice on every qubit.
inline Problem h2(std::uint32_t n) {
  Circuit c{n, {}};
  for (std::uint32_t q = 1; q <= n; ++q) {
    c.gates.push_back(h(q));
    c.gates.push_back(h(q));
  }
  return {predicates::basis_all(n), c, predicates::basis_all(n)};
}

/// H X H (= Z) on every qubit.
inline Problem hxh(std::uint32_t n) {
  Circuit c{n, {}};
  for (std::uint32_t q = 1; q <= n; ++q) {
    c.gates.push_back(h(q));
    c.gates.push_back(x(q));
    c.gates.push_back(h(q));
  }
  return {predicates::basis_all(n), c, predicates::parity_phase(n)};
}

inline const char* param_ghz_text() { return "H 1\nCXN\n"; }

/// exp(-i t Z..Z) style diagonal evolution with a = b = -pi/2, t = 1: on the
/// even-parity inputs it only contributes a global phase of 1.
inline const char* hamiltonian_text() { return "PH_FIRST -2\nCXN\nRZ_LAST -4\nCXNINV\n"; }

/// Single fermionic excitation between the first and last qubit, theta = pi/2.
inline const char* fermion_single_text() {
  return "RX_FIRST 2\n"
         "H_LAST\n"
         "CXN\n"
         "RZ_LAST 2\n"
         "CXNINV\n"
         "RX_FIRST -2\n"
         "H_LAST\n"
         "H 1\n"
         "RX_LAST 2\n"
         "CXN\n"
         "RZ_LAST -2\n"
         "CXNINV\n"
         "H 1\n"
         "RX_LAST -2\n";
}

inline ParamProblem param_ghz() {
  return {predicates::zeros_param(), parse_pqasm(param_ghz_text()), predicates::ghz_param()};
}
inline ParamProblem hamiltonian() {
  return {predicates::even_parity_param(), parse_pqasm(hamiltonian_text()), predicates::even_parity_param()};
}
inline ParamProblem fermion_single() {
  return {predicates::zeros_param(), parse_pqasm(fermion_single_text()), predicates::zeros_param()};
}

/// Clifford+T gates on random qubits.
inline Circuit random_clifford_t(std::uint32_t n, std::size_t gates_count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> qubit(1, n);
  std::uniform_int_distribution<int> kind(0, n > 1 ? 7 : 6);
  Circuit c{n, {}};
  for (std::size_t i = 0; i < gates_count; ++i) {
    std::uint32_t q = qubit(rng);
    switch (kind(rng)) {
      case 0:
        c.gates.push_back(h(q));
        break;
      case 1:
        c.gates.push_back(GateOp::make("s", gates::s(), q));
        break;
      case 2:
        c.gates.push_back(GateOp::make("sdg", gates::sdg(), q));
        break;
      case 3:
        c.gates.push_back(GateOp::make("t", gates::t(), q));
        break;
      case 4:
        c.gates.push_back(GateOp::make("tdg", gates::tdg(), q));
        break;
      case 5:
        c.gates.push_back(x(q));
        break;
      case 6:
        c.gates.push_back(GateOp::make("z", gates::z(), q));
        break;
      default: {
        std::uint32_t t = qubit(rng);
        while (t == q) t = qubit(rng);
        c.gates.push_back(cx(q, t));
      }
    }
  }
  return c;
}

enum class Scenario { MissGate, FlipCx };

/// Deterministic in (c, scenario, seed). MissGate drops one gate; FlipCx
/// swaps control and target of one CX.
inline Circuit inject_bug(const Circuit& c, Scenario s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Circuit r = c;
  if (s == Scenario::MissGate) {
    if (c.gates.empty()) throw InvalidArgument("miss-gate needs a non-empty circuit");
    std::uniform_int_distribution<std::size_t> pick(0, c.gates.size() - 1);
    r.gates.erase(r.gates.begin() + static_cast<std::ptrdiff_t>(pick(rng)));
    return r;
  }
  std::vector<std::size_t> cxs;
  for (std::size_t i = 0; i < c.gates.size(); ++i)
    if (c.gates[i].kind == GateOp::Kind::X && c.gates[i].controls.size() == 1) cxs.push_back(i);
  if (cxs.empty()) throw InvalidArgument("flip-cx needs a circuit with a CX gate");
  std::uniform_int_distribution<std::size_t> pick(0, cxs.size() - 1);
  auto& g = r.gates[cxs[pick(rng)]];
  std::swap(g.target, g.controls[0]);
  return r;
}

}  // namespace lsta::bench

#endif  // LSTA_BENCHMARKS_HPP
