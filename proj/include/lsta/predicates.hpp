#ifndef LSTA_PREDICATES_HPP
#define LSTA_PREDICATES_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsta/operations.hpp"

namespace lsta::predicates {

/// Sets of basis states with one amplitude per state, given as an automaton
/// over bit strings: step(level, s, bit) gives the next state or nothing,
/// leaf(s) the amplitude at the end. One path state per level reads the
/// bits (choice 1 for 0, choice 2 for 1); the zero subtrees beside it accept
/// any choice.
struct PathSpec {
  std::uint32_t n = 1;
  int start = 0;
  std::function<std::optional<int>(std::uint32_t level, int s, int bit)> step;
  std::function<std::optional<AlgebraicComplex>(int s)> leaf;
};

inline Lsta build_paths(const PathSpec& spec) {
  if (spec.n == 0) throw InvalidArgument("need at least one qubit");
  Lsta a;
  const std::uint32_t n = spec.n;
  std::map<std::pair<std::uint32_t, int>, StateId> path;
  std::map<std::uint32_t, StateId> zero;
  std::vector<std::pair<std::uint32_t, int>> work;
  auto path_state = [&](std::uint32_t level, int s) {
    auto [it, fresh] = path.emplace(std::make_pair(level, s), 0);
    if (fresh) {
      it->second = a.add_state("p" + std::to_string(level) + "_" + std::to_string(s));
      work.emplace_back(level, s);
    }
    return it->second;
  };
  auto zero_state = [&](std::uint32_t level) -> StateId {
    auto [it, fresh] = zero.emplace(level, 0);
    if (fresh) it->second = a.add_state("z" + std::to_string(level));
    return it->second;
  };
  a.roots.push_back(path_state(1, spec.start));
  while (!work.empty()) {
    auto [level, s] = work.back();
    work.pop_back();
    StateId q = path.at({level, s});
    if (level > n) {
      if (auto v = spec.leaf(s)) a.add(Transition::leaf(q, *v, {1, 2}));
      continue;
    }
    for (int bit = 0; bit < 2; ++bit) {
      auto nx = spec.step(level, s, bit);
      if (!nx) continue;
      StateId p = path_state(level + 1, *nx);
      StateId z = zero_state(level + 1);
      if (bit == 0) {
        a.add(Transition::internal(q, Symbol::internal(level), p, z, {1}));
      } else {
        a.add(Transition::internal(q, Symbol::internal(level), z, p, {2}));
      }
    }
  }
  for (std::uint32_t level = 2; level <= n + 1; ++level) {
    auto it = zero.find(level);
    if (it == zero.end()) continue;
    if (level > n) {
      a.add(Transition::leaf(it->second, 0, {1, 2}));
    } else {
      StateId below = zero_state(level + 1);
      a.add(Transition::internal(it->second, Symbol::internal(level), below, below, {1, 2}));
    }
  }
  return trim(a);
}

/// Every computational basis state |x>, x in {0,1}^n.
inline Lsta basis_all(std::uint32_t n) {
  return build_paths({n, 0, [](std::uint32_t, int, int) { return std::optional<int>(0); },
                      [](int) { return std::optional<AlgebraicComplex>(1); }});
}

/// The single basis state |bits>, bits[0] being qubit 1.
inline Lsta basis_single(const std::vector<int>& bits) {
  return build_paths({static_cast<std::uint32_t>(bits.size()), 0,
                      [bits](std::uint32_t level, int, int b) -> std::optional<int> {
                        if (bits[level - 1] != b) return std::nullopt;
                        return 0;
                      },
                      [](int) { return std::optional<AlgebraicComplex>(1); }});
}

/// {(-1)^{|x|} |x>}: the image of all basis states under Z on every qubit.
inline Lsta parity_phase(std::uint32_t n) {
  return build_paths({n, 0, [](std::uint32_t, int s, int b) { return std::optional<int>(s ^ b); },
                      [](int s) { return std::optional<AlgebraicComplex>(s ? -1 : 1); }});
}

// Bernstein-Vazirani layout: s1 w1 s2 w2 ... sn wn anc.

/// {|s1 0 s2 0 ... sn 0 1>}
inline Lsta bv_pre(std::uint32_t n) {
  const std::uint32_t last = 2 * n + 1;
  return build_paths({last, 0,
                      [last](std::uint32_t level, int, int b) -> std::optional<int> {
                        if (level == last) return b == 1 ? std::optional<int>(0) : std::nullopt;
                        if (level % 2 == 0) return b == 0 ? std::optional<int>(0) : std::nullopt;
                        return 0;
                      },
                      [](int) { return std::optional<AlgebraicComplex>(1); }});
}

/// {|s1 s1 s2 s2 ... sn sn 1>}
inline Lsta bv_post(std::uint32_t n) {
  const std::uint32_t last = 2 * n + 1;
  return build_paths({last, 0,
                      [last](std::uint32_t level, int s, int b) -> std::optional<int> {
                        if (level == last) return b == 1 ? std::optional<int>(0) : std::nullopt;
                        if (level % 2 == 0) return b == s ? std::optional<int>(0) : std::nullopt;
                        return b;
                      },
                      [](int) { return std::optional<AlgebraicComplex>(1); }});
}

// Multi-control Toffoli layout for n controls: c1 c2 a1 c3 a2 ... cn a(n-1) t,
// 2n qubits.

enum class McRole { Control, Ancilla, Target };

inline McRole mc_role(std::uint32_t n, std::uint32_t pos) {
  if (pos == 2 * n) return McRole::Target;
  if (pos <= 2) return McRole::Control;
  return pos % 2 == 1 ? McRole::Ancilla : McRole::Control;
}

inline std::uint32_t mc_control(std::uint32_t j) { return j == 1 ? 1 : 2 * (j - 1); }
inline std::uint32_t mc_ancilla(std::uint32_t j) { return 2 * j + 1; }

namespace detail {

inline Lsta mc_toffoli(std::uint32_t n, int k, bool post) {
  if (n < 2) throw InvalidArgument("multi-control Toffoli needs at least 2 controls");
  if (k != 0 && k != 1) throw InvalidArgument("target value must be 0 or 1");
  // state: 1 while every control read so far is 1
  return build_paths({2 * n, 1,
                      [n, k, post](std::uint32_t level, int s, int b) -> std::optional<int> {
                        switch (mc_role(n, level)) {
                          case McRole::Control:
                            return s & b;
                          case McRole::Ancilla:
                            return b == 0 ? std::optional<int>(s) : std::nullopt;
                          case McRole::Target:
                            break;
                        }
                        int want = post ? (k ^ s) : k;
                        return b == want ? std::optional<int>(0) : std::nullopt;
                      },
                      [](int) { return std::optional<AlgebraicComplex>(1); }});
}

}  // namespace detail

inline Lsta mc_toffoli_pre(std::uint32_t n, int k) { return detail::mc_toffoli(n, k, false); }
inline Lsta mc_toffoli_post(std::uint32_t n, int k) { return detail::mc_toffoli(n, k, true); }

/// The four Bell states.
inline Lsta bell() {
  Lsta a;
  StateId p = a.add_state("p"), qp = a.add_state("q+"), qm = a.add_state("q+-");
  StateId rp = a.add_state("r+"), r0 = a.add_state("r0"), rm = a.add_state("r+-");
  auto h = AlgebraicComplex::inv_sqrt2();
  a.roots = {p};
  a.add(Transition::internal(p, Symbol::internal(1), qp, qm, {1}));
  a.add(Transition::internal(qp, Symbol::internal(2), rp, r0, {1}));
  a.add(Transition::internal(qp, Symbol::internal(2), r0, rp, {2}));
  a.add(Transition::internal(qm, Symbol::internal(2), r0, rm, {1}));
  a.add(Transition::internal(qm, Symbol::internal(2), rm, r0, {2}));
  a.add(Transition::leaf(rp, h, {1, 2}));
  a.add(Transition::leaf(r0, 0, {1, 2}));
  a.add(Transition::leaf(rm, h, {1}));
  a.add(Transition::leaf(rm, -h, {2}));
  return a;
}

/// The GHZ state (|0^n> + |1^n>)/sqrt2.
inline Lsta ghz_fixed(std::uint32_t n) {
  if (n == 0) throw InvalidArgument("need at least one qubit");
  Lsta a;
  auto h = AlgebraicComplex::inv_sqrt2();
  std::vector<StateId> P(n + 2), Q(n + 2), Z(n + 2);
  StateId g = a.add_state("g");
  for (std::uint32_t i = 2; i <= n + 1; ++i) {
    P[i] = a.add_state("p" + std::to_string(i));
    Q[i] = a.add_state("q" + std::to_string(i));
    Z[i] = a.add_state("z" + std::to_string(i));
  }
  a.roots = {g};
  a.add(Transition::internal(g, Symbol::internal(1), P[2], Q[2], {1}));
  for (std::uint32_t i = 2; i <= n; ++i) {
    a.add(Transition::internal(P[i], Symbol::internal(i), P[i + 1], Z[i + 1], {1}));
    a.add(Transition::internal(Q[i], Symbol::internal(i), Z[i + 1], Q[i + 1], {1}));
    a.add(Transition::internal(Z[i], Symbol::internal(i), Z[i + 1], Z[i + 1], {1}));
  }
  a.add(Transition::leaf(P[n + 1], h, {1}));
  a.add(Transition::leaf(Q[n + 1], h, {1}));
  a.add(Transition::leaf(Z[n + 1], 0, {1}));
  return trim(a);
}

/// {(|0 b2..bn> +- |1 ~b2..~bn>)/sqrt2}: every state GHZ preparation reaches
/// from a basis state. 5n-1 transitions.
inline Lsta ghz_all_fixed(std::uint32_t n) {
  if (n == 0) throw InvalidArgument("need at least one qubit");
  Lsta a;
  auto h = AlgebraicComplex::inv_sqrt2();
  std::vector<StateId> A(n + 2), B(n + 2), Z(n + 2);
  StateId p = a.add_state("p");
  for (std::uint32_t i = 2; i <= n + 1; ++i) {
    A[i] = a.add_state("a" + std::to_string(i));
    B[i] = a.add_state("b" + std::to_string(i));
    if (i >= 3) Z[i] = a.add_state("z" + std::to_string(i));
  }
  a.roots = {p};
  a.add(Transition::internal(p, Symbol::internal(1), A[2], B[2], {1}));
  for (std::uint32_t i = 2; i <= n; ++i) {
    a.add(Transition::internal(A[i], Symbol::internal(i), A[i + 1], Z[i + 1], {1}));
    a.add(Transition::internal(A[i], Symbol::internal(i), Z[i + 1], A[i + 1], {2}));
    a.add(Transition::internal(B[i], Symbol::internal(i), Z[i + 1], B[i + 1], {1}));
    a.add(Transition::internal(B[i], Symbol::internal(i), B[i + 1], Z[i + 1], {2}));
    if (i >= 3) a.add(Transition::internal(Z[i], Symbol::internal(i), Z[i + 1], Z[i + 1], {1, 2}));
  }
  a.add(Transition::leaf(A[n + 1], h, {1, 2}));
  a.add(Transition::leaf(B[n + 1], h, {1}));
  a.add(Transition::leaf(B[n + 1], -h, {2}));
  if (n >= 2) a.add(Transition::leaf(Z[n + 1], 0, {1, 2}));
  return a;
}

/// {|0^n> | n >= 1}
inline Lsta zeros_param() {
  Lsta a;
  StateId q = a.add_state("q"), z = a.add_state("z"), one = a.add_state("one"), zero = a.add_state("zero");
  a.roots = {q};
  a.add(Transition::internal(q, Symbol::any(), q, z, {1}));
  a.add(Transition::internal(q, Symbol::any(), one, zero, {2}));
  a.add(Transition::internal(z, Symbol::any(), z, z, {1}));
  a.add(Transition::internal(z, Symbol::any(), zero, zero, {2}));
  a.add(Transition::leaf(one, 1, {1}));
  a.add(Transition::leaf(zero, 0, {1}));
  return a;
}

/// {(|0^n> + |1^n>)/sqrt2 | n >= 1}
inline Lsta ghz_param() {
  Lsta a;
  StateId g = a.add_state("g"), p = a.add_state("p"), q = a.add_state("q"), z = a.add_state("z");
  StateId h = a.add_state("h"), zero = a.add_state("zero");
  a.roots = {g};
  a.add(Transition::internal(g, Symbol::any(), p, q, {1}));
  a.add(Transition::internal(g, Symbol::any(), h, h, {2}));
  a.add(Transition::internal(p, Symbol::any(), p, z, {1}));
  a.add(Transition::internal(p, Symbol::any(), h, zero, {2}));
  a.add(Transition::internal(q, Symbol::any(), z, q, {1}));
  a.add(Transition::internal(q, Symbol::any(), zero, h, {2}));
  a.add(Transition::internal(z, Symbol::any(), z, z, {1}));
  a.add(Transition::internal(z, Symbol::any(), zero, zero, {2}));
  a.add(Transition::leaf(h, AlgebraicComplex::inv_sqrt2(), {1}));
  a.add(Transition::leaf(zero, 0, {1}));
  return a;
}

/// {|x> | n >= 1, x in {0,1}^n has an even number of ones}
inline Lsta even_parity_param() {
  Lsta a;
  StateId e = a.add_state("e"), o = a.add_state("o"), z = a.add_state("z");
  StateId one = a.add_state("one"), zero = a.add_state("zero");
  a.roots = {e};
  a.add(Transition::internal(e, Symbol::any(), e, z, {1}));
  a.add(Transition::internal(e, Symbol::any(), z, o, {2}));
  a.add(Transition::internal(e, Symbol::any(), one, zero, {3}));
  a.add(Transition::internal(o, Symbol::any(), o, z, {1}));
  a.add(Transition::internal(o, Symbol::any(), z, e, {2}));
  a.add(Transition::internal(o, Symbol::any(), zero, one, {4}));
  a.add(Transition::internal(z, Symbol::any(), z, z, {1, 2}));
  a.add(Transition::internal(z, Symbol::any(), zero, zero, {3, 4}));
  a.add(Transition::leaf(one, 1, {1}));
  a.add(Transition::leaf(zero, 0, {1}));
  return a;
}

/// The 2^n vectors v_k = sum_{j >= k} |j>, k = 0..2^n-1. They are linearly
/// independent with pairwise different norms, so a unitary mapping the set
/// onto itself is the identity.
inline Lsta eq_vectors(std::uint32_t n) {
  if (n == 0) throw InvalidArgument("need at least one qubit");
  Lsta a;
  std::vector<StateId> M(n + 2), O(n + 2), Z(n + 2);
  for (std::uint32_t i = 1; i <= n + 1; ++i) {
    if (i <= n) M[i] = a.add_state("m" + std::to_string(i));
    if (i >= 2) {
      O[i] = a.add_state("o" + std::to_string(i));
      Z[i] = a.add_state("z" + std::to_string(i));
    }
  }
  const ChoiceSet all{1, 2, 3, 4};
  a.roots = {M[1]};
  for (std::uint32_t i = 1; i <= n; ++i) {
    auto x = Symbol::internal(i);
    if (i < n) {
      a.add(Transition::internal(M[i], x, Z[i + 1], M[i + 1], {1}));
      a.add(Transition::internal(M[i], x, M[i + 1], O[i + 1], {2}));
    }
    a.add(Transition::internal(M[i], x, Z[i + 1], O[i + 1], {3}));
    if (i == 1) a.add(Transition::internal(M[1], x, O[2], O[2], {4}));
    if (i >= 2) {
      a.add(Transition::internal(O[i], x, O[i + 1], O[i + 1], all));
      a.add(Transition::internal(Z[i], x, Z[i + 1], Z[i + 1], all));
    }
  }
  a.add(Transition::leaf(O[n + 1], 1, all));
  a.add(Transition::leaf(Z[n + 1], 0, all));
  return a;
}

/// All perfect trees over x and one leaf value (1): a language no
/// classical tree automaton accepts.
inline Lsta perfect_trees() {
  Lsta a;
  StateId p = a.add_state("p"), q = a.add_state("q");
  a.roots = {p};
  a.add(Transition::internal(p, Symbol::any(), q, q, {1}));
  a.add(Transition::internal(q, Symbol::any(), q, q, {1}));
  a.add(Transition::leaf(q, 1, {2}));
  return a;
}

}  // namespace lsta::predicates

#endif  // LSTA_PREDICATES_HPP
