#ifndef LSTA_PARAM_GATES_HPP
#define LSTA_PARAM_GATES_HPP

#include <deque>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lsta/gamma.hpp"
#include "lsta/gates.hpp"

namespace lsta {

namespace detail {

inline void require_parameterized(const Lsta& a, const char* op) {
  for (const auto& t : a.transitions)
    if (t.symbol.kind == Symbol::Kind::Internal)
      throw InvalidArgument(std::string(op) + " needs a fully parameterized automaton (found x" +
                            std::to_string(t.symbol.index) + ")");
}

// k copies of the state space; copy i of q is q + i*|a|.
inline Lsta copies(const Lsta& a, std::size_t k) {
  Lsta r;
  r.state_count = k * a.state_count;
  if (!a.names.empty())
    for (std::size_t i = 0; i < k; ++i)
      for (StateId q = 0; q < a.state_count; ++q) r.names.push_back(a.name(q) + "#" + std::to_string(i));
  return r;
}

inline Lsta staircase(const Lsta& a, bool inverse) {
  const auto n = static_cast<StateId>(a.state_count);
  Lsta r = copies(a, 2);
  r.roots = a.roots;
  for (const auto& t : a.transitions) {
    if (t.is_leaf()) {
      r.add(t);
      r.add(Transition::leaf(t.top + n, t.symbol.value, t.choices));
      continue;
    }
    r.add(Transition::internal(t.top, t.symbol, t.left, t.right + n, t.choices));
    if (inverse) {
      r.add(Transition::internal(t.top + n, t.symbol, t.right + n, t.left, t.choices));
    } else {
      r.add(Transition::internal(t.top + n, t.symbol, t.right, t.left + n, t.choices));
    }
  }
  return r;
}

}  // namespace detail

/// CX(1,2) CX(2,3) ... CX(n-1,n) on every height n. The second copy tracks
/// that the previous output bit was 1.
inline Lsta cx_n(const Lsta& a) {
  detail::require_parameterized(a, "CX(n)");
  return detail::staircase(a, false);
}

/// The inverse staircase; the second copy tracks that the previous input bit was 1.
inline Lsta cx_n_inv(const Lsta& a) {
  detail::require_parameterized(a, "CX(n)^-1");
  return detail::staircase(a, true);
}

/// X on every qubit.
inline Lsta x_all(const Lsta& a) {
  Lsta r = a;
  for (auto& t : r.transitions)
    if (!t.is_leaf()) std::swap(t.left, t.right);
  return r;
}

/// CX(1,2) CX(3,4) ... when odd is false, CX(2,3) CX(4,5) ... when true.
/// Copy 0 reads a control, copy 1 a target left alone, copy 2 a flipped target.
inline Lsta alt_cnot(const Lsta& a, bool odd) {
  detail::require_parameterized(a, "alternating CX");
  const auto n = static_cast<StateId>(a.state_count);
  Lsta r = detail::copies(a, 3);
  for (StateId q : a.roots) r.roots.push_back(q + (odd ? n : 0));
  for (const auto& t : a.transitions) {
    if (t.is_leaf()) {
      for (StateId k = 0; k < 3; ++k) r.add(Transition::leaf(t.top + k * n, t.symbol.value, t.choices));
      continue;
    }
    r.add(Transition::internal(t.top, t.symbol, t.left + n, t.right + 2 * n, t.choices));
    r.add(Transition::internal(t.top + n, t.symbol, t.left, t.right, t.choices));
    r.add(Transition::internal(t.top + 2 * n, t.symbol, t.right, t.left, t.choices));
  }
  return r;
}

/// diag(1, w_N^m) on every qubit, w_N = e^{2 pi i/N}. Copy i counts the
/// ones read so far modulo N.
inline Lsta phase_all(const Lsta& a, unsigned N, long long m) {
  if (N == 0 || 16 % N != 0) throw InvalidArgument("phase_all: N must divide 16");
  detail::require_parameterized(a, "phase_all");
  const auto n = static_cast<StateId>(a.state_count);
  Lsta r = detail::copies(a, N);
  r.roots = a.roots;
  const long long step = 16 / N;
  for (const auto& t : a.transitions)
    for (StateId i = 0; i < N; ++i) {
      if (t.is_leaf()) {
        r.add(Transition::leaf(t.top + i * n, t.symbol.value * AlgebraicComplex::omega(step * i * m), t.choices));
      } else {
        StateId j = (i + 1) % N;
        r.add(Transition::internal(t.top + i * n, t.symbol, t.left + i * n, t.right + j * n, t.choices));
      }
    }
  return r;
}

/// Whether some accepted tree has a leaf at depth < t.
inline bool accepts_shorter_than(const Lsta& a, std::uint32_t t) {
  const auto by_top = a.by_top();
  using Key = std::tuple<std::vector<StateId>, std::uint32_t, bool>;
  std::set<Key> seen;
  std::deque<Key> work;
  for (StateId r : a.roots) {
    Key k{{r}, 0, false};
    if (seen.insert(k).second) work.push_back(k);
  }
  auto always = [](std::size_t, std::size_t) { return true; };
  bool found = false;
  while (!work.empty() && !found) {
    auto [s, depth, flag] = work.front();
    work.pop_front();
    for_each_gamma(a, by_top, s, always, [&](const std::vector<std::size_t>& gamma, const ChoiceSet&) {
      bool f = flag;
      std::vector<StateId> next;
      for (std::size_t ti : gamma) {
        const auto& tr = a.transitions[ti];
        if (tr.is_leaf()) {
          f = f || depth < t;
          continue;
        }
        next.push_back(tr.left);
        next.push_back(tr.right);
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (next.empty()) {
        if (f) found = true;
        return !found;
      }
      Key k{std::move(next), std::min(depth + 1, t), f};
      if (seen.insert(k).second) work.push_back(std::move(k));
      return true;
    });
  }
  return found;
}

/// Gives the first t levels explicit indices x1..xt. Copy i (i = 1..t) of
/// the states reads x_i and continues in copy i+1; copy t continues in the
/// original automaton.
inline Lsta unfold_top(const Lsta& a, std::uint32_t t) {
  detail::require_parameterized(a, "unfold");
  if (t == 0) return a;
  if (accepts_shorter_than(a, t))
    throw NeedsUnfold("cannot unfold " + std::to_string(t) + " levels: the automaton accepts shorter trees");
  const auto n = static_cast<StateId>(a.state_count);
  Lsta r = detail::copies(a, t + 1);
  auto copy = [&](StateId q, std::uint32_t i) { return i > t ? q : q + i * n; };
  for (StateId q : a.roots) r.roots.push_back(copy(q, 1));
  r.transitions = a.transitions;
  for (std::uint32_t i = 1; i <= t; ++i)
    for (const auto& tr : a.transitions) {
      if (tr.is_leaf()) continue;
      r.add(Transition::internal(copy(tr.top, i), Symbol::internal(i), copy(tr.left, i + 1), copy(tr.right, i + 1),
                                 tr.choices));
    }
  return trim(r);
}

/// Erases qubit indices and reduces.
inline Lsta fold(const Lsta& a) {
  Lsta r = a;
  for (auto& t : r.transitions)
    if (t.symbol.kind == Symbol::Kind::Internal) t.symbol = Symbol::any();
  return reduce(r);
}

/// U on the last qubit of every accepted tree. Leaf states (all transitions
/// are leaves) are paired below each transition whose children are both leaf
/// states, as in the single-qubit product construction.
inline Lsta apply_single_last(const Lsta& a, const GateMatrix& u) {
  const auto by_top = a.by_top();
  std::vector<bool> leafy(a.state_count, false);
  for (StateId q = 0; q < a.state_count; ++q) {
    bool has_leaf = false, has_inner = false;
    for (std::size_t ti : by_top[q]) (a.transitions[ti].is_leaf() ? has_leaf : has_inner) = true;
    if (has_leaf && has_inner)
      throw AmbiguousLastLayer("state " + a.name(q) + " has both leaf and internal transitions");
    leafy[q] = has_leaf;
  }
  Lsta r;
  r.state_count = a.state_count;
  r.names = a.names;
  r.roots = a.roots;
  std::map<std::tuple<StateId, StateId, bool>, StateId> ids;
  auto product = [&](StateId l, StateId rr, bool is_r) {
    auto [it, fresh] = ids.emplace(std::make_tuple(l, rr, is_r), static_cast<StateId>(r.state_count));
    if (!fresh) return it->second;
    std::string nm;
    if (!a.names.empty()) nm = "(" + a.name(l) + "," + a.name(rr) + (is_r ? ",R)" : ",L)");
    StateId p = r.add_state(nm);
    for (std::size_t i : by_top[l])
      for (std::size_t j : by_top[rr]) {
        ChoiceSet c = intersect(a.transitions[i].choices, a.transitions[j].choices);
        if (c.empty()) continue;
        const auto& va = a.transitions[i].symbol.value;
        const auto& vb = a.transitions[j].symbol.value;
        r.add(Transition::leaf(p, is_r ? u[2] * va + u[3] * vb : u[0] * va + u[1] * vb, std::move(c)));
      }
    return p;
  };
  for (const auto& t : a.transitions) {
    if (!t.is_leaf() && leafy[t.left] && leafy[t.right]) {
      StateId l = product(t.left, t.right, false);
      StateId rr = product(t.left, t.right, true);
      r.add(Transition::internal(t.top, t.symbol, l, rr, t.choices));
    } else {
      r.add(t);
    }
  }
  return r;
}

/// One directive of a parameterized circuit.
struct ParamGateOp {
  enum class Kind { CXn, CXnInv, XAll, AltCnot, PhaseAll, SingleAt, SingleLast };

  Kind kind = Kind::CXn;
  bool odd = false;          // AltCnot
  unsigned n = 1;            // PhaseAll
  long long m = 0;           // PhaseAll
  std::uint32_t target = 1;  // SingleAt
  GateMatrix u = gates::identity();
  std::string text;  // directive as written

  friend bool operator==(const ParamGateOp& a, const ParamGateOp& b) {
    return a.kind == b.kind && a.odd == b.odd && a.n == b.n && a.m == b.m && a.target == b.target && a.u == b.u;
  }
};

inline Lsta apply_param_gate(const Lsta& a, const ParamGateOp& g, bool then_reduce = true) {
  Lsta r;
  switch (g.kind) {
    case ParamGateOp::Kind::CXn:
      r = cx_n(a);
      break;
    case ParamGateOp::Kind::CXnInv:
      r = cx_n_inv(a);
      break;
    case ParamGateOp::Kind::XAll:
      r = x_all(a);
      break;
    case ParamGateOp::Kind::AltCnot:
      r = alt_cnot(a, g.odd);
      break;
    case ParamGateOp::Kind::PhaseAll:
      r = phase_all(a, g.n, g.m);
      break;
    case ParamGateOp::Kind::SingleAt:
      return fold(apply_gate(unfold_top(a, g.target), GateOp::make("", g.u, g.target), then_reduce));
    case ParamGateOp::Kind::SingleLast:
      r = apply_single_last(a, g.u);
      break;
  }
  return then_reduce ? reduce(r) : trim(r);
}

}  // namespace lsta

#endif  // LSTA_PARAM_GATES_HPP
