#ifndef LSTA_GATES_HPP
#define LSTA_GATES_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "lsta/operations.hpp"

namespace lsta {

/// A single-qubit gate on `target`, optionally controlled by `controls`.
struct GateOp {
  enum class Kind { X, Diagonal, Single };

  Kind kind = Kind::Single;
  GateMatrix u = gates::identity();
  std::uint32_t target = 1;
  std::vector<std::uint32_t> controls;  // sorted
  std::string name;                     // qasm mnemonic of the core gate
  long long angle = 0;                  // n for rotations by n*pi/4

  static GateOp make(std::string name, GateMatrix u, std::uint32_t target,
                     std::vector<std::uint32_t> controls = {}, long long angle = 0) {
    GateOp g;
    g.u = std::move(u);
    if (g.u == gates::x()) {
      g.kind = Kind::X;
    } else if (g.u.is_diagonal()) {
      g.kind = Kind::Diagonal;
    } else {
      g.kind = Kind::Single;
    }
    g.target = target;
    std::sort(controls.begin(), controls.end());
    g.controls = std::move(controls);
    g.name = std::move(name);
    g.angle = angle;
    return g;
  }

  std::uint32_t max_qubit() const {
    std::uint32_t m = target;
    for (auto c : controls) m = std::max(m, c);
    return m;
  }

  friend bool operator==(const GateOp& a, const GateOp& b) {
    return a.kind == b.kind && a.u == b.u && a.target == b.target && a.controls == b.controls;
  }
  friend bool operator!=(const GateOp& a, const GateOp& b) { return !(a == b); }
};

namespace detail {

/// Throws NeedsUnfold if a parameterized symbol can be read on one of the
/// first `levels` levels.
inline void require_indexed(const Lsta& a, std::uint32_t levels) {
  const auto by_top = a.by_top();
  std::vector<StateId> cur(a.roots.begin(), a.roots.end());
  std::sort(cur.begin(), cur.end());
  cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
  for (std::uint32_t d = 0; d < levels && !cur.empty(); ++d) {
    std::vector<StateId> next;
    for (StateId q : cur)
      for (std::size_t ti : by_top[q]) {
        const auto& t = a.transitions[ti];
        if (t.symbol.kind == Symbol::Kind::Any)
          throw NeedsUnfold("level " + std::to_string(d + 1) + " uses the parameterized symbol x; unfold first");
        if (t.is_leaf()) continue;
        next.push_back(t.left);
        next.push_back(t.right);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
  }
}

struct ProductTag {
  StateId left;
  StateId right;
  bool is_r;  // false: L, true: R
};

/// Result of the product construction; states >= first_product carry their
/// (left, right, tag) origin in `products`.
struct SingleApplied {
  Lsta aut;
  std::size_t first_product = 0;
  std::vector<ProductTag> products;
};

/// Product states pair the two subtrees below an x_t node; the L copy
/// combines leaves with the first matrix row, the R copy with the second.
inline SingleApplied apply_single_impl(const Lsta& a, std::uint32_t t, const GateMatrix& u) {
  SingleApplied out;
  Lsta& r = out.aut;
  r.state_count = a.state_count;
  r.names = a.names;
  r.roots = a.roots;
  out.first_product = a.state_count;
  std::map<std::tuple<StateId, StateId, bool>, StateId> ids;
  std::deque<StateId> work;
  auto product = [&](StateId l, StateId rr, bool is_r) {
    auto [it, fresh] = ids.emplace(std::make_tuple(l, rr, is_r), static_cast<StateId>(r.state_count));
    if (fresh) {
      std::string nm;
      if (!a.names.empty()) nm = short_name("(" + a.name(l) + "," + a.name(rr) + (is_r ? ",R)" : ",L)"));
      r.add_state(nm);
      out.products.push_back({l, rr, is_r});
      work.push_back(it->second);
    }
    return it->second;
  };
  for (const auto& tr : a.transitions) {
    if (tr.symbol.kind != Symbol::Kind::Internal || tr.symbol.index > t) continue;
    if (tr.symbol.index < t) {
      r.add(tr);
      continue;
    }
    r.add(Transition::internal(tr.top, tr.symbol, product(tr.left, tr.right, false), product(tr.left, tr.right, true),
                               tr.choices));
  }
  const auto by_top = a.by_top();
  while (!work.empty()) {
    StateId p = work.front();
    work.pop_front();
    const ProductTag tag = out.products[p - out.first_product];
    for (std::size_t i : by_top[tag.left])
      for (std::size_t j : by_top[tag.right]) {
        const auto& x = a.transitions[i];
        const auto& y = a.transitions[j];
        if (x.is_leaf() != y.is_leaf()) continue;
        if (!x.is_leaf() && x.symbol != y.symbol) continue;
        ChoiceSet c = intersect(x.choices, y.choices);
        if (c.empty()) continue;
        if (x.is_leaf()) {
          const auto& va = x.symbol.value;
          const auto& vb = y.symbol.value;
          AlgebraicComplex v = tag.is_r ? u[2] * va + u[3] * vb : u[0] * va + u[1] * vb;
          r.add(Transition::leaf(p, std::move(v), std::move(c)));
        } else {
          StateId l = product(x.left, y.left, tag.is_r);
          StateId rr = product(x.right, y.right, tag.is_r);
          r.add(Transition::internal(p, x.symbol, l, rr, std::move(c)));
        }
      }
  }
  return out;
}

}  // namespace detail

/// X on qubit t: swaps the children of every x_t transition.
inline Lsta apply_x(const Lsta& a, std::uint32_t t) {
  detail::require_indexed(a, t);
  Lsta r = a;
  for (auto& tr : r.transitions)
    if (tr.symbol.is_internal(t)) std::swap(tr.left, tr.right);
  return r;
}

/// diag(r0, r1) on qubit t. States q+|a| form a copy whose leaves are
/// scaled by r1; the originals' leaves are scaled by r0, and x_t
/// transitions send their right child into the copy.
inline Lsta apply_diag(const Lsta& a, std::uint32_t t, const AlgebraicComplex& r0, const AlgebraicComplex& r1) {
  detail::require_indexed(a, t);
  const auto n = static_cast<StateId>(a.state_count);
  Lsta r;
  r.state_count = 2 * a.state_count;
  if (!a.names.empty()) {
    r.names = a.names;
    for (StateId q = 0; q < n; ++q) r.names.push_back(a.name(q) + "'");
  }
  r.roots = a.roots;
  for (const auto& tr : a.transitions) {
    Transition o = tr;
    if (o.is_leaf()) {
      o.symbol.value = o.symbol.value * r0;
    } else if (o.symbol.is_internal(t)) {
      o.right += n;
    }
    r.add(std::move(o));
  }
  for (const auto& tr : a.transitions) {
    Transition p = tr;
    p.top += n;
    if (p.is_leaf()) {
      p.symbol.value = p.symbol.value * r1;
    } else {
      p.left += n;
      p.right += n;
    }
    r.add(std::move(p));
  }
  return r;
}

/// Arbitrary 2x2 matrix on qubit t by the product construction.
inline Lsta apply_single(const Lsta& a, std::uint32_t t, const GateMatrix& u) {
  detail::require_indexed(a, t);
  return detail::apply_single_impl(a, t, u).aut;
}

namespace detail {

// Uncontrolled application; states 0..|a|-1 keep their transitions above t.
inline Lsta apply_core(const Lsta& a, std::uint32_t t, const GateMatrix& u) {
  if (u == gates::x()) return apply_x(a, t);
  if (u.is_diagonal()) return apply_diag(a, t, u[0], u[3]);
  if (u.is_antidiagonal()) return apply_x(apply_diag(a, t, u[2], u[1]), t);  // U = X * diag(u3, u2)
  return apply_single(a, t, u);
}

}  // namespace detail

/// U on qubit t controlled by every qubit in `controls` being 1.
///
/// The gate is applied everywhere first; then each x_c transition has its
/// 0-branch redirected into a fresh copy of `a`. Above t that copy state is
/// the original left child; below t it is the L or R component of the
/// product the 0-branch points to.
inline Lsta apply_controlled(const Lsta& a, const std::vector<std::uint32_t>& controls, std::uint32_t t,
                             const GateMatrix& u) {
  if (controls.empty()) throw InvalidArgument("controlled gate without controls");
  for (std::size_t i = 0; i < controls.size(); ++i) {
    if (controls[i] == t) throw InvalidArgument("control and target coincide");
    if (controls[i] == 0 || t == 0) throw InvalidArgument("qubit indices start at 1");
    for (std::size_t j = i + 1; j < controls.size(); ++j)
      if (controls[i] == controls[j]) throw InvalidArgument("repeated control qubit");
  }
  std::uint32_t top = t;
  bool below = false;
  for (auto c : controls) {
    top = std::max(top, c);
    below = below || c > t;
  }
  detail::require_indexed(a, top);

  Lsta r;
  std::vector<detail::ProductTag> products;
  const auto n = static_cast<StateId>(a.state_count);
  if (below) {
    auto s = detail::apply_single_impl(a, t, u);
    r = std::move(s.aut);
    products = std::move(s.products);
  } else {
    r = detail::apply_core(a, t, u);
  }
  const auto m = static_cast<StateId>(r.state_count);
  auto is_control = [&](const Symbol& s) {
    return s.kind == Symbol::Kind::Internal && std::find(controls.begin(), controls.end(), s.index) != controls.end();
  };
  for (auto& tr : r.transitions) {
    if (!is_control(tr.symbol)) continue;
    if (tr.symbol.index < t) {
      if (tr.top < n) tr.left += m;
    } else if (below && tr.top >= n) {
      const auto& p = products[tr.left - n];
      tr.left = (p.is_r ? p.right : p.left) + m;
    }
  }
  if (!a.names.empty() || !r.names.empty()) {
    r.names.resize(m);
    for (StateId q = 0; q < n; ++q) r.names.push_back(a.name(q) + "^c");
  }
  r.state_count += a.state_count;
  for (auto tr : a.transitions) {
    tr.top += m;
    if (!tr.is_leaf()) {
      tr.left += m;
      tr.right += m;
    }
    r.add(std::move(tr));
  }
  return r;
}

/// Applies g, optionally followed by reduce().
inline Lsta apply_gate(const Lsta& a, const GateOp& g, bool then_reduce = true) {
  Lsta r = g.controls.empty() ? detail::apply_core(a, g.target, g.u) : apply_controlled(a, g.controls, g.target, g.u);
  return then_reduce ? reduce(r) : r;
}

}  // namespace lsta

#endif  // LSTA_GATES_HPP
