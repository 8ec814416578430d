#ifndef LSTA_TREE_HPP
#define LSTA_TREE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lsta/automaton.hpp"

namespace lsta {

struct TreeNode;

/// Immutable binary tree; subtrees may be shared, so large trees are DAGs.
using StateTree = std::shared_ptr<const TreeNode>;

struct TreeNode {
  Symbol symbol;
  StateTree left;
  StateTree right;

  bool is_leaf() const { return symbol.is_leaf(); }
};

inline StateTree make_leaf(AlgebraicComplex v) {
  return std::make_shared<const TreeNode>(TreeNode{Symbol::leaf(std::move(v)), nullptr, nullptr});
}

inline StateTree make_node(Symbol s, StateTree l, StateTree r) {
  return std::make_shared<const TreeNode>(TreeNode{std::move(s), std::move(l), std::move(r)});
}

inline StateTree make_node(std::uint32_t index, StateTree l, StateTree r) {
  return make_node(Symbol::internal(index), std::move(l), std::move(r));
}

inline std::size_t height(const StateTree& t) {
  std::unordered_map<const TreeNode*, std::size_t> memo;
  auto go = [&](auto& self, const TreeNode* n) -> std::size_t {
    if (n->is_leaf()) return 0;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::size_t h = 1 + std::max(self(self, n->left.get()), self(self, n->right.get()));
    memo.emplace(n, h);
    return h;
  };
  return go(go, t.get());
}

/// Number of nodes of the unfolded tree, saturating at `cap`.
inline std::uint64_t expanded_size(const StateTree& t, std::uint64_t cap = UINT64_MAX / 4) {
  std::unordered_map<const TreeNode*, std::uint64_t> memo;
  auto go = [&](auto& self, const TreeNode* n) -> std::uint64_t {
    if (n->is_leaf()) return 1;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::uint64_t s = 1 + self(self, n->left.get()) + self(self, n->right.get());
    if (s > cap) s = cap;
    memo.emplace(n, s);
    return s;
  };
  return go(go, t.get());
}

/// Term syntax, e.g. x1(x2(0,1/s2), x2(1/s2,0)).
inline std::string to_term(const StateTree& t) {
  if (t->is_leaf()) return t->symbol.value.str();
  std::string l = to_term(t->left);
  std::string r = to_term(t->right);
  bool low = t->left->is_leaf() && t->right->is_leaf();
  return t->symbol.str() + "(" + l + (low ? "," : ", ") + r + ")";
}

/// One line per distinct node, bottom-up; the last line names the root.
inline std::string to_dag_text(const StateTree& t) {
  std::unordered_map<const TreeNode*, std::size_t> ids;
  std::string out;
  auto go = [&](auto& self, const TreeNode* n) -> std::size_t {
    auto it = ids.find(n);
    if (it != ids.end()) return it->second;
    std::string body;
    if (n->is_leaf()) {
      body = n->symbol.value.str();
    } else {
      std::size_t l = self(self, n->left.get());
      std::size_t r = self(self, n->right.get());
      body = n->symbol.str() + "(n" + std::to_string(l) + ", n" + std::to_string(r) + ")";
    }
    std::size_t id = ids.size();
    ids.emplace(n, id);
    out += "n" + std::to_string(id) + " = " + body + "\n";
    return id;
  };
  std::size_t root = go(go, t.get());
  out += "root n" + std::to_string(root) + "\n";
  return out;
}

/// Term syntax when the unfolded tree is small, DAG listing otherwise.
inline std::string to_text(const StateTree& t, std::uint64_t max_nodes = 1023) {
  if (expanded_size(t, max_nodes + 1) <= max_nodes) return to_term(t);
  return to_dag_text(t);
}

inline bool tree_equal(const StateTree& a, const StateTree& b) {
  std::map<std::pair<const TreeNode*, const TreeNode*>, bool> memo;
  auto go = [&](auto& self, const TreeNode* x, const TreeNode* y) -> bool {
    if (x == y) return true;
    if (x->symbol != y->symbol) return false;
    if (x->is_leaf()) return true;
    auto key = std::make_pair(x, y);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool r = self(self, x->left.get(), y->left.get()) && self(self, x->right.get(), y->right.get());
    memo.emplace(key, r);
    return r;
  };
  return go(go, a.get(), b.get());
}

/// All leaves at depth n and level d labeled x_{d+1}: an n-qubit state.
inline bool is_quantum_state(const StateTree& t, std::size_t n) {
  std::unordered_map<const TreeNode*, bool> ok;
  auto go = [&](auto& self, const TreeNode* x, std::size_t d) -> bool {
    if (x->is_leaf()) return d == n;
    if (d >= n || !x->symbol.is_internal(static_cast<std::uint32_t>(d + 1))) return false;
    auto it = ok.find(x);
    if (it != ok.end()) return it->second;
    bool r = self(self, x->left.get(), d + 1) && self(self, x->right.get(), d + 1);
    ok.emplace(x, r);
    return r;
  };
  return go(go, t.get(), 0);
}

/// Leaves of a perfect tree, left to right. Qubit 1 is the most significant
/// bit of the basis index.
inline std::vector<AlgebraicComplex> to_vector(const StateTree& t) {
  std::vector<AlgebraicComplex> v;
  auto go = [&](auto& self, const TreeNode* x) -> void {
    if (x->is_leaf()) {
      v.push_back(x->symbol.value);
      return;
    }
    self(self, x->left.get());
    self(self, x->right.get());
  };
  go(go, t.get());
  return v;
}

/// Perfect tree over x_first.. with the given leaves (size must be a power of two).
inline StateTree from_vector(const std::vector<AlgebraicComplex>& v, std::uint32_t first = 1) {
  auto go = [&](auto& self, std::size_t lo, std::size_t len, std::uint32_t level) -> StateTree {
    if (len == 1) return make_leaf(v[lo]);
    std::size_t h = len / 2;
    return make_node(level, self(self, lo, h, level + 1), self(self, lo + h, h, level + 1));
  };
  return go(go, 0, v.size(), first);
}

/// Tree with InternalAny labels and the given leaves (parameterized families).
inline StateTree from_vector_any(const std::vector<AlgebraicComplex>& v) {
  auto go = [&](auto& self, std::size_t lo, std::size_t len) -> StateTree {
    if (len == 1) return make_leaf(v[lo]);
    std::size_t h = len / 2;
    return make_node(Symbol::any(), self(self, lo, h), self(self, lo + h, h));
  };
  return go(go, 0, v.size());
}

/// Sum of |leaf|^2 over the unfolded tree, exact.
inline AlgebraicComplex norm2(const StateTree& t) {
  AlgebraicComplex s;
  for (const auto& x : to_vector(t)) s += x * x.conjugate();
  return s;
}

}  // namespace lsta

#endif  // LSTA_TREE_HPP
