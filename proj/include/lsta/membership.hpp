#ifndef LSTA_MEMBERSHIP_HPP
#define LSTA_MEMBERSHIP_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lsta/gamma.hpp"
#include "lsta/tree.hpp"

namespace lsta {

struct RunWitness {
  StateTree tree;
  StateId root = 0;
  std::vector<Choice> level_choices;  // one per level, top-down
};

/// Returns an accepting run of `a` on `t`, if any.
///
/// The search goes level by level over the set of (node, state) pairs. Nodes
/// are compared by identity, so shared subtrees keep the sets small.
inline std::optional<RunWitness> accepts(const Lsta& a, const StateTree& t) {
  using Pair = std::pair<const TreeNode*, StateId>;
  using Level = std::vector<Pair>;
  const auto by_top = a.by_top();
  std::set<Level> dead;
  std::vector<Choice> choices;

  auto rec = [&](auto& self, const Level& level) -> bool {
    if (level.empty()) return true;
    if (dead.count(level)) return false;
    std::vector<StateId> states;
    for (const auto& p : level) states.push_back(p.second);
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    std::vector<std::vector<const TreeNode*>> nodes_of(states.size());
    for (const auto& [n, q] : level) {
      auto i = std::lower_bound(states.begin(), states.end(), q) - states.begin();
      nodes_of[i].push_back(n);
    }
    auto allowed = [&](std::size_t i, std::size_t ti) {
      const auto& tr = a.transitions[ti];
      for (const TreeNode* n : nodes_of[i])
        if (n->symbol != tr.symbol) return false;
      return true;
    };
    bool found = false;
    for_each_gamma(a, by_top, states, allowed, [&](const std::vector<std::size_t>& gamma, const ChoiceSet& common) {
      Level next;
      for (const auto& [n, q] : level) {
        auto i = std::lower_bound(states.begin(), states.end(), q) - states.begin();
        const auto& tr = a.transitions[gamma[i]];
        if (tr.is_leaf()) continue;
        next.emplace_back(n->left.get(), tr.left);
        next.emplace_back(n->right.get(), tr.right);
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      choices.push_back(common.front());
      if (self(self, next)) {
        found = true;
        return false;
      }
      choices.pop_back();
      return true;
    });
    if (!found) dead.insert(level);
    return found;
  };

  std::vector<StateId> roots = a.roots;
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (StateId r : roots) {
    choices.clear();
    if (rec(rec, Level{{t.get(), r}})) return RunWitness{t, r, choices};
  }
  return std::nullopt;
}

/// Checks that `w` describes an accepting run: replays it with the recorded
/// level choices and confirms every used transition carries that choice.
inline bool replay(const Lsta& a, const RunWitness& w) {
  if (std::find(a.roots.begin(), a.roots.end(), w.root) == a.roots.end()) return false;
  const auto by_top = a.by_top();
  std::vector<std::pair<const TreeNode*, StateId>> level{{w.tree.get(), w.root}};
  for (std::size_t d = 0; !level.empty(); ++d) {
    if (d >= w.level_choices.size()) return false;
    Choice c = w.level_choices[d];
    std::vector<std::pair<const TreeNode*, StateId>> next;
    for (const auto& [n, q] : level) {
      const Transition* used = nullptr;
      for (std::size_t ti : by_top[q])
        if (contains(a.transitions[ti].choices, c)) used = &a.transitions[ti];
      if (!used || used->symbol != n->symbol) return false;
      if (used->is_leaf()) continue;
      next.emplace_back(n->left.get(), used->left);
      next.emplace_back(n->right.get(), used->right);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return true;
}

/// Accepted trees keyed by their term, so equal trees collapse.
using TreeSet = std::map<std::string, StateTree>;

/// Every accepted tree of height <= max_height.
inline TreeSet enumerate_language(const Lsta& a, std::size_t max_height) {
  const auto by_top = a.by_top();
  // For a sorted state set at a given depth: every tuple of subtrees (one per
  // state) the set can produce together.
  using Tuple = std::vector<StateTree>;
  std::map<std::pair<std::vector<StateId>, std::size_t>, std::vector<Tuple>> memo;

  auto rec = [&](auto& self, const std::vector<StateId>& s, std::size_t depth) -> const std::vector<Tuple>& {
    auto key = std::make_pair(s, depth);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<Tuple> out;
    std::set<std::vector<std::string>> seen;
    auto allowed = [&](std::size_t, std::size_t ti) {
      return depth < max_height || a.transitions[ti].is_leaf();
    };
    for_each_gamma(a, by_top, s, allowed, [&](const std::vector<std::size_t>& gamma, const ChoiceSet&) {
      std::vector<StateId> next;
      for (std::size_t ti : gamma) {
        const auto& tr = a.transitions[ti];
        if (tr.is_leaf()) continue;
        next.push_back(tr.left);
        next.push_back(tr.right);
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      auto emit = [&](const Tuple* below) {
        Tuple tup;
        std::vector<std::string> k;
        for (std::size_t ti : gamma) {
          const auto& tr = a.transitions[ti];
          StateTree t;
          if (tr.is_leaf()) {
            t = make_leaf(tr.symbol.value);
          } else {
            auto li = std::lower_bound(next.begin(), next.end(), tr.left) - next.begin();
            auto ri = std::lower_bound(next.begin(), next.end(), tr.right) - next.begin();
            t = make_node(tr.symbol, (*below)[li], (*below)[ri]);
          }
          k.push_back(to_term(t));
          tup.push_back(std::move(t));
        }
        if (seen.insert(k).second) out.push_back(std::move(tup));
      };
      if (next.empty()) {
        emit(nullptr);
      } else {
        const auto& sub = self(self, next, depth + 1);
        for (const auto& below : sub) emit(&below);
      }
      return true;
    });
    return memo.emplace(key, std::move(out)).first->second;
  };

  TreeSet result;
  for (StateId r : a.roots)
    for (const auto& tup : rec(rec, {r}, 0)) result.emplace(to_term(tup[0]), tup[0]);
  return result;
}

/// Just the terms.
inline std::set<std::string> terms(const TreeSet& s) {
  std::set<std::string> r;
  for (const auto& [k, v] : s) r.insert(k);
  return r;
}

}  // namespace lsta

#endif  // LSTA_MEMBERSHIP_HPP
