#ifndef LSTA_EMPTINESS_HPP
#define LSTA_EMPTINESS_HPP

#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "lsta/gamma.hpp"
#include "lsta/tree.hpp"

namespace lsta {

namespace detail {

/// Rebuilds a tree from a top-down sequence of level steps. Each step lists
/// the states of that level (sorted) and the transition picked for each.
struct LevelStep {
  std::vector<StateId> states;
  std::vector<std::size_t> gamma;
};

inline StateTree build_tree(const Lsta& a, const std::vector<LevelStep>& path, StateId root) {
  std::vector<StateTree> below;
  std::vector<StateId> below_states;
  for (std::size_t d = path.size(); d-- > 0;) {
    const auto& step = path[d];
    std::vector<StateTree> here(step.states.size());
    for (std::size_t i = 0; i < step.states.size(); ++i) {
      const auto& t = a.transitions[step.gamma[i]];
      if (t.is_leaf()) {
        here[i] = make_leaf(t.symbol.value);
        continue;
      }
      auto li = std::lower_bound(below_states.begin(), below_states.end(), t.left) - below_states.begin();
      auto ri = std::lower_bound(below_states.begin(), below_states.end(), t.right) - below_states.begin();
      here[i] = make_node(t.symbol, below[li], below[ri]);
    }
    below = std::move(here);
    below_states = step.states;
  }
  auto i = std::lower_bound(below_states.begin(), below_states.end(), root) - below_states.begin();
  return below[i];
}

inline std::vector<StateId> bottoms(const Lsta& a, const std::vector<std::size_t>& gamma) {
  std::vector<StateId> next;
  for (std::size_t ti : gamma) {
    const auto& t = a.transitions[ti];
    if (t.is_leaf()) continue;
    next.push_back(t.left);
    next.push_back(t.right);
  }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  return next;
}

}  // namespace detail

/// Some tree of L(a), or nothing if the language is empty.
///
/// Breadth-first search over sets of states that must be expanded together
/// on one level; the empty set means every branch has ended in a leaf.
inline std::optional<StateTree> check_nonempty(const Lsta& a) {
  const auto by_top = a.by_top();
  struct Node {
    std::vector<StateId> states;
    long parent;
    std::vector<std::size_t> gamma;  // step taken from parent
  };
  std::vector<Node> nodes;
  std::map<std::vector<StateId>, long> seen;
  std::deque<long> work;
  std::vector<StateId> roots = a.roots;
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (StateId r : roots) {
    std::vector<StateId> s{r};
    if (seen.count(s)) continue;
    seen.emplace(s, static_cast<long>(nodes.size()));
    work.push_back(static_cast<long>(nodes.size()));
    nodes.push_back({s, -1, {}});
  }
  auto always = [](std::size_t, std::size_t) { return true; };
  while (!work.empty()) {
    long cur = work.front();
    work.pop_front();
    long hit = -1;
    std::vector<StateId> cur_states = nodes[cur].states;
    for_each_gamma(a, by_top, cur_states, always, [&](const std::vector<std::size_t>& gamma, const ChoiceSet&) {
      auto next = detail::bottoms(a, gamma);
      if (next.empty()) {
        hit = static_cast<long>(nodes.size());
        nodes.push_back({{}, cur, gamma});
        return false;
      }
      if (seen.count(next)) return true;
      seen.emplace(next, static_cast<long>(nodes.size()));
      work.push_back(static_cast<long>(nodes.size()));
      nodes.push_back({std::move(next), cur, gamma});
      return true;
    });
    if (hit < 0) continue;
    std::vector<detail::LevelStep> path;
    long n = hit;
    while (nodes[n].parent >= 0) {
      long p = nodes[n].parent;
      path.push_back({nodes[p].states, nodes[n].gamma});
      n = p;
    }
    std::reverse(path.begin(), path.end());
    return detail::build_tree(a, path, nodes[n].states.front());
  }
  return std::nullopt;
}

inline bool is_empty(const Lsta& a) { return !check_nonempty(a).has_value(); }

}  // namespace lsta

#endif  // LSTA_EMPTINESS_HPP
