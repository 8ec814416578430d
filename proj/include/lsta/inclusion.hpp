#ifndef LSTA_INCLUSION_HPP
#define LSTA_INCLUSION_HPP

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lsta/emptiness.hpp"
#include "lsta/operations.hpp"

namespace lsta {

struct InclusionOptions {
  std::uint64_t budget = 10'000'000;  // visited vertices
};

struct InclusionResult {
  bool included = true;
  std::optional<StateTree> counterexample;  // in L(a) \ L(b) when !included
  std::uint64_t vertices = 0;
};

namespace detail {

// F maps the i-th state of D to the B-states that must accept the same subtree.
using CoverMap = std::vector<std::vector<StateId>>;
using CoverSet = std::vector<CoverMap>;

inline bool pointwise_subset(const CoverMap& f, const CoverMap& g) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!std::includes(g[i].begin(), g[i].end(), f[i].begin(), f[i].end())) return false;
  return true;
}

// Sorted, deduplicated, and without maps that demand more than another one.
inline void normalize(CoverSet& g) {
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<bool> drop(g.size(), false);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (drop[i]) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j && !drop[j] && pointwise_subset(g[i], g[j])) drop[j] = true;
  }
  CoverSet out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!drop[i]) out.push_back(std::move(g[i]));
  g = std::move(out);
}

inline bool all_empty(const CoverMap& f) {
  for (const auto& s : f)
    if (!s.empty()) return false;
  return true;
}

}  // namespace detail

/// Decides L(a) ⊆ L(b) and returns a tree of L(a) \ L(b) otherwise.
///
/// Vertices pair a set D of a-states used on one level with the alternative
/// ways b could still cover them. A vertex whose alternatives are exhausted
/// once every branch of a has ended in a leaf is a counterexample.
inline InclusionResult includes(const Lsta& a_in, const Lsta& b_in, const InclusionOptions& opt = {}) {
  using namespace detail;
  const Lsta a = trim(a_in);
  const Lsta b = trim(b_in);
  const auto ta = a.by_top();
  const auto tb = b.by_top();
  InclusionResult res;

  using Key = std::pair<std::vector<StateId>, CoverSet>;
  struct Node {
    const Key* key;
    long parent;
    std::vector<std::size_t> gamma;
  };
  std::map<Key, long> seen;
  std::vector<Node> nodes;
  std::deque<long> work;

  auto push = [&](std::vector<StateId> d, CoverSet g, long parent, std::vector<std::size_t> gamma) {
    auto [it, fresh] = seen.emplace(Key{std::move(d), std::move(g)}, static_cast<long>(nodes.size()));
    if (!fresh) return;
    if (++res.vertices > opt.budget)
      throw BudgetExhausted("inclusion check exceeded " + std::to_string(opt.budget) + " vertices");
    nodes.push_back({&it->first, parent, std::move(gamma)});
    work.push_back(it->second);
  };

  std::vector<StateId> broots = b.roots;
  std::sort(broots.begin(), broots.end());
  broots.erase(std::unique(broots.begin(), broots.end()), broots.end());
  for (StateId q : a.roots) {
    CoverSet g;
    for (StateId r : broots) g.push_back(CoverMap{{r}});
    push({q}, std::move(g), -1, {});
  }

  auto always = [](std::size_t, std::size_t) { return true; };
  long hit = -1;
  std::vector<std::size_t> hit_gamma;

  while (!work.empty() && hit < 0) {
    long cur = work.front();
    work.pop_front();
    const auto& d = nodes[cur].key->first;
    const auto& g = nodes[cur].key->second;

    for_each_gamma(a, ta, d, always, [&](const std::vector<std::size_t>& ga, const ChoiceSet&) {
      std::vector<StateId> e = bottoms(a, ga);
      auto pos = [&](StateId q) { return std::lower_bound(e.begin(), e.end(), q) - e.begin(); };
      CoverSet next;
      bool trivial = false;
      for (const auto& f : g) {
        std::vector<StateId> img;
        for (const auto& s : f) img.insert(img.end(), s.begin(), s.end());
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        // symbol each b-state must read: the one its a-partner reads
        std::vector<const Symbol*> need(img.size(), nullptr);
        bool clash = false;
        for (std::size_t i = 0; i < d.size() && !clash; ++i)
          for (StateId r : f[i]) {
            auto j = std::lower_bound(img.begin(), img.end(), r) - img.begin();
            const Symbol* s = &a.transitions[ga[i]].symbol;
            if (need[j] && *need[j] != *s) {
              clash = true;
              break;
            }
            need[j] = s;
          }
        if (clash) continue;
        auto match = [&](std::size_t j, std::size_t tbi) { return b.transitions[tbi].symbol == *need[j]; };
        for_each_gamma(b, tb, img, match, [&](const std::vector<std::size_t>& gb, const ChoiceSet&) {
          CoverMap h(e.size());
          for (std::size_t i = 0; i < d.size(); ++i) {
            const auto& ta_i = a.transitions[ga[i]];
            if (ta_i.is_leaf()) continue;
            auto li = pos(ta_i.left), ri = pos(ta_i.right);
            for (StateId r : f[i]) {
              auto j = std::lower_bound(img.begin(), img.end(), r) - img.begin();
              const auto& tb_j = b.transitions[gb[j]];
              h[li].push_back(tb_j.left);
              h[ri].push_back(tb_j.right);
            }
          }
          for (auto& s : h) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
          }
          if (all_empty(h)) {
            trivial = true;
            return false;
          }
          next.push_back(std::move(h));
          return true;
        });
        if (trivial) break;
      }
      // b can follow a from here whatever a does below
      if (trivial) return true;
      if (e.empty()) {
        hit = cur;
        hit_gamma = ga;
        return false;
      }
      normalize(next);
      push(std::move(e), std::move(next), cur, ga);
      return true;
    });
  }

  if (hit < 0) return res;
  std::vector<LevelStep> path{{nodes[hit].key->first, hit_gamma}};
  for (long n = hit; nodes[n].parent >= 0; n = nodes[n].parent)
    path.push_back({nodes[nodes[n].parent].key->first, nodes[n].gamma});
  std::reverse(path.begin(), path.end());
  res.included = false;
  res.counterexample = build_tree(a, path, path.front().states.front());
  return res;
}

}  // namespace lsta

#endif  // LSTA_INCLUSION_HPP
