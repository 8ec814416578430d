#ifndef LSTA_OPERATIONS_HPP
#define LSTA_OPERATIONS_HPP

#include <deque>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "lsta/automaton.hpp"

namespace lsta {

/// Disjoint union; b's states are shifted by |a|.
inline Lsta union_of(const Lsta& a, const Lsta& b) {
  Lsta r;
  r.state_count = a.state_count + b.state_count;
  auto off = static_cast<StateId>(a.state_count);
  if (!a.names.empty() || !b.names.empty()) {
    for (StateId q = 0; q < a.state_count; ++q) r.names.push_back(a.name(q));
    for (StateId q = 0; q < b.state_count; ++q) r.names.push_back(b.name(q) + "'");
  }
  r.roots = a.roots;
  for (StateId q : b.roots) r.roots.push_back(q + off);
  r.transitions = a.transitions;
  for (auto t : b.transitions) {
    t.top += off;
    if (!t.is_leaf()) {
      t.left += off;
      t.right += off;
    }
    r.transitions.push_back(std::move(t));
  }
  return r;
}

/// Keeps only the given states (in order), renumbering them 0..; transitions
/// touching a dropped state are dropped.
inline Lsta restrict_states(const Lsta& a, const std::vector<bool>& keep) {
  std::vector<StateId> id(a.state_count, 0);
  Lsta r;
  for (StateId q = 0; q < a.state_count; ++q) {
    if (!keep[q]) continue;
    id[q] = static_cast<StateId>(r.state_count++);
    if (!a.names.empty()) r.names.push_back(a.name(q));
  }
  for (StateId q : a.roots)
    if (keep[q] && std::find(r.roots.begin(), r.roots.end(), id[q]) == r.roots.end()) r.roots.push_back(id[q]);
  for (const auto& t : a.transitions) {
    if (!keep[t.top]) continue;
    if (!t.is_leaf() && (!keep[t.left] || !keep[t.right])) continue;
    Transition u = t;
    u.top = id[t.top];
    if (!t.is_leaf()) {
      u.left = id[t.left];
      u.right = id[t.right];
    }
    r.transitions.push_back(std::move(u));
  }
  return r;
}

/// Removes states that cannot take part in an accepting run: those without a
/// finite derivation (unproductive) and those unreachable from the roots.
inline Lsta trim(const Lsta& a) {
  std::vector<bool> productive(a.state_count, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& t : a.transitions) {
      if (productive[t.top]) continue;
      if (t.is_leaf() || (productive[t.left] && productive[t.right])) {
        productive[t.top] = true;
        changed = true;
      }
    }
  }
  std::vector<bool> reach(a.state_count, false);
  std::vector<StateId> stack;
  for (StateId q : a.roots)
    if (productive[q] && !reach[q]) {
      reach[q] = true;
      stack.push_back(q);
    }
  const auto by_top = a.by_top();
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (std::size_t ti : by_top[q]) {
      const auto& t = a.transitions[ti];
      if (t.is_leaf() || !productive[t.left] || !productive[t.right]) continue;
      for (StateId c : {t.left, t.right})
        if (!reach[c]) {
          reach[c] = true;
          stack.push_back(c);
        }
    }
  }
  return restrict_states(a, reach);
}

namespace detail {

// Merges transitions that differ only in their choice sets.
inline bool merge_transitions(Lsta& a) {
  using Key = std::tuple<StateId, Symbol, StateId, StateId>;
  std::map<Key, std::size_t> slot;
  std::vector<Transition> out;
  bool changed = false;
  for (auto& t : a.transitions) {
    Key k{t.top, t.symbol, t.is_leaf() ? 0 : t.left, t.is_leaf() ? 0 : t.right};
    auto [it, fresh] = slot.emplace(k, out.size());
    if (fresh) {
      out.push_back(std::move(t));
    } else {
      auto& c = out[it->second].choices;
      auto u = unite(c, t.choices);
      if (u != c) c = std::move(u);
      changed = true;
    }
  }
  a.transitions = std::move(out);
  return changed;
}

// Renames states with literally identical transition sets to one representative.
inline bool merge_states(Lsta& a) {
  using Sig = std::vector<std::tuple<Symbol, StateId, StateId, ChoiceSet>>;
  std::vector<Sig> sig(a.state_count);
  for (const auto& t : a.transitions)
    sig[t.top].emplace_back(t.symbol, t.is_leaf() ? 0 : t.left, t.is_leaf() ? 0 : t.right, t.choices);
  std::map<Sig, StateId> rep_of;
  std::vector<StateId> rep(a.state_count);
  bool changed = false;
  for (StateId q = 0; q < a.state_count; ++q) {
    rep[q] = q;
    // states left without transitions are dead and removed by trim
    if (sig[q].empty()) continue;
    std::sort(sig[q].begin(), sig[q].end());
    auto [it, fresh] = rep_of.emplace(std::move(sig[q]), q);
    rep[q] = it->second;
    if (!fresh) changed = true;
  }
  if (!changed) return false;
  std::vector<Transition> out;
  for (auto& t : a.transitions) {
    if (rep[t.top] != t.top) continue;
    if (!t.is_leaf()) {
      t.left = rep[t.left];
      t.right = rep[t.right];
    }
    out.push_back(std::move(t));
  }
  a.transitions = std::move(out);
  std::vector<StateId> roots;
  for (StateId r : a.roots)
    if (std::find(roots.begin(), roots.end(), rep[r]) == roots.end()) roots.push_back(rep[r]);
  a.roots = std::move(roots);
  return true;
}

}  // namespace detail

/// Language-preserving size reduction, applied to a fixpoint.
/// State names are dropped: after a few products they only grow.
inline Lsta reduce(const Lsta& in) {
  Lsta a = trim(in);
  a.names.clear();
  for (;;) {
    bool t = detail::merge_transitions(a);
    bool s = detail::merge_states(a);
    if (!t && !s) break;
  }
  return trim(a);
}

/// Product automaton; choice pairs are numbered by their lexicographic rank
/// among all pairs that occur.
inline Lsta intersection(const Lsta& a, const Lsta& b) {
  const auto ta = a.by_top();
  const auto tb = b.by_top();
  std::map<std::pair<StateId, StateId>, StateId> id;
  std::deque<std::pair<StateId, StateId>> work;
  Lsta r;
  auto get = [&](StateId p, StateId q) {
    auto [it, fresh] = id.emplace(std::make_pair(p, q), static_cast<StateId>(r.state_count));
    if (fresh) {
      r.state_count++;
      if (!a.names.empty() || !b.names.empty()) {
        r.names.resize(r.state_count - 1);
        r.names.push_back(short_name("(" + a.name(p) + "," + b.name(q) + ")"));
      }
      work.emplace_back(p, q);
    }
    return it->second;
  };
  for (StateId p : a.roots)
    for (StateId q : b.roots) {
      StateId s = get(p, q);
      if (std::find(r.roots.begin(), r.roots.end(), s) == r.roots.end()) r.roots.push_back(s);
    }
  std::vector<std::vector<std::pair<Choice, Choice>>> pairs;
  while (!work.empty()) {
    auto [p, q] = work.front();
    work.pop_front();
    StateId top = id.at({p, q});
    for (std::size_t i : ta[p])
      for (std::size_t j : tb[q]) {
        const auto& x = a.transitions[i];
        const auto& y = b.transitions[j];
        if (x.symbol != y.symbol) continue;
        Transition t;
        t.top = top;
        t.symbol = x.symbol;
        if (!x.is_leaf()) {
          t.left = get(x.left, y.left);
          t.right = get(x.right, y.right);
        }
        std::vector<std::pair<Choice, Choice>> cp;
        for (Choice c : x.choices)
          for (Choice d : y.choices) cp.emplace_back(c, d);
        pairs.push_back(std::move(cp));
        r.transitions.push_back(std::move(t));
      }
  }
  std::vector<std::pair<Choice, Choice>> all;
  for (const auto& cp : pairs) all.insert(all.end(), cp.begin(), cp.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (std::size_t k = 0; k < r.transitions.size(); ++k) {
    ChoiceSet cs;
    for (const auto& pr : pairs[k])
      cs.push_back(static_cast<Choice>(std::lower_bound(all.begin(), all.end(), pr) - all.begin()));
    r.transitions[k].choices = make_choices(std::move(cs));
  }
  return r;
}

}  // namespace lsta

#endif  // LSTA_OPERATIONS_HPP
