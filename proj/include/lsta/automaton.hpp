#ifndef LSTA_AUTOMATON_HPP
#define LSTA_AUTOMATON_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lsta/amplitude.hpp"
#include "lsta/errors.hpp"

namespace lsta {

using StateId = std::uint32_t;
using Choice = std::uint32_t;

/// Sorted, duplicate-free.
using ChoiceSet = std::vector<Choice>;

inline ChoiceSet make_choices(std::vector<Choice> c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

inline ChoiceSet intersect(const ChoiceSet& a, const ChoiceSet& b) {
  ChoiceSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline ChoiceSet unite(const ChoiceSet& a, const ChoiceSet& b) {
  ChoiceSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline bool contains(const ChoiceSet& a, Choice c) { return std::binary_search(a.begin(), a.end(), c); }

inline bool disjoint(const ChoiceSet& a, const ChoiceSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

struct Symbol {
  enum class Kind : std::uint8_t { Internal, Any, Leaf };

  Kind kind = Kind::Leaf;
  std::uint32_t index = 0;  // qubit for Internal
  AlgebraicComplex value;   // Leaf only

  static Symbol internal(std::uint32_t i) { return {Kind::Internal, i, {}}; }
  static Symbol any() { return {Kind::Any, 0, {}}; }
  static Symbol leaf(AlgebraicComplex v) { return {Kind::Leaf, 0, std::move(v)}; }

  bool is_leaf() const { return kind == Kind::Leaf; }
  bool is_internal(std::uint32_t i) const { return kind == Kind::Internal && index == i; }

  std::string str() const {
    switch (kind) {
      case Kind::Internal:
        return "x" + std::to_string(index);
      case Kind::Any:
        return "x";
      case Kind::Leaf:
        break;
    }
    return value.str();
  }

  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.kind == b.kind && a.index == b.index && a.value == b.value;
  }
  friend bool operator!=(const Symbol& a, const Symbol& b) { return !(a == b); }
  friend bool operator<(const Symbol& a, const Symbol& b) {
    return std::tie(a.kind, a.index, a.value) < std::tie(b.kind, b.index, b.value);
  }
};

/// q ->C f(left, right), or q ->C leaf (left/right unused).
struct Transition {
  StateId top = 0;
  Symbol symbol;
  StateId left = 0;
  StateId right = 0;
  ChoiceSet choices;

  static Transition internal(StateId top, Symbol sym, StateId l, StateId r, ChoiceSet c) {
    return {top, std::move(sym), l, r, std::move(c)};
  }
  static Transition leaf(StateId top, AlgebraicComplex v, ChoiceSet c) {
    return {top, Symbol::leaf(std::move(v)), 0, 0, std::move(c)};
  }

  bool is_leaf() const { return symbol.is_leaf(); }

  /// Everything but the choices.
  auto shape() const {
    return std::tie(top, symbol, is_leaf() ? zero_ : left, is_leaf() ? zero_ : right);
  }
  friend bool operator==(const Transition& a, const Transition& b) {
    return a.shape() == b.shape() && a.choices == b.choices;
  }
  friend bool operator<(const Transition& a, const Transition& b) {
    if (a.shape() != b.shape()) return a.shape() < b.shape();
    return a.choices < b.choices;
  }

 private:
  static constexpr StateId zero_ = 0;
};

/// States are 0..state_count-1.
struct Lsta {
  std::size_t state_count = 0;
  std::vector<StateId> roots;
  std::vector<Transition> transitions;
  std::vector<std::string> names;  // optional, empty or one per state

  StateId add_state(std::string name = {}) {
    if (!names.empty() || !name.empty()) {
      names.resize(state_count);
      names.push_back(std::move(name));
    }
    return static_cast<StateId>(state_count++);
  }

  std::string name(StateId q) const {
    if (q < names.size() && !names[q].empty()) return names[q];
    return "q" + std::to_string(q);
  }

  std::size_t size() const { return state_count; }

  /// Transition indices grouped by top state.
  std::vector<std::vector<std::size_t>> by_top() const {
    std::vector<std::vector<std::size_t>> r(state_count);
    for (std::size_t i = 0; i < transitions.size(); ++i) r[transitions[i].top].push_back(i);
    return r;
  }

  void add(Transition t) { transitions.push_back(std::move(t)); }
};

/// Composite names nest with every product; past a limit the state falls
/// back to its numeric name.
inline std::string short_name(std::string s) { return s.size() <= 64 ? s : std::string(); }

/// Every structural problem found; empty when the automaton is well formed.
inline std::vector<std::string> validate(const Lsta& a) {
  std::vector<std::string> issues;
  auto in_range = [&](StateId q) { return q < a.state_count; };
  for (StateId r : a.roots)
    if (!in_range(r)) issues.push_back("root " + std::to_string(r) + " is not a state");
  for (std::size_t i = 0; i < a.transitions.size(); ++i) {
    const auto& t = a.transitions[i];
    std::string where = "transition " + std::to_string(i);
    if (!in_range(t.top)) issues.push_back(where + ": top state out of range");
    if (!t.is_leaf() && (!in_range(t.left) || !in_range(t.right)))
      issues.push_back(where + ": bottom state out of range");
    if (t.symbol.kind == Symbol::Kind::Internal && t.symbol.index == 0)
      issues.push_back(where + ": qubit index must be positive");
    if (t.choices.empty()) issues.push_back(where + ": empty choice set");
    if (!std::is_sorted(t.choices.begin(), t.choices.end()) ||
        std::adjacent_find(t.choices.begin(), t.choices.end()) != t.choices.end())
      issues.push_back(where + ": choice set not normalized");
  }
  std::map<StateId, std::vector<std::size_t>> tops;
  for (std::size_t i = 0; i < a.transitions.size(); ++i) tops[a.transitions[i].top].push_back(i);
  for (const auto& [q, ts] : tops) {
    for (std::size_t x = 0; x < ts.size(); ++x)
      for (std::size_t y = x + 1; y < ts.size(); ++y)
        if (!disjoint(a.transitions[ts[x]].choices, a.transitions[ts[y]].choices))
          issues.push_back("transitions " + std::to_string(ts[x]) + " and " + std::to_string(ts[y]) +
                           " of state " + a.name(q) + " share a choice");
  }
  return issues;
}

inline void check_valid(const Lsta& a) {
  auto issues = validate(a);
  if (issues.empty()) return;
  std::string msg = "invalid automaton: " + issues.front();
  if (issues.size() > 1) msg += " (and " + std::to_string(issues.size() - 1) + " more)";
  throw ValidationError(msg);
}

inline std::size_t transition_count(const Lsta& a) { return a.transitions.size(); }

}  // namespace lsta

#endif  // LSTA_AUTOMATON_HPP
