#pragma once

// Brute-force reference implementations used by the tests. Nothing here
// calls into the automaton algorithms under test; trees are compared by
// their printed terms.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lsta/lsta.hpp"

namespace oracle {

using lsta::AlgebraicComplex;
using lsta::GateMatrix;
using lsta::GateOp;
using lsta::Lsta;
using lsta::StateId;
using lsta::StateTree;
using lsta::Symbol;
using lsta::Transition;
using Vec = std::vector<AlgebraicComplex>;

// ---------------------------------------------------------------------------
// Naive enumeration: every node of a level picks a transition carrying the
// level's choice c, independently of the other nodes.

inline std::vector<std::vector<StateTree>> expand(const Lsta& a, const std::vector<StateId>& frontier,
                                                  std::size_t depth, std::size_t max_height) {
  std::set<lsta::Choice> all;
  for (const auto& t : a.transitions) all.insert(t.choices.begin(), t.choices.end());
  std::vector<std::vector<StateTree>> out;
  std::set<std::vector<std::string>> seen;
  for (lsta::Choice c : all) {
    // options[i]: transitions node i may use under c
    std::vector<std::vector<const Transition*>> options(frontier.size());
    bool dead = false;
    for (std::size_t i = 0; i < frontier.size() && !dead; ++i) {
      for (const auto& t : a.transitions)
        if (t.top == frontier[i] && lsta::contains(t.choices, c) && (t.is_leaf() || depth < max_height))
          options[i].push_back(&t);
      dead = options[i].empty();
    }
    if (dead) continue;
    std::vector<std::size_t> pick(frontier.size(), 0);
    for (;;) {
      std::vector<StateId> next;
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        const auto* t = options[i][pick[i]];
        if (!t->is_leaf()) {
          next.push_back(t->left);
          next.push_back(t->right);
        }
      }
      std::vector<std::vector<StateTree>> below;
      if (next.empty()) {
        below.emplace_back();
      } else {
        below = expand(a, next, depth + 1, max_height);
      }
      for (const auto& b : below) {
        std::vector<StateTree> row;
        std::vector<std::string> key;
        std::size_t k = 0;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
          const auto* t = options[i][pick[i]];
          StateTree node;
          if (!t->is_leaf()) {
            node = lsta::make_node(t->symbol, b[k], b[k + 1]);
            k += 2;
          } else {
            node = lsta::make_leaf(t->symbol.value);
          }
          key.push_back(lsta::to_term(node));
          row.push_back(node);
        }
        if (seen.insert(key).second) out.push_back(std::move(row));
      }
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  return out;
}

/// All accepted trees of height <= max_height, keyed by term.
inline std::map<std::string, StateTree> naive_trees(const Lsta& a, std::size_t max_height) {
  std::map<std::string, StateTree> r;
  for (StateId root : std::set<StateId>(a.roots.begin(), a.roots.end()))
    for (const auto& row : expand(a, {root}, 0, max_height)) r.emplace(lsta::to_term(row[0]), row[0]);
  return r;
}

inline std::set<std::string> naive_language(const Lsta& a, std::size_t max_height) {
  std::set<std::string> r;
  for (const auto& kv : naive_trees(a, max_height)) r.insert(kv.first);
  return r;
}

inline bool subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  for (const auto& s : a)
    if (!b.count(s)) return false;
  return true;
}

/// Parses the term syntax, e.g. "x1(x2(0,1/s2), x2(1/s2,0))".
inline StateTree term(std::string_view s) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && s[i] == ' ') ++i;
  };
  auto go = [&](auto& self) -> StateTree {
    skip();
    if (i < s.size() && s[i] == 'x') {
      std::size_t open = s.find('(', i);
      std::string_view name = s.substr(i + 1, open - i - 1);
      i = open + 1;
      Symbol sym = name.empty() ? Symbol::any() : Symbol::internal(static_cast<std::uint32_t>(std::stoul(std::string(name))));
      StateTree l = self(self);
      skip();
      i++;  // ','
      StateTree r = self(self);
      skip();
      i++;  // ')'
      return lsta::make_node(sym, l, r);
    }
    std::size_t start = i;
    int depth = 0;
    for (; i < s.size(); ++i) {
      if (s[i] == '(') {
        ++depth;
      } else if (s[i] == ')') {
        if (depth == 0) break;
        --depth;
      } else if (s[i] == ',' && depth == 0) {
        break;
      }
    }
    return lsta::make_leaf(AlgebraicComplex::parse(s.substr(start, i - start)));
  };
  return go(go);
}

// ---------------------------------------------------------------------------
// Dense state vectors. Qubit 1 is the most significant bit of the index.

inline std::optional<Vec> dense(const StateTree& t, std::uint32_t n) {
  Vec v;
  auto go = [&](auto& self, const StateTree& s, std::uint32_t level) -> bool {
    if (level == n) {
      if (!s->symbol.is_leaf()) return false;
      v.push_back(s->symbol.value);
      return true;
    }
    if (!s->symbol.is_internal(level + 1)) return false;
    return self(self, s->left, level + 1) && self(self, s->right, level + 1);
  };
  if (!go(go, t, 0)) return std::nullopt;
  return v;
}

inline StateTree tree_of(const Vec& v, std::uint32_t n) {
  auto go = [&](auto& self, std::size_t lo, std::size_t len, std::uint32_t level) -> StateTree {
    if (len == 1) return lsta::make_leaf(v[lo]);
    return lsta::make_node(Symbol::internal(level), self(self, lo, len / 2, level + 1),
                           self(self, lo + len / 2, len / 2, level + 1));
  };
  return go(go, 0, v.size(), 1);
}

inline bool bit(std::size_t index, std::uint32_t q, std::uint32_t n) { return (index >> (n - q)) & 1; }

inline Vec dense_apply(const GateOp& g, const Vec& v, std::uint32_t n) {
  Vec out = v;
  const std::size_t mask = std::size_t{1} << (n - g.target);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i & mask) continue;
    bool on = true;
    for (auto c : g.controls) on = on && bit(i, c, n);
    if (!on) continue;
    const auto& a = v[i];
    const auto& b = v[i | mask];
    out[i] = g.u[0] * a + g.u[1] * b;
    out[i | mask] = g.u[2] * a + g.u[3] * b;
  }
  return out;
}

inline std::string term_of(const Vec& v, std::uint32_t n) { return lsta::to_term(tree_of(v, n)); }

/// The basis state |bits>, bits[0] being qubit 1, as a term.
inline std::string basis_term(const std::vector<int>& bits) {
  std::size_t x = 0;
  for (int b : bits) x = 2 * x + static_cast<std::size_t>(b);
  Vec v(std::size_t{1} << bits.size());
  v[x] = 1;
  return term_of(v, static_cast<std::uint32_t>(bits.size()));
}

/// Image of L(a) (trees up to height n) under f, as terms. Trees that are
/// not indexed n-qubit states are reported as "?".
template <class F>
std::set<std::string> image(const Lsta& a, std::uint32_t n, F&& f) {
  std::set<std::string> out;
  for (const auto& [term, t] : naive_trees(a, n)) {
    auto v = dense(t, n);
    out.insert(v ? term_of(f(*v), n) : "?");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random automata.

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline AlgebraicComplex random_value(Rng& rng) {
  static const char* pool[] = {"0", "1", "-1", "i", "-i", "1/s2", "-1/s2", "w^1", "w^3", "-w^2", "C(1,0,1,0,0,0,0,0)/s2^1"};
  return AlgebraicComplex::parse(pool[uniform(rng, 0, static_cast<int>(std::size(pool)) - 1)]);
}

/// Splits {1..k} among `count` transitions of one top state: each gets a
/// non-empty, pairwise disjoint subset. Requires count <= k.
inline std::vector<lsta::ChoiceSet> disjoint_choices(Rng& rng, std::size_t count, int k) {
  std::vector<lsta::Choice> pool;
  for (int c = 1; c <= k; ++c) pool.push_back(static_cast<lsta::Choice>(c));
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<lsta::ChoiceSet> r(count);
  for (std::size_t i = 0; i < count; ++i) r[i].push_back(pool[i]);
  for (std::size_t j = count; j < pool.size(); ++j)
    if (uniform(rng, 0, 1)) r[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(count) - 1))].push_back(pool[j]);
  for (auto& c : r) c = lsta::make_choices(c);
  return r;
}

/// Level-stratified automaton accepting perfect trees of height n with
/// x_{d+1} at depth d. Each level gets 1..per_level states.
inline Lsta random_layered(Rng& rng, std::uint32_t n, int per_level, int max_out = 2) {
  Lsta a;
  std::vector<std::vector<StateId>> level(n + 1);
  for (std::uint32_t d = 0; d <= n; ++d) {
    int k = uniform(rng, 1, per_level);
    for (int i = 0; i < k; ++i) level[d].push_back(a.add_state());
  }
  a.roots.push_back(level[0][0]);
  if (level[0].size() > 1 && uniform(rng, 0, 1)) a.roots.push_back(level[0][1]);
  for (std::uint32_t d = 0; d <= n; ++d)
    for (StateId q : level[d]) {
      auto count = static_cast<std::size_t>(uniform(rng, 1, max_out));
      auto cs = disjoint_choices(rng, count, 3);
      for (std::size_t i = 0; i < count; ++i) {
        if (d == n) {
          a.add(Transition::leaf(q, random_value(rng), cs[i]));
        } else {
          const auto& below = level[d + 1];
          auto pick = [&] { return below[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(below.size()) - 1))]; };
          a.add(Transition::internal(q, Symbol::internal(d + 1), pick(), pick(), cs[i]));
        }
      }
    }
  return a;
}

/// Layered automaton with at most max_states states in total.
inline Lsta random_small_layered(Rng& rng, std::uint32_t n, int max_states) {
  for (;;) {
    Lsta a = random_layered(rng, n, std::max(1, max_states - static_cast<int>(n)));
    if (static_cast<int>(a.state_count) <= max_states) return a;
  }
}

/// Same automaton with every internal symbol replaced by x.
inline Lsta parameterize(Lsta a) {
  for (auto& t : a.transitions)
    if (!t.is_leaf()) t.symbol = Symbol::any();
  return a;
}

/// Acyclic automaton over {x1, x2, 0, 1}: children always have larger ids,
/// so every accepted tree has height < states. Trees need not be perfect.
inline Lsta random_acyclic(Rng& rng, int states) {
  Lsta a;
  for (int i = 0; i < states; ++i) a.add_state();
  a.roots.push_back(0);
  if (states > 1 && uniform(rng, 0, 2) == 0) a.roots.push_back(1);
  for (StateId q = 0; q < a.state_count; ++q) {
    auto count = static_cast<std::size_t>(uniform(rng, 1, 3));
    auto cs = disjoint_choices(rng, count, 3);
    for (std::size_t i = 0; i < count; ++i) {
      bool leaf = q + 1 == a.state_count || uniform(rng, 0, 2) == 0;
      if (leaf) {
        a.add(Transition::leaf(q, AlgebraicComplex(uniform(rng, 0, 1)), cs[i]));
      } else {
        auto child = [&] { return static_cast<StateId>(uniform(rng, static_cast<int>(q) + 1, states - 1)); };
        a.add(Transition::internal(q, Symbol::internal(static_cast<std::uint32_t>(uniform(rng, 1, 2))), child(), child(),
                                   cs[i]));
      }
    }
  }
  return a;
}

/// A copy of `a` with one transition removed or one choice dropped, so its
/// language is often a subset of a's.
inline Lsta weaken(Rng& rng, Lsta a) {
  if (a.transitions.size() > 1 && uniform(rng, 0, 1)) {
    a.transitions.erase(a.transitions.begin() + uniform(rng, 0, static_cast<int>(a.transitions.size()) - 1));
  } else {
    auto& t = a.transitions[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(a.transitions.size()) - 1))];
    if (t.choices.size() > 1) t.choices.erase(t.choices.begin());
  }
  return a;
}

inline GateOp random_gate(Rng& rng, std::uint32_t n) {
  using namespace lsta::gates;
  auto q = [&] { return static_cast<std::uint32_t>(uniform(rng, 1, static_cast<int>(n))); };
  std::uint32_t target = q();
  std::vector<GateMatrix> cores{x(), y(), z(), h(), s(), sdg(), lsta::gates::t(), tdg(),
                                rx(uniform(rng, -7, 7)), rz(uniform(rng, -7, 7)), ph(uniform(rng, -3, 3))};
  GateMatrix u = cores[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(cores.size()) - 1))];
  std::vector<std::uint32_t> controls;
  if (n > 1 && uniform(rng, 0, 1)) {
    for (std::uint32_t c = 1; c <= n; ++c)
      if (c != target && uniform(rng, 0, 1)) controls.push_back(c);
  }
  return GateOp::make("u", u, target, controls);
}

}  // namespace oracle
