#ifndef LSTA_GAMMA_HPP
#define LSTA_GAMMA_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "lsta/automaton.hpp"

namespace lsta {

using TopIndex = std::vector<std::vector<std::size_t>>;

/// Calls visit(gamma, common) for every way of picking one transition per
/// state of `states` (gamma[i] belongs to states[i]) such that all picked
/// transitions share a choice. `allowed(i, t)` filters candidates for
/// states[i]. Each distinct gamma is produced exactly once. The search starts
/// from the state with the fewest transitions (ties: smallest id), so the
/// candidate common choices are those of that pivot. visit returns false to stop.
/// Returns false if stopped early.
template <class Allowed, class Visit>
bool for_each_gamma(const Lsta& a, const TopIndex& by_top, const std::vector<StateId>& states,
                    Allowed&& allowed, Visit&& visit) {
  const std::size_t n = states.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    auto sx = by_top[states[x]].size(), sy = by_top[states[y]].size();
    if (sx != sy) return sx < sy;
    return states[x] < states[y];
  });
  std::vector<std::vector<std::size_t>> cand(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t : by_top[states[i]])
      if (allowed(i, t)) cand[i].push_back(t);
    if (cand[i].empty()) return true;
  }
  std::vector<std::size_t> gamma(n);
  std::vector<ChoiceSet> common(n + 1);
  bool go_on = true;
  auto rec = [&](auto& self, std::size_t p) -> void {
    if (!go_on) return;
    if (p == n) {
      go_on = visit(static_cast<const std::vector<std::size_t>&>(gamma), static_cast<const ChoiceSet&>(common[p]));
      return;
    }
    std::size_t i = order[p];
    for (std::size_t t : cand[i]) {
      const ChoiceSet& c = a.transitions[t].choices;
      if (p == 0) {
        common[1] = c;
      } else {
        common[p + 1] = intersect(common[p], c);
        if (common[p + 1].empty()) continue;
      }
      gamma[i] = t;
      self(self, p + 1);
      if (!go_on) return;
    }
  };
  if (n == 0) return visit(gamma, common[0]);
  rec(rec, 0);
  return go_on;
}

}  // namespace lsta

#endif  // LSTA_GAMMA_HPP
