#ifndef LSTA_VERIFY_HPP
#define LSTA_VERIFY_HPP

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "lsta/inclusion.hpp"
#include "lsta/membership.hpp"
#include "lsta/predicates.hpp"
#include "lsta/qasm.hpp"

namespace lsta {

struct VerifyOptions {
  bool reduce = true;
  std::uint64_t budget = 10'000'000;
};

struct GateStat {
  std::size_t index;  // 1-based gate position
  std::size_t states;
  std::size_t transitions;
};

struct VerificationReport {
  enum class Verdict { Pass, Fail, Error };

  Verdict verdict = Verdict::Pass;
  std::optional<StateTree> witness;
  bool witness_checked = false;  // accepted by the output, rejected by the post-condition
  std::vector<GateStat> sizes;
  double post_seconds = 0;
  double inclusion_seconds = 0;
  std::uint64_t inclusion_vertices = 0;
  std::string message;
  std::optional<Lsta> output;  // post-image of the pre-condition
};

inline const char* verdict_name(VerificationReport::Verdict v) {
  switch (v) {
    case VerificationReport::Verdict::Pass:
      return "pass";
    case VerificationReport::Verdict::Fail:
      return "fail";
    case VerificationReport::Verdict::Error:
      break;
  }
  return "error";
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

template <class Gates, class Apply>
VerificationReport verify_with(const Lsta& pre, const Gates& gates, const Lsta& post, const VerifyOptions& opt,
                               Apply&& apply) {
  VerificationReport rep;
  for (const auto* a : {&pre, &post}) {
    auto issues = validate(*a);
    if (!issues.empty()) {
      rep.verdict = VerificationReport::Verdict::Error;
      rep.message = std::string(a == &pre ? "pre" : "post") + "-condition: " + issues.front();
      return rep;
    }
  }
  auto t0 = Clock::now();
  Lsta cur = opt.reduce ? reduce(pre) : pre;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    try {
      cur = apply(cur, gates[i], opt.reduce);
    } catch (const Error& e) {
      rep.verdict = VerificationReport::Verdict::Error;
      rep.message = "gate " + std::to_string(i + 1) + ": " + e.what();
      return rep;
    }
    rep.sizes.push_back({i + 1, cur.state_count, cur.transitions.size()});
  }
  rep.post_seconds = since(t0);
  auto t1 = Clock::now();
  try {
    auto inc = includes(cur, post, {opt.budget});
    rep.inclusion_vertices = inc.vertices;
    if (!inc.included) {
      rep.verdict = VerificationReport::Verdict::Fail;
      rep.witness = inc.counterexample;
      rep.witness_checked = accepts(cur, *rep.witness).has_value() && !accepts(post, *rep.witness).has_value();
    }
  } catch (const Error& e) {
    rep.verdict = VerificationReport::Verdict::Error;
    rep.message = e.what();
  }
  rep.inclusion_seconds = since(t1);
  rep.output = std::move(cur);
  return rep;
}

}  // namespace detail

/// Decides {pre} c {post}: the image of L(pre) under c must be inside L(post).
inline VerificationReport run_verification(const Lsta& pre, const Circuit& c, const Lsta& post,
                                           const VerifyOptions& opt = {}) {
  return detail::verify_with(pre, c.gates, post, opt,
                             [](const Lsta& a, const GateOp& g, bool red) { return apply_gate(a, g, red); });
}

inline VerificationReport run_verification(const Lsta& pre, const ParamCircuit& c, const Lsta& post,
                                           const VerifyOptions& opt = {}) {
  return detail::verify_with(pre, c.gates, post, opt,
                             [](const Lsta& a, const ParamGateOp& g, bool red) { return apply_param_gate(a, g, red); });
}

/// Checks c1 == c2 by verifying that c1 followed by c2^dagger maps the
/// eq_vectors set onto itself (both inclusions).
inline VerificationReport run_eqcheck(const Circuit& c1, const Circuit& c2, const VerifyOptions& opt = {}) {
  if (c1.qubits != c2.qubits)
    throw InvalidArgument("circuits act on " + std::to_string(c1.qubits) + " and " + std::to_string(c2.qubits) +
                          " qubits");
  Lsta e = predicates::eq_vectors(c1.qubits);
  auto rep = run_verification(e, concat(c1, dagger(c2)), e, opt);
  if (rep.verdict != VerificationReport::Verdict::Pass || !rep.output) return rep;
  auto t = detail::Clock::now();
  try {
    auto back = includes(e, *rep.output, {opt.budget});
    rep.inclusion_vertices += back.vertices;
    if (!back.included) {
      rep.verdict = VerificationReport::Verdict::Fail;
      rep.witness = back.counterexample;
      rep.message = "the circuit image misses a vector of the reference set";
      rep.witness_checked = accepts(e, *rep.witness).has_value() && !accepts(*rep.output, *rep.witness).has_value();
    }
  } catch (const Error& ex) {
    rep.verdict = VerificationReport::Verdict::Error;
    rep.message = ex.what();
  }
  rep.inclusion_seconds += detail::since(t);
  return rep;
}

}  // namespace lsta

#endif  // LSTA_VERIFY_HPP
