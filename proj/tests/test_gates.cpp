// Gate application on automata, fixed-index and parameterized.

#include <regex>

#include "catch_amalgamated.hpp"
#include "support/oracles.hpp"

using namespace lsta;
using oracle::term;

namespace {

using AC = AlgebraicComplex;

std::set<std::string> lang(const Lsta& a, std::size_t h) { return terms(enumerate_language(a, h)); }

std::set<std::string> lang_at(const Lsta& a, std::size_t h) {
  std::set<std::string> r;
  for (const auto& [k, t] : enumerate_language(a, h))
    if (height(t) == h) r.insert(k);
  return r;
}

// x1, x2, ... -> x
std::set<std::string> unindexed(const std::set<std::string>& s) {
  static const std::regex idx("x[0-9]+");
  std::set<std::string> r;
  for (const auto& t : s) r.insert(std::regex_replace(t, idx, "x"));
  return r;
}

Lsta single(const std::string& t) {
  Lsta a;
  auto go = [&](auto& self, const StateTree& n) -> StateId {
    StateId q = a.add_state();
    if (n->is_leaf()) {
      a.add(Transition::leaf(q, n->symbol.value, {1}));
    } else {
      StateId l = self(self, n->left);
      StateId r = self(self, n->right);
      a.add(Transition::internal(q, n->symbol, l, r, {1}));
    }
    return q;
  };
  a.roots.push_back(go(go, term(t)));
  return a;
}

GateOp g1(const GateMatrix& u, std::uint32_t t) { return GateOp::make("u", u, t); }
GateOp cx(std::uint32_t c, std::uint32_t t) { return GateOp::make("x", gates::x(), t, {c}); }

// Sample amplitudes a, b, c, d for the two-qubit examples.
const AC A = 1, B = 2, C = AC::omega(1), D = -3;

std::string abcd(const AC& a, const AC& b, const AC& c, const AC& d) {
  return oracle::term_of({a, b, c, d}, 2);
}

Lsta apply_all(Lsta a, const std::vector<GateOp>& gs) {
  for (const auto& g : gs) a = apply_gate(a, g);
  return a;
}

// Height-n language of a parameterized op on parameterize(a) against the
// fixed-index composition on a.
template <class Op>
void check_param(const Lsta& a, std::uint32_t n, Op&& op, const std::vector<GateOp>& fixed) {
  auto got = lang_at(op(oracle::parameterize(a)), n);
  auto want = unindexed(lang_at(apply_all(a, fixed), n));
  CHECK(got == want);
}

}  // namespace

// ---------------------------------------------------------------------------
// fixed-index gates

TEST_CASE("single-qubit gate examples") {
  Lsta q = single(abcd(A, B, C, D));
  auto s = AC::inv_sqrt2();
  CHECK(lang(apply_single(q, 1, gates::h()), 2) ==
        std::set<std::string>{abcd((A + C) * s, (B + D) * s, (A - C) * s, (B - D) * s)});
  CHECK(lang(apply_single(q, 2, gates::h()), 2) ==
        std::set<std::string>{abcd((A + B) * s, (A - B) * s, (C + D) * s, (C - D) * s)});

  Lsta basis = predicates::basis_all(2);
  Lsta h1 = apply_single(basis, 1, gates::h());
  auto want = std::set<std::string>{abcd(s, 0, s, 0), abcd(0, s, 0, s), abcd(s, 0, -s, 0), abcd(0, s, 0, -s)};
  CHECK(lang(h1, 2) == want);
  CHECK(lang(reduce(h1), 2) == want);
  CHECK(lang(apply_single(basis, 2, gates::identity()), 2) == lang(basis, 2));
}

TEST_CASE("X examples") {
  Lsta q = single(abcd(A, B, C, D));
  CHECK(lang(apply_x(q, 2), 2) == std::set<std::string>{abcd(B, A, D, C)});
  Lsta b = predicates::basis_all(3);
  CHECK(lang(apply_x(apply_x(b, 2), 2), 3) == lang(b, 3));
  CHECK(lang(apply_x(predicates::basis_single({0, 0}), 1), 2) == std::set<std::string>{oracle::basis_term({1, 0})});
}

TEST_CASE("diagonal examples") {
  Lsta q = single(abcd(A, B, C, D));
  CHECK(lang(apply_diag(q, 2, 1, -1), 2) == std::set<std::string>{abcd(A, -B, C, -D)});
  Lsta g = predicates::ghz_all_fixed(3);
  CHECK(lang(apply_diag(g, 2, 1, 1), 3) == lang(g, 3));
  Lsta s = apply_all(g, {g1(gates::s(), 1), g1(gates::s(), 1), g1(gates::z(), 1)});
  CHECK(lang(s, 3) == lang(g, 3));
}

TEST_CASE("controlled examples") {
  Lsta q = single(abcd(A, B, C, D));
  CHECK(lang(apply_gate(q, cx(1, 2)), 2) == std::set<std::string>{abcd(A, B, D, C)});
  CHECK(lang(apply_gate(q, cx(2, 1)), 2) == std::set<std::string>{abcd(A, D, C, B)});
  Lsta bell = apply_all(predicates::basis_all(2), {g1(gates::h(), 1), cx(1, 2)});
  CHECK(lang(bell, 2) == lang(predicates::bell(), 2));
  CHECK(lang(apply_all(q, {g1(gates::x(), 1), g1(gates::x(), 1)}), 2) == lang(q, 2));
}

TEST_CASE("controlled gates check their arguments") {
  Lsta b = predicates::basis_all(3);
  CHECK_THROWS_AS(apply_controlled(b, {2}, 2, gates::x()), InvalidArgument);
  CHECK_THROWS_AS(apply_controlled(b, {1, 1}, 2, gates::x()), InvalidArgument);
  CHECK_THROWS_AS(apply_controlled(b, {}, 2, gates::x()), InvalidArgument);
  CHECK_THROWS_AS(apply_gate(predicates::zeros_param(), g1(gates::h(), 1)), NeedsUnfold);
  CHECK_THROWS_AS(apply_gate(predicates::zeros_param(), cx(1, 2)), NeedsUnfold);
}

TEST_CASE("gates agree with the dense oracle") {
  oracle::Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    auto n = static_cast<std::uint32_t>(oracle::uniform(rng, 1, 4));
    Lsta a = oracle::random_layered(rng, n, 3, 3);
    GateOp g = oracle::random_gate(rng, n);
    Lsta out = apply_gate(a, g, i % 2 == 0);
    CHECK(validate(out).empty());
    CHECK(lang(out, n) == oracle::image(a, n, [&](const oracle::Vec& v) { return oracle::dense_apply(g, v, n); }));
  }
}

TEST_CASE("random circuits agree with the dense oracle") {
  oracle::Rng rng(22);
  for (int i = 0; i < 60; ++i) {
    const std::uint32_t n = 3;
    Lsta a = oracle::random_layered(rng, n, 2);
    std::vector<GateOp> gs;
    for (int k = 0; k < 5; ++k) gs.push_back(oracle::random_gate(rng, n));
    auto want = oracle::image(a, n, [&](oracle::Vec v) {
      for (const auto& g : gs) v = oracle::dense_apply(g, v, n);
      return v;
    });
    CHECK(lang(apply_all(a, gs), n) == want);
  }
}

TEST_CASE("unitary gates preserve norms") {
  oracle::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    auto n = static_cast<std::uint32_t>(oracle::uniform(rng, 1, 3));
    Lsta a = oracle::random_layered(rng, n, 2);
    GateOp g = oracle::random_gate(rng, n);
    std::multiset<std::string> in, out;
    for (const auto& [k, t] : oracle::naive_trees(a, n)) {
      // the image of t under g
      auto v = oracle::dense_apply(g, *oracle::dense(t, n), n);
      CHECK(norm2(t) == norm2(oracle::tree_of(v, n)));
    }
    for (const auto& [k, t] : enumerate_language(a, n)) in.insert(norm2(t).str());
    for (const auto& [k, t] : enumerate_language(apply_gate(a, g), n)) out.insert(norm2(t).str());
    // every output norm is an input norm
    for (const auto& s : out) CHECK(in.count(s) > 0);
  }
}

TEST_CASE("size bounds before trimming") {
  oracle::Rng rng(24);
  for (int i = 0; i < 100; ++i) {
    auto n = static_cast<std::uint32_t>(oracle::uniform(rng, 2, 4));
    Lsta a = oracle::random_layered(rng, n, 3);
    const auto sz = a.state_count;
    auto t = static_cast<std::uint32_t>(oracle::uniform(rng, 1, static_cast<int>(n)));
    CHECK(apply_x(a, t).state_count == sz);
    CHECK(apply_diag(a, t, 1, AC::i()).state_count == 2 * sz);
    auto u = detail::apply_single_impl(a, t, gates::h()).aut;
    CHECK(u.state_count <= sz + 2 * sz * sz);
    for (std::uint32_t c = 1; c <= n; ++c) {
      if (c == t) continue;
      CHECK(apply_controlled(a, {c}, t, gates::h()).state_count <= sz + u.state_count);
    }
  }
}

// ---------------------------------------------------------------------------
// parameterized gates

TEST_CASE("parameterized GHZ") {
  Lsta z = predicates::zeros_param();
  Lsta h = fold(apply_gate(unfold_top(z, 1), g1(gates::h(), 1)));
  Lsta out = cx_n(h);
  CHECK(includes(out, predicates::ghz_param()).included);
  CHECK(includes(predicates::ghz_param(), out).included);
  CHECK(cx_n(z).state_count == 2 * z.state_count);
}

TEST_CASE("CX(n) examples") {
  Lsta q = oracle::parameterize(single(abcd(A, B, C, D)));
  auto want = unindexed({abcd(A, B, D, C)});
  CHECK(lang(cx_n(q), 2) == want);
  CHECK(lang(cx_n_inv(q), 2) == want);
  CHECK_THROWS(cx_n(predicates::basis_all(2)));
}

TEST_CASE("parameterized ops match fixed-index compositions") {
  oracle::Rng rng(25);
  for (int i = 0; i < 40; ++i) {
    for (std::uint32_t n = 2; n <= 4; ++n) {
      Lsta a = oracle::random_layered(rng, n, 2);
      std::vector<GateOp> stair, stair_inv, xs, even, odd;
      for (std::uint32_t q = 1; q < n; ++q) stair.push_back(cx(q, q + 1));
      stair_inv.assign(stair.rbegin(), stair.rend());
      for (std::uint32_t q = 1; q <= n; ++q) xs.push_back(g1(gates::x(), q));
      for (std::uint32_t q = 1; q + 1 <= n; q += 2) even.push_back(cx(q, q + 1));
      for (std::uint32_t q = 2; q + 1 <= n; q += 2) odd.push_back(cx(q, q + 1));
      check_param(a, n, cx_n, stair);
      check_param(a, n, cx_n_inv, stair_inv);
      check_param(a, n, x_all, xs);
      check_param(a, n, [](const Lsta& p) { return alt_cnot(p, false); }, even);
      check_param(a, n, [](const Lsta& p) { return alt_cnot(p, true); }, odd);

      unsigned N = 1u << oracle::uniform(rng, 0, 4);
      long long m = oracle::uniform(rng, -5, 5);
      std::vector<GateOp> phases;
      for (std::uint32_t q = 1; q <= n; ++q)
        phases.push_back(g1(gates::diag(1, AC::omega(static_cast<long long>(16 / N) * m)), q));
      check_param(a, n, [&](const Lsta& p) { return phase_all(p, N, m); }, phases);

      GateMatrix u = i % 3 == 0 ? gates::h() : i % 3 == 1 ? gates::rx(oracle::uniform(rng, -7, 7)) : gates::t();
      ParamGateOp first;
      first.kind = ParamGateOp::Kind::SingleAt;
      first.target = 1;
      first.u = u;
      check_param(a, n, [&](const Lsta& p) { return apply_param_gate(p, first); }, {g1(u, 1)});
      check_param(a, n, [&](const Lsta& p) { return apply_single_last(p, u); }, {g1(u, n)});
    }
  }
}

TEST_CASE("parameterized op sizes before trimming") {
  oracle::Rng rng(26);
  for (int i = 0; i < 50; ++i) {
    Lsta p = oracle::parameterize(oracle::random_layered(rng, 3, 3));
    const auto sz = p.state_count;
    CHECK(cx_n(p).state_count == 2 * sz);
    CHECK(cx_n_inv(p).state_count == 2 * sz);
    CHECK(x_all(p).state_count == sz);
    CHECK(alt_cnot(p, i % 2).state_count <= 3 * sz);
    for (unsigned N : {1u, 2u, 4u, 8u, 16u}) CHECK(phase_all(p, N, 1).state_count == N * sz);
    CHECK(validate(cx_n(p)).empty());
    CHECK(validate(alt_cnot(p, true)).empty());
  }
}

TEST_CASE("parameterized involutions and identities") {
  Lsta z = predicates::zeros_param();
  CHECK(lang(x_all(x_all(z)), 4) == lang(z, 4));
  CHECK(lang(x_all(z), 3) == std::set<std::string>{"x(0,1)", "x(x(0,0), x(0,1))",
                                                   "x(x(x(0,0), x(0,0)), x(x(0,0), x(0,1)))"});
  Lsta g = predicates::ghz_param();
  CHECK(lang(cx_n_inv(cx_n(g)), 5) == lang(g, 5));
  CHECK(lang(alt_cnot(alt_cnot(g, true), true), 5) == lang(g, 5));
  CHECK(lang(phase_all(g, 1, 3), 5) == lang(g, 5));
  CHECK(lang(apply_single_last(g, gates::identity()), 5) == lang(g, 5));
  Lsta q = oracle::parameterize(single(abcd(A, B, C, D)));
  CHECK(lang(phase_all(q, 2, 1), 2) == unindexed({abcd(A, -B, -C, D)}));
  CHECK_THROWS(phase_all(z, 3, 1));
}

TEST_CASE("unfold and fold") {
  // heights below t are rejected rather than dropped
  CHECK_THROWS_AS(unfold_top(predicates::zeros_param(), 2), NeedsUnfold);
  Lsta z = predicates::zeros_param();
  Lsta u = unfold_top(z, 1);
  CHECK(unindexed(lang(u, 4)) == lang(z, 4));
  CHECK(lang(fold(u), 4) == lang(z, 4));
  CHECK(lang(fold(z), 4) == lang(z, 4));
  Lsta f = fold(apply_gate(unfold_top(z, 1), g1(gates::x(), 1)));
  CHECK(lang(f, 3) == std::set<std::string>{"x(0,1)", "x(x(0,0), x(1,0))", "x(x(x(0,0), x(0,0)), x(x(1,0), x(0,0)))"});
}

TEST_CASE("last-layer gate rejects ambiguous automata") {
  CHECK_THROWS_AS(apply_single_last(predicates::perfect_trees(), gates::h()), AmbiguousLastLayer);
}

TEST_CASE("diagonal Hamiltonian step keeps even parity") {
  Lsta e = predicates::even_parity_param();
  auto c = parse_pqasm("PH_FIRST -2\nCXN\nRZ_LAST -4\nCXNINV\n");
  Lsta out = e;
  for (const auto& g : c.gates) out = apply_param_gate(out, g);
  CHECK(includes(out, e).included);
  for (std::size_t h = 1; h <= 5; ++h) CHECK(lang_at(out, h).size() == (std::size_t{1} << (h - 1)));
}
