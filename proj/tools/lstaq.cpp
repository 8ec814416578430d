// lstaq: command-line driver.
//
//   lstaq verify --pre P.lsta --circuit C.qasm --post Q.lsta [--param] [--no-reduce] [--budget N]
//   lstaq eqcheck A.qasm B.qasm
//   lstaq gen <family> [-n N] [-k 0|1] -o DIR
//   lstaq inject C.qasm --scenario miss-gate|flip-cx --seed S [-o OUT.qasm]
//
// Reports go to stdout as JSON, diagnostics to stderr. Exit status: 0 pass,
// 1 fail, 2 error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lsta/lsta.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace lsta;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << text;
}

// Parse errors are reported with the file they came from.
template <class F>
auto parse_file(const std::string& path, F&& parse) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

int exit_code(VerificationReport::Verdict v) {
  switch (v) {
    case VerificationReport::Verdict::Pass:
      return kPass;
    case VerificationReport::Verdict::Fail:
      return kFail;
    case VerificationReport::Verdict::Error:
      break;
  }
  return kError;
}

json to_json(const VerificationReport& r) {
  json j;
  j["verdict"] = verdict_name(r.verdict);
  if (!r.message.empty()) j["message"] = r.message;
  if (r.witness) {
    j["witness"] = to_text(*r.witness);
    j["witness_checked"] = r.witness_checked;
  }
  json sizes = json::array();
  for (const auto& s : r.sizes) sizes.push_back({{"gate", s.index}, {"states", s.states}, {"transitions", s.transitions}});
  j["sizes"] = sizes;
  j["seconds"] = {{"post", r.post_seconds}, {"inclusion", r.inclusion_seconds}};
  j["inclusion_vertices"] = r.inclusion_vertices;
  return j;
}

int report(const VerificationReport& r) {
  std::cout << to_json(r).dump(2) << "\n";
  if (r.verdict == VerificationReport::Verdict::Error) std::cerr << "lstaq: " << r.message << "\n";
  return exit_code(r.verdict);
}

int report_error(const std::string& message) {
  VerificationReport r;
  r.verdict = VerificationReport::Verdict::Error;
  r.message = message;
  return report(r);
}

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Generated {
  Lsta pre;
  Lsta post;
  std::string circuit;
  bool param = false;
};

Generated generate(const std::string& family, std::uint32_t n, int k) {
  auto fixed = [](const bench::Problem& p) { return Generated{p.pre, p.post, serialize_qasm(p.circuit), false}; };
  auto param = [](const Lsta& pre, const char* text, const Lsta& post) { return Generated{pre, post, text, true}; };
  if (family == "bell") return fixed(bench::bell());
  if (family == "ghz-sing") return fixed(bench::ghz_single(n));
  if (family == "ghz-all") return fixed(bench::ghz_all(n));
  if (family == "bv") return fixed(bench::bv(n));
  if (family == "mctoffoli") {
    if (n < 2) throw InvalidArgument("mctoffoli needs n >= 2");
    return fixed(bench::mc_toffoli(n, k));
  }
  if (family == "h2") return fixed(bench::h2(n));
  if (family == "hxh") return fixed(bench::hxh(n));
  if (family == "eqvectors") {
    Lsta e = predicates::eq_vectors(n);
    return fixed(bench::Problem{e, Circuit{n, {}}, e});
  }
  if (family == "param-ghz")
    return param(predicates::zeros_param(), bench::param_ghz_text(), predicates::ghz_param());
  if (family == "hamiltonian")
    return param(predicates::even_parity_param(), bench::hamiltonian_text(), predicates::even_parity_param());
  if (family == "fermion-single")
    return param(predicates::zeros_param(), bench::fermion_single_text(), predicates::zeros_param());
  throw InvalidArgument("unknown family '" + family + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify quantum circuits against tree-automata pre- and post-conditions"};
  app.require_subcommand(1);

  std::string pre_path, circuit_path, post_path;
  bool param = false, no_reduce = false;
  std::uint64_t budget = VerifyOptions{}.budget;
  auto* verify = app.add_subcommand("verify", "check {pre} circuit {post}");
  verify->add_option("--pre", pre_path, "pre-condition (.lsta)")->required();
  verify->add_option("--circuit", circuit_path, "circuit (.qasm, or .pqasm with --param)")->required();
  verify->add_option("--post", post_path, "post-condition (.lsta)")->required();
  verify->add_flag("--param", param, "parameterized circuit (implied by a .pqasm suffix)");
  verify->add_flag("--no-reduce", no_reduce, "skip reduction after each gate");
  verify->add_option("--budget", budget, "inclusion vertex budget");

  std::string eq_a, eq_b;
  auto* eqcheck = app.add_subcommand("eqcheck", "check two circuits for equality");
  eqcheck->add_option("a", eq_a)->required();
  eqcheck->add_option("b", eq_b)->required();

  std::string family, out_dir;
  std::uint32_t gen_n = 3;
  int gen_k = 0;
  auto* gen = app.add_subcommand("gen", "write a benchmark (pre.lsta, post.lsta, circuit)");
  gen->add_option("family", family,
                  "bell ghz-sing ghz-all bv mctoffoli h2 hxh eqvectors param-ghz hamiltonian fermion-single")
      ->required();
  gen->add_option("-n", gen_n, "size parameter")->check(CLI::Range(1u, 4096u));
  gen->add_option("-k", gen_k, "mctoffoli control value")->check(CLI::Range(0, 1));
  gen->add_option("-o", out_dir, "output directory")->required();

  std::string inject_in, scenario, inject_out;
  std::uint64_t seed = 0;
  auto* inject = app.add_subcommand("inject", "plant a bug in a circuit");
  inject->add_option("circuit", inject_in)->required();
  inject->add_option("--scenario", scenario)->required()->check(CLI::IsMember({"miss-gate", "flip-cx"}));
  inject->add_option("--seed", seed)->required();
  inject->add_option("-o", inject_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kError;
  }

  try {
    if (*verify) {
      VerifyOptions opt;
      opt.reduce = !no_reduce;
      opt.budget = budget;
      Lsta pre = parse_file(pre_path, parse_lsta);
      Lsta post = parse_file(post_path, parse_lsta);
      if (param || has_suffix(circuit_path, ".pqasm"))
        return report(run_verification(pre, parse_file(circuit_path, parse_pqasm), post, opt));
      return report(run_verification(pre, parse_file(circuit_path, parse_qasm), post, opt));
    }
    if (*eqcheck) {
      Circuit a = parse_file(eq_a, parse_qasm);
      Circuit b = parse_file(eq_b, parse_qasm);
      return report(run_eqcheck(a, b));
    }
    if (*gen) {
      Generated g = generate(family, gen_n, gen_k);
      fs::create_directories(out_dir);
      fs::path dir(out_dir);
      write_file(dir / "pre.lsta", serialize_lsta(g.pre));
      write_file(dir / "post.lsta", serialize_lsta(g.post));
      write_file(dir / (g.param ? "circuit.pqasm" : "circuit.qasm"), g.circuit);
      std::cout << json{{"family", family}, {"dir", out_dir}, {"param", g.param}}.dump() << "\n";
      return kPass;
    }
    if (*inject) {
      Circuit c = parse_file(inject_in, parse_qasm);
      auto s = scenario == "miss-gate" ? bench::Scenario::MissGate : bench::Scenario::FlipCx;
      std::string text = serialize_qasm(bench::inject_bug(c, s, seed));
      if (inject_out.empty()) {
        std::cout << text;
      } else {
        write_file(inject_out, text);
      }
      return kPass;
    }
  } catch (const std::exception& e) {
    return report_error(e.what());
  }
  return kError;
}
