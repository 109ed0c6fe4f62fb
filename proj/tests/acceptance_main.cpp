// Acceptance suite: runs every property suite at full scale on both default
// configurations and prints one pass/fail line per criterion. Exit code 0 iff
// every criterion holds. --cli <path> points at the built CLI binary for the
// byte-level determinism criterion.

#include <array>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <symalg/suites.hpp>

namespace {

struct Criterion {
  int number;
  std::string label;
  std::vector<std::string> properties;  // suite/property names that must be clean
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table = {
      {1,
       "operator laws: compose associativity, commutator Jacobi, apply oracle",
       {"operator-laws/compose-associative", "operator-laws/commutator-jacobi",
        "operator-laws/apply-compose-consistency", "operator-laws/poly-ring-axioms",
        "operator-laws/matrix-ring-axioms", "operator-laws/canonical-bracket-laws",
        "operator-laws/trace-decomposition", "operator-laws/gamma-laws"}},
      {2,
       "quantum-Poisson filtration laws and the local-form criterion",
       {"operator-laws/pson-filtration-laws",
        "operator-laws/local-form-vs-commutator-membership",
        "operator-laws/coordinate-bracket-descent", "operator-laws/d-filtration-consistency"}},
      {3,
       "symbol well-definedness under representative perturbation",
       {"symbol-laws/product-representative-independence",
        "symbol-laws/bracket-representative-independence",
        "symbol-laws/sigma-lift-roundtrip", "symbol-laws/sigma-pson-consistency"}},
      {4,
       "closed forms equal the lift/compose/extract oracle",
       {"oracle-equivalence/product-closed-vs-operator",
        "oracle-equivalence/bracket-closed-vs-operator",
        "oracle-equivalence/bracket-sign-anchor"}},
      {5,
       "classical Poisson axioms on the symbol algebra",
       {"symbol-laws/product-commutative", "symbol-laws/product-associative",
        "symbol-laws/bracket-antisymmetric", "symbol-laws/bracket-jacobi",
        "symbol-laws/bracket-leibniz", "symbol-laws/gradation-of-operations"}},
      {6,
       "square-zero ideal: J = ker delta, absorption, trivial product, splitting",
       {"ideal/ker-delta-characterization", "ideal/ideal-absorption",
        "ideal/trivial-multiplication-on-j", "ideal/decompose-splitting",
        "ideal/decompose-uniqueness", "ideal/pol-subalgebra"}},
      {7,
       "inverses of u + f and NotInvertible rejections",
       {"inverse/invert-closed-form", "inverse/invert-rejects-zero-scalar",
        "inverse/invert-rejects-non-constant", "inverse/invert-worked-example"}},
      {8,
       "exact sequence: delta o theta = 0, ker delta = im theta, dimensions",
       {"exact-sequence/delta-product-homomorphism", "exact-sequence/delta-theta-zero",
        "exact-sequence/ker-delta-is-theta-image",
        "exact-sequence/exactness-on-monomial-basis"}},
      {9,
       "bracket-lowering lemma agrees with the syntactic characterization",
       {"filtration-lemma/lemma-agreement-i1", "filtration-lemma/lemma-agreement-i2",
        "filtration-lemma/lemma-agreement-i3", "filtration-lemma/lemma-edge-cases"}},
      {10,
       "gl case: multiplication and bracket formulas, inverse, embedding",
       {"gl-case/gl-product-matches-symbols", "gl-case/gl-bracket-matches-symbols",
        "gl-case/gl-poisson-axioms", "gl-case/gl-invert-random",
        "gl-case/gl-invert-worked-example", "gl-case/gl-j-decomposition",
        "gl-case/gl-embed-properties"}},
      {11,
       "induced morphisms: Poisson isomorphism, structure transport, controls",
       {"morphism/induced-poisson-isomorphism", "morphism/induced-structure-preservation",
        "morphism/symbol-route-vs-operator-route", "morphism/functoriality",
        "morphism/inverse-roundtrip", "morphism/respects-orders", "morphism/gamma-transport",
        "morphism/apply-conjugation", "morphism/identity-fixed-points",
        "morphism/negative-controls"}},
  };
  return table;
}

std::string run_cli(const std::string& cli, const std::string& args, int& exit_code) {
  std::string cmd = cli + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  exit_code = status;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
  }

  const std::vector<std::pair<int, int>> configs = {{1, 2}, {2, 3}};
  // failures per suite/property name, accumulated over both configurations
  std::map<std::string, int> failures;
  std::map<std::string, std::string> first_failure_detail;

  for (const auto& [m, n] : configs) {
    for (const std::string& suite : symalg::suite_names()) {
      symalg::SuiteConfig cfg;
      cfg.suite = suite;
      cfg.m = m;
      cfg.n = n;
      cfg.trials = 200;
      cfg.seed = 42;
      symalg::Report report = symalg::run_suite(cfg);
      for (const symalg::PropertyOutcome& p : report.properties) {
        std::string key = suite + "/" + p.name;
        failures[key] += p.failures;
        if (p.failures > 0 && p.counterexample &&
            first_failure_detail.find(key) == first_failure_detail.end()) {
          first_failure_detail[key] =
              "m=" + std::to_string(m) + " n=" + std::to_string(n) + " " +
              p.counterexample->dump();
        }
      }
    }
  }

  int failed_criteria = 0;
  for (const Criterion& c : criteria()) {
    int bad = 0;
    for (const std::string& prop : c.properties) {
      auto it = failures.find(prop);
      if (it == failures.end()) {
        std::cerr << "acceptance misconfigured: unknown property " << prop << "\n";
        return 2;
      }
      bad += it->second;
    }
    bool pass = bad == 0;
    if (!pass) ++failed_criteria;
    std::printf("%s  %2d. %s\n", pass ? "PASS" : "FAIL", c.number, c.label.c_str());
    if (!pass) {
      for (const std::string& prop : c.properties) {
        if (failures[prop] > 0) {
          std::printf("      %s: %d failures\n", prop.c_str(), failures[prop]);
          auto it = first_failure_detail.find(prop);
          if (it != first_failure_detail.end()) {
            std::printf("      first: %s\n", it->second.c_str());
          }
        }
      }
    }
  }

  // Criterion 12: two identical CLI invocations produce byte-identical JSON.
  {
    bool pass = false;
    if (cli.empty()) {
      std::printf("FAIL  12. determinism: --cli not given, cannot invoke the binary\n");
    } else {
      int code1 = 0;
      int code2 = 0;
      std::string args = "verify --suite all --seed 42 --format json";
      std::string first = run_cli(cli, args, code1);
      std::string second = run_cli(cli, args, code2);
      pass = !first.empty() && first == second && code1 == 0 && code2 == 0;
      std::printf("%s  12. determinism: byte-identical JSON reports from repeated runs\n",
                  pass ? "PASS" : "FAIL");
    }
    if (!pass) ++failed_criteria;
  }

  if (failed_criteria > 0) {
    std::printf("%d criterion(s) failed\n", failed_criteria);
    return 1;
  }
  std::printf("all 12 criteria passed\n");
  return 0;
}
