// Command-line driver: seeded property suites and ad-hoc exact computations
// on differential operators and their symbols.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <symalg/symalg.hpp>

namespace {

int run_verify(const symalg::SuiteConfig& cfg) {
  symalg::Report report = symalg::run_suite(cfg);
  if (cfg.format == "json") {
    std::cout << symalg::report_to_json(report).dump(2) << "\n";
  } else {
    std::cout << symalg::report_to_text(report);
  }
  return report.total_failures == 0 ? 0 : 1;
}

symalg::json load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw symalg::Error("cannot open input file '" + path + "'");
  symalg::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw symalg::ParseError(path, e.what());
  }
  return j;
}

const symalg::json& field(const symalg::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw symalg::ParseError(std::string("$.") + key, "missing field");
  }
  return *it;
}

int run_compute(const std::string& input_path, const std::string& op) {
  using namespace symalg;
  json in = load_input(input_path);
  ojson out;
  if (op == "compose" || op == "bracket") {
    if (in.contains("T") || in.contains("D")) {
      DifferentialOperator t = operator_from_json(field(in, "T"), "$.T");
      DifferentialOperator d = operator_from_json(field(in, "D"), "$.D");
      out = to_json(op == "compose" ? compose(t, d) : commutator(t, d));
    } else if (op == "bracket") {
      SymbolElement p = symbol_from_json(field(in, "P"), "$.P");
      SymbolElement q = symbol_from_json(field(in, "Q"), "$.Q");
      out = to_json(symbol_bracket(p, q));
    } else {
      throw ParseError("$", "compose expects operator fields T and D");
    }
  } else if (op == "sigma") {
    DifferentialOperator t = operator_from_json(field(in, "T"), "$.T");
    if (in.contains("i")) {
      out = to_json(sigma_i(t, in["i"].get<int>()));
    } else {
      out = to_json(sigma_pson(t));
    }
  } else if (op == "product") {
    SymbolElement p = symbol_from_json(field(in, "P"), "$.P");
    SymbolElement q = symbol_from_json(field(in, "Q"), "$.Q");
    out = to_json(symbol_product(p, q));
  } else if (op == "invert") {
    out = to_json(invert(symbol_from_json(field(in, "P"), "$.P")));
  } else if (op == "delta") {
    SymbolElement p = symbol_from_json(field(in, "P"), "$.P");
    out = ojson{{"m", p.base_dim()}, {"value", to_string(delta(p))}};
  } else if (op == "decompose") {
    SymbolDecomposition parts = decompose(symbol_from_json(field(in, "P"), "$.P"));
    out = ojson{{"j_part", to_json(parts.j_part)}, {"pol_part", to_json(parts.pol_part)}};
  } else {
    throw Error("unknown op '" + op + "'");
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbol calculus for matrix differential operators"};
  app.require_subcommand(1);

  symalg::SuiteConfig cfg;
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("--suite", cfg.suite,
                     "operator-laws, symbol-laws, oracle-equivalence, ideal, inverse, "
                     "exact-sequence, filtration-lemma, gl-case, morphism or all");
  verify->add_option("--seed", cfg.seed, "master seed");
  verify->add_option("--base-dim", cfg.m, "base dimension m");
  verify->add_option("--rank", cfg.n, "fiber rank n (>= 2)");
  verify->add_option("--max-xdeg", cfg.max_xdeg, "max x-degree of generated coefficients");
  verify->add_option("--max-order", cfg.max_order, "max derivative order of generated operators");
  verify->add_option("--trials", cfg.trials, "trials per property");
  verify->add_option("--format", cfg.format, "json or text");

  std::string input_path;
  std::string op;
  auto* compute = app.add_subcommand("compute", "one exact computation from a JSON file");
  compute->add_option("--input", input_path, "input JSON file")->required();
  compute->add_option("--op", op, "compose, bracket, sigma, product, invert, delta or decompose")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify(cfg);
    return run_compute(input_path, op);
  } catch (const symalg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
