#include <cstdlib>

#include <catch2/catch_amalgamated.hpp>

#include <symalg/random_gen.hpp>
#include <symalg/suites.hpp>

using namespace symalg;

TEST_CASE("generators are deterministic under a fixed seed") {
  GenDims dims{2, 2, 2, 3};
  Rng a(12345);
  Rng b(12345);
  CHECK(random_operator(a, dims) == random_operator(b, dims));
  CHECK(random_symbol(a, dims) == random_symbol(b, dims));
  CHECK(random_rational(a) == random_rational(b));
}

TEST_CASE("generator shapes") {
  GenDims dims{2, 2, 2, 0};
  Rng rng(5);
  // max_order 0 with forced scalar coefficients produces a gamma_u.
  for (int t = 0; t < 10; ++t) {
    DifferentialOperator op = random_operator(rng, dims, true);
    REQUIRE((op.is_zero() || (*diff_order(op) == 0 && *pson_order(op) == 0)));
  }
  GenDims full{2, 3, 2, 3};
  for (int t = 0; t < 10; ++t) {
    SymbolElement s = random_symbol(rng, full);       // add_component validates invariants
    REQUIRE(!s.is_zero());
    SymbolElement j = random_j_element(rng, full);
    REQUIRE(j_membership(j));
  }
}

TEST_CASE("suite catalogue") {
  CHECK(suite_names().size() == 9);
  for (const std::string& name : suite_names()) {
    CHECK(!properties_for(name).empty());
  }
  CHECK_THROWS_WITH(properties_for("bogus"), Catch::Matchers::ContainsSubstring("unknown suite"));
  SuiteConfig bad;
  bad.suite = "bogus";
  CHECK_THROWS_AS(run_suite(bad), Error);
  SuiteConfig low_rank;
  low_rank.n = 1;
  CHECK_THROWS_AS(run_suite(low_rank), Error);
}

TEST_CASE("run_suite is deterministic byte for byte") {
  SuiteConfig cfg;
  cfg.suite = "ideal";
  cfg.trials = 6;
  cfg.seed = 42;
  Report first = run_suite(cfg);
  Report second = run_suite(cfg);
  CHECK(report_to_json(first).dump(2) == report_to_json(second).dump(2));
  CHECK(first.total_failures == 0);

  // Thread count must not change the report.
  setenv("VERIFY_THREADS", "1", 1);
  Report serial = run_suite(cfg);
  unsetenv("VERIFY_THREADS");
  CHECK(report_to_json(serial).dump(2) == report_to_json(first).dump(2));
}

TEST_CASE("reports carry counterexamples and failure counts") {
  SuiteConfig cfg;
  cfg.suite = "ideal";
  cfg.trials = 4;
  cfg.seed = 9;
  PropertySpec failing{"always-fails",
                       [](const GenDims&, std::uint64_t seed) -> std::optional<ojson> {
                         return ojson{{"seed", seed}};
                       },
                       0};
  PropertyOutcome outcome = run_property(failing, cfg);
  CHECK(outcome.failures == 4);
  CHECK(outcome.trials == 4);
  REQUIRE(outcome.counterexample.has_value());
  // Lexicographically first counterexample: the one of the lowest trial index.
  CHECK((*outcome.counterexample)["seed"] == derive_seed(9, "always-fails", 0));

  PropertySpec throwing{"throws",
                        [](const GenDims&, std::uint64_t) -> std::optional<ojson> {
                          throw Error("boom");
                        },
                        0};
  PropertyOutcome thrown = run_property(throwing, cfg);
  CHECK(thrown.failures == 4);
  CHECK((*thrown.counterexample)["exception"] == "boom");
}

TEST_CASE("report serialization shape") {
  SuiteConfig cfg;
  cfg.suite = "inverse";
  cfg.trials = 3;
  cfg.seed = 1;
  Report r = run_suite(cfg);
  ojson j = report_to_json(r);
  CHECK(j["suite"] == "inverse");
  CHECK(j["config"]["trials"] == 3);
  CHECK(j["config"]["seed"] == 1);
  CHECK(!j.contains("seconds"));  // timing never enters the canonical report
  CHECK(j["total_failures"] == 0);
  for (const auto& prop : j["properties"]) {
    CHECK(prop.contains("name"));
    CHECK(prop.contains("trials"));
    CHECK(prop.contains("failures"));
    CHECK(prop.contains("counterexample"));
  }
  std::string text = report_to_text(r);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("total failures: 0") != std::string::npos);
}

TEST_CASE("suite all concatenates every suite") {
  SuiteConfig cfg;
  cfg.suite = "all";
  cfg.trials = 1;
  cfg.seed = 3;
  Report r = run_suite(cfg);
  CHECK(r.total_failures == 0);
  std::size_t expected = 0;
  for (const std::string& name : suite_names()) expected += properties_for(name).size();
  CHECK(r.properties.size() == expected);
  CHECK(r.properties.front().name.rfind("operator-laws/", 0) == 0);
}
