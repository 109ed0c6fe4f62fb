#include <catch2/catch_amalgamated.hpp>

#include <symalg/json_io.hpp>
#include <symalg/morphism.hpp>
#include <symalg/random_gen.hpp>

using namespace symalg;

namespace {

Polynomial x(int var) { return Polynomial::monomial(MultiIndex::unit(var), Rational(1)); }

}  // namespace

TEST_CASE("canonical polynomial strings") {
  PhasePolynomial p;
  p.add_term({MultiIndex({2}), MultiIndex({1})}, Rational(3, 2));
  p.add_term({MultiIndex(), MultiIndex()}, Rational(-1));
  CHECK(to_string(p) == "3/2 x1^2 xi1 - 1");
  CHECK(parse_phase_polynomial("3/2 x1^2 xi1 - 1") == p);

  CHECK(to_string(Polynomial()) == "0");
  CHECK(parse_polynomial("0").is_zero());
  CHECK(to_string(x(0) * x(0) - Polynomial(Rational(1))) == "x1^2 - 1");
  CHECK(to_string(-x(1)) == "-x2");
  CHECK(parse_polynomial("-x2") == -x(1));
  CHECK(parse_phase_polynomial("xi2^3") ==
        PhasePolynomial::monomial({MultiIndex(), MultiIndex({0, 3})}, Rational(1)));
  CHECK(parse_polynomial("x1 x1") == x(0) * x(0));
  CHECK(parse_phase_polynomial("2 x1 + x1") == to_phase(x(0) * Rational(3)));

  CHECK_THROWS_AS(parse_polynomial("xi1"), ParseError);     // no fiber variables on the base
  CHECK_THROWS_AS(parse_polynomial(""), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("y1"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0"), ParseError);      // variables are 1-based
  CHECK_THROWS_AS(parse_polynomial("x1^"), ParseError);
}

TEST_CASE("string round trip on random polynomials") {
  GenDims dims{2, 2, 3, 3};
  for (int t = 0; t < 60; ++t) {
    Rng rng(derive_seed(61, "string-roundtrip", static_cast<std::uint64_t>(t)));
    PhasePolynomial p = random_phase_polynomial(rng, dims, 3, 5);
    REQUIRE(parse_phase_polynomial(to_string(p)) == p);
    Polynomial q = random_polynomial(rng, dims.m, dims.max_xdeg, 5);
    REQUIRE(parse_polynomial(to_string(q)) == q);
  }
}

TEST_CASE("operator JSON round trip and schema validation") {
  DifferentialOperator t(2, 2);
  t.add_term(MultiIndex::unit(0), matrix_unit<Polynomial>(2, 0, 1));
  t.add_term(MultiIndex(), scalar_matrix(2, x(1)));
  ojson j = to_json(t);
  CHECK(j["m"] == 2);
  CHECK(j["terms"].size() == 2);
  CHECK(j["terms"][0]["alpha"] == ojson::array({0, 0}));  // graded-lex ascending
  CHECK(operator_from_json(json::parse(j.dump())) == t);

  json bad = json::parse(j.dump());
  bad["bogus"] = 1;
  CHECK_THROWS_WITH(operator_from_json(bad), Catch::Matchers::ContainsSubstring("$.bogus"));

  json short_alpha = json::parse(j.dump());
  short_alpha["terms"][0]["alpha"] = json::array({0});
  CHECK_THROWS_WITH(operator_from_json(short_alpha),
                    Catch::Matchers::ContainsSubstring("terms[0].alpha"));

  json dup = json::parse(j.dump());
  dup["terms"][1]["alpha"] = dup["terms"][0]["alpha"];
  CHECK_THROWS_WITH(operator_from_json(dup), Catch::Matchers::ContainsSubstring("duplicate"));

  json bad_poly = json::parse(j.dump());
  bad_poly["terms"][0]["coeff"][0][0] = "xi1";
  CHECK_THROWS_WITH(operator_from_json(bad_poly),
                    Catch::Matchers::ContainsSubstring("coeff[0][0]"));
}

TEST_CASE("symbol JSON round trip and invariant rejection") {
  SymbolElement s(2, 2);
  Matrix<PhasePolynomial> sl(2);
  sl.at(0, 1) = xi_monomial(MultiIndex::unit(1));
  s.add_component(2, sl, to_phase(x(0)) * xi_monomial(MultiIndex::unit(0, 2)));
  s.add_component(0, Matrix<PhasePolynomial>(2), to_phase(x(0)));
  ojson j = to_json(s);
  CHECK(j["components"][0]["degree"] == 0);  // degrees ascending
  CHECK(symbol_from_json(json::parse(j.dump())) == s);

  json bad_trace = json::parse(j.dump());
  bad_trace["components"][1]["sl"][0][0] = "xi2";
  CHECK_THROWS_WITH(symbol_from_json(bad_trace),
                    Catch::Matchers::ContainsSubstring("traceless"));

  json bad_hom = json::parse(j.dump());
  bad_hom["components"][1]["scalar"] = "xi1";
  CHECK_THROWS_WITH(symbol_from_json(bad_hom),
                    Catch::Matchers::ContainsSubstring("xi-homogeneous"));

  json bad_degree = json::parse(j.dump());
  bad_degree["components"][0]["degree"] = -1;
  CHECK_THROWS_AS(symbol_from_json(bad_degree), ParseError);
}

TEST_CASE("gl and morphism JSON round trips") {
  GlSymbol g(2, matrix_unit<Polynomial>(2, 0, 1), x(0) + Polynomial(Rational(2)));
  CHECK(gl_from_json(json::parse(to_json(g).dump())) == g);

  json bad = json::parse(to_json(g).dump());
  bad["A"][0][0] = "1";
  CHECK_THROWS_WITH(gl_from_json(bad), Catch::Matchers::ContainsSubstring("$.A"));

  Rng rng(7);
  MorphismSpec spec = random_morphism_spec(rng, 2, 3);
  MorphismSpec back = morphism_from_json(json::parse(to_json(spec).dump()));
  CHECK(back.L == spec.L);
  CHECK(back.c == spec.c);
  CHECK(back.G == spec.G);

  json singular = json::parse(to_json(identity_spec(2, 2)).dump());
  singular["L"] = json::array({json::array({"0", "0"}), json::array({"0", "0"})});
  CHECK_THROWS_WITH(morphism_from_json(singular),
                    Catch::Matchers::ContainsSubstring("singular"));
}

TEST_CASE("random serialization round trips") {
  GenDims dims{2, 3, 2, 3};
  for (int t = 0; t < 30; ++t) {
    Rng rng(derive_seed(67, "json-roundtrip", static_cast<std::uint64_t>(t)));
    DifferentialOperator op = random_operator(rng, dims);
    REQUIRE(operator_from_json(json::parse(to_json(op).dump())) == op);
    SymbolElement sym = random_symbol(rng, dims);
    REQUIRE(symbol_from_json(json::parse(to_json(sym).dump())) == sym);
    // Canonical text is stable: serialize(deserialize(t)) == t.
    ojson once = to_json(sym);
    REQUIRE(to_json(symbol_from_json(json::parse(once.dump()))).dump() == once.dump());
  }
}
