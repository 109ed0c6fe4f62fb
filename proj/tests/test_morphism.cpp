#include <catch2/catch_amalgamated.hpp>

#include <symalg/morphism.hpp>
#include <symalg/oracles.hpp>
#include <symalg/random_gen.hpp>

using namespace symalg;

namespace {

Polynomial x(int var) { return Polynomial::monomial(MultiIndex::unit(var), Rational(1)); }

MorphismSpec scaling_spec(const Rational& l, int n) {
  MorphismSpec spec = identity_spec(1, n);
  spec.L.at(0, 0) = l;
  return spec;
}

DifferentialOperator d_op(int m, int n, int var) {
  DifferentialOperator t(m, n);
  t.add_term(MultiIndex::unit(var), identity_matrix<Polynomial>(n));
  return t;
}

}  // namespace

TEST_CASE("identity spec fixes operators and symbols") {
  MorphismSpec id = identity_spec(2, 2);
  Rng rng(99);
  GenDims dims{2, 2, 2, 3};
  DifferentialOperator t = random_operator(rng, dims);
  SymbolElement p = random_symbol(rng, dims);
  CHECK(induce_on_operators(id, t) == t);
  CHECK(induce_on_symbols(id, p) == p);
}

TEST_CASE("constant gauge conjugates coefficients") {
  MorphismSpec spec = identity_spec(1, 2);
  spec.G.at(1, 1) = Rational(2);
  DifferentialOperator e12(1, 2);
  e12.add_term(MultiIndex(), matrix_unit<Polynomial>(2, 0, 1));
  DifferentialOperator expected(1, 2);
  expected.add_term(MultiIndex(), matrix_unit<Polynomial>(2, 0, 1, Rational(1, 2)));
  CHECK(induce_on_operators(spec, e12) == expected);  // G E_12 G^{-1}
}

TEST_CASE("affine base map transports derivations and coordinates") {
  MorphismSpec spec = scaling_spec(Rational(2), 2);
  // Pushing d1 forward along x -> 2x doubles it; gamma_{x_1} picks up x/2.
  DifferentialOperator image = induce_on_operators(spec, d_op(1, 2, 0));
  DifferentialOperator expected(1, 2);
  expected.add_term(MultiIndex::unit(0), scalar_matrix(2, Polynomial(Rational(2))));
  CHECK(image == expected);
  CHECK(induce_on_operators(spec, gamma(1, 2, x(0))) ==
        gamma(1, 2, x(0) * Rational(1, 2)));
  // The two transports cancel in [d, gamma_x] = id.
  CHECK(commutator(image, induce_on_operators(spec, gamma(1, 2, x(0)))) ==
        identity_operator(1, 2));

  SymbolElement xi1 = scalar_symbol(1, 2, 1, xi_monomial(MultiIndex::unit(0)));
  CHECK(induce_on_symbols(spec, xi1) ==
        scalar_symbol(1, 2, 1, xi_monomial(MultiIndex::unit(0)) * Rational(2)));
}

TEST_CASE("induced maps are algebra automorphisms of operators") {
  GenDims dims{2, 2, 2, 2};
  for (int t = 0; t < 15; ++t) {
    Rng rng(derive_seed(51, "induce-operators", static_cast<std::uint64_t>(t)));
    MorphismSpec spec = random_morphism_spec(rng, dims.m, dims.n);
    DifferentialOperator a = random_operator(rng, dims);
    DifferentialOperator b = random_operator(rng, dims);
    REQUIRE(induce_on_operators(spec, compose(a, b)) ==
            compose(induce_on_operators(spec, a), induce_on_operators(spec, b)));
    REQUIRE(induce_on_operators(spec, commutator(a, b)) ==
            commutator(induce_on_operators(spec, a), induce_on_operators(spec, b)));
    if (!a.is_zero()) {
      REQUIRE(pson_order(induce_on_operators(spec, a)) == pson_order(a));
      REQUIRE(diff_order(induce_on_operators(spec, a)) == diff_order(a));
      REQUIRE(induce_on_symbols(spec, sigma_pson(a)) ==
              sigma_pson(induce_on_operators(spec, a)));
    }
    Section s = random_section(rng, dims);
    REQUIRE(symalg::apply(induce_on_operators(spec, a), transform_section(spec, s)) ==
            transform_section(spec, symalg::apply(a, s)));
  }
}

TEST_CASE("functoriality and inverses") {
  GenDims dims{2, 3, 2, 2};
  for (int t = 0; t < 10; ++t) {
    Rng rng(derive_seed(53, "functoriality", static_cast<std::uint64_t>(t)));
    MorphismSpec s1 = random_morphism_spec(rng, dims.m, dims.n);
    MorphismSpec s2 = random_morphism_spec(rng, dims.m, dims.n);
    DifferentialOperator a = random_operator(rng, dims);
    REQUIRE(induce_on_operators(compose(s2, s1), a) ==
            induce_on_operators(s2, induce_on_operators(s1, a)));
    SymbolElement p = random_symbol(rng, dims);
    REQUIRE(induce_on_symbols(inverse(s1), induce_on_symbols(s1, p)) == p);
    REQUIRE(induce_on_symbols(s1, p) == induce_on_symbols_via_operators(s1, p));
  }
}

TEST_CASE("verification reports pass for genuine induced maps") {
  Rng rng(57);
  MorphismSpec spec = random_morphism_spec(rng, 2, 2);
  VerificationReport hom = verify_poisson_homomorphism(spec, 10, 5);
  CHECK(hom.all_passed());
  CHECK(hom.checks.size() == 2);
  CHECK(hom.find("product-preserved") != nullptr);
  VerificationReport str = verify_structure_preservation(spec, 10, 5);
  CHECK(str.all_passed());
  CHECK(str.checks.size() == 4);
  CHECK_THROWS_AS(verify_poisson_homomorphism(spec, 0, 5), InvariantViolation);
}

TEST_CASE("corrupted maps are caught with counterexamples") {
  GenDims dims{2, 2, 2, 3};
  MorphismSpec id = identity_spec(2, 2);

  SymbolMap base = induced_symbol_map(id);
  SymbolMap sl_doubler{[&base](const SymbolElement& p) {
                         SymbolElement moved = base.forward(p);
                         SymbolElement out(p.base_dim(), p.rank());
                         for (const auto& [k, c] : moved.components()) {
                           out.add_component(k, c.sl.scaled(Rational(2)), c.scalar);
                         }
                         return out;
                       },
                       base.backward};
  VerificationReport rep = verify_poisson_homomorphism_with(sl_doubler, dims, 20, 3);
  const CheckOutcome* product = rep.find("product-preserved");
  const CheckOutcome* bracket = rep.find("bracket-preserved");
  REQUIRE(product != nullptr);
  REQUIRE(bracket != nullptr);
  // Scaling the square-zero sector preserves products but not brackets.
  CHECK(product->failures == 0);
  CHECK(bracket->failures > 0);
  CHECK(bracket->counterexample.has_value());

  SymbolMap degree_shift{[](const SymbolElement& p) {
                           SymbolElement out(p.base_dim(), p.rank());
                           for (const auto& [k, c] : p.components()) {
                             if (k == 0) {
                               out.add_component(1, Matrix<PhasePolynomial>(p.rank()),
                                                 c.scalar * xi_monomial(MultiIndex::unit(0)));
                             } else {
                               out.add_component(k, c.sl, c.scalar);
                             }
                           }
                           return out;
                         },
                         [](const SymbolElement& p) { return p; }};
  VerificationReport str = verify_structure_preservation_with(degree_shift, dims, 20, 3);
  const CheckOutcome* deg0 = str.find("degree0-preserved");
  REQUIRE(deg0 != nullptr);
  CHECK(deg0->failures > 0);
  CHECK(deg0->counterexample.has_value());
}

TEST_CASE("spec validation") {
  MorphismSpec bad = identity_spec(2, 2);
  bad.L.at(0, 0) = Rational(0);
  bad.L.at(0, 1) = Rational(0);
  CHECK_THROWS_AS(validate_spec(bad), SingularMatrixError);
  MorphismSpec short_c = identity_spec(2, 2);
  short_c.c.pop_back();
  CHECK_THROWS_AS(validate_spec(short_c), DimensionMismatch);
}
