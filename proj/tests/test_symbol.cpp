#include <catch2/catch_amalgamated.hpp>

#include <symalg/diff_operator.hpp>
#include <symalg/oracles.hpp>
#include <symalg/random_gen.hpp>
#include <symalg/symbol.hpp>

using namespace symalg;

namespace {

Polynomial x(int var) { return Polynomial::monomial(MultiIndex::unit(var), Rational(1)); }
PhasePolynomial xi(int var) { return xi_monomial(MultiIndex::unit(var)); }

DifferentialOperator d_op(int m, int n, int var, int power = 1) {
  DifferentialOperator t(m, n);
  t.add_term(MultiIndex::unit(var, power), identity_matrix<Polynomial>(n));
  return t;
}

SymbolElement sl_symbol(int m, int n, int degree, const Matrix<PhasePolynomial>& sl) {
  SymbolElement s(m, n);
  s.add_component(degree, sl, PhasePolynomial());
  return s;
}

Matrix<PhasePolynomial> e12_times(int n, const PhasePolynomial& p) {
  Matrix<PhasePolynomial> m(n);
  m.at(0, 1) = p;
  return m;
}

}  // namespace

TEST_CASE("component invariants are enforced") {
  SymbolElement s(2, 2);
  CHECK_THROWS_AS(s.add_component(0, e12_times(2, PhasePolynomial(Rational(1))), PhasePolynomial()),
                  InvariantViolation);  // no sl part at degree 0
  Matrix<PhasePolynomial> not_traceless(2);
  not_traceless.at(0, 0) = PhasePolynomial(Rational(1));
  CHECK_THROWS_AS(s.add_component(1, not_traceless, PhasePolynomial()), InvariantViolation);
  CHECK_THROWS_AS(s.add_component(1, Matrix<PhasePolynomial>(2), xi(0) * xi(0)),
                  InvariantViolation);  // scalar must be xi-homogeneous of degree 1
  CHECK_THROWS_AS(s.add_component(2, e12_times(2, to_phase(x(0))), PhasePolynomial()),
                  InvariantViolation);  // sl must be xi-homogeneous of degree 1
}

TEST_CASE("sigma_i on basic operators") {
  CHECK(sigma_i(d_op(1, 2, 0), 1) == scalar_symbol(1, 2, 1, xi(0)));

  DifferentialOperator e12d1(1, 2);
  e12d1.add_term(MultiIndex::unit(0), matrix_unit<Polynomial>(2, 0, 1));
  CHECK(sigma_i(e12d1, 2) == sl_symbol(1, 2, 2, e12_times(2, xi(0))));
  CHECK(sigma_i(e12d1, 3).is_zero());
  CHECK_THROWS_AS(sigma_i(e12d1, 1), Error);
  CHECK(sigma_i(DifferentialOperator(1, 2), 7).is_zero());
}

TEST_CASE("sigma_pson on gl operators") {
  Polynomial u = x(0) * x(0) + Polynomial(Rational(1));
  CHECK(sigma_pson(gamma(1, 2, u)) == scalar_symbol(1, 2, 0, to_phase(u)));

  DifferentialOperator e12(1, 2);
  e12.add_term(MultiIndex(), matrix_unit<Polynomial>(2, 0, 1));
  CHECK(sigma_pson(e12) == sl_symbol(1, 2, 1, e12_times(2, PhasePolynomial(Rational(1)))));

  DifferentialOperator diag13(1, 2);
  Matrix<Polynomial> d13(2);
  d13.at(0, 0) = Polynomial(Rational(1));
  d13.at(1, 1) = Polynomial(Rational(3));
  diag13.add_term(MultiIndex(), d13);
  Matrix<PhasePolynomial> expected(2);
  expected.at(0, 0) = PhasePolynomial(Rational(-1));
  expected.at(1, 1) = PhasePolynomial(Rational(1));
  CHECK(sigma_pson(diag13) == sl_symbol(1, 2, 1, expected));
  CHECK_THROWS_AS(sigma_pson(DifferentialOperator(1, 2)), Error);
}

TEST_CASE("lift produces canonical representatives") {
  SymbolElement p = sl_symbol(1, 2, 2, e12_times(2, xi(0)));
  DifferentialOperator expected(1, 2);
  expected.add_term(MultiIndex::unit(0), matrix_unit<Polynomial>(2, 0, 1));
  CHECK(lift(p, 2) == expected);

  SymbolElement q = scalar_symbol(1, 2, 2, xi(0) * xi(0));
  CHECK(lift(q, 2) == d_op(1, 2, 0, 2));
  CHECK(lift(SymbolElement(1, 2), 3).is_zero());
  CHECK_THROWS_AS(lift(p + q + scalar_symbol(1, 2, 0, PhasePolynomial(Rational(1))), 2),
                  InvariantViolation);
  CHECK(sigma_i(lift(p, 2), 2) == p);
}

TEST_CASE("symbol product examples") {
  SymbolElement e12 = sl_symbol(1, 2, 1, e12_times(2, PhasePolynomial(Rational(1))));
  Matrix<PhasePolynomial> e21(2);
  e21.at(1, 0) = PhasePolynomial(Rational(1));
  SymbolElement e21s = sl_symbol(1, 2, 1, e21);
  CHECK(symbol_product(e12, e21s).is_zero());

  SymbolElement x1s = scalar_symbol(1, 2, 0, to_phase(x(0)));
  CHECK(symbol_product(x1s, e12) == sl_symbol(1, 2, 1, e12_times(2, to_phase(x(0)))));

  // (E_12 xi1)_2 . (xi1)_1 = (E_12 xi1^2)_3, matching the operator route.
  SymbolElement a = sl_symbol(1, 2, 2, e12_times(2, xi(0)));
  SymbolElement b = scalar_symbol(1, 2, 1, xi(0));
  SymbolElement prod = symbol_product(a, b);
  CHECK(prod == sl_symbol(1, 2, 3, e12_times(2, xi(0) * xi(0))));
  CHECK(prod == sigma_i(compose(lift(a, 2), lift(b, 1)), 3));
}

TEST_CASE("symbol bracket examples") {
  SymbolElement xi1 = scalar_symbol(1, 2, 1, xi(0));
  SymbolElement x1s = scalar_symbol(1, 2, 0, to_phase(x(0)));
  CHECK(symbol_bracket(xi1, x1s) == constant_symbol(1, 2, Rational(1)));

  SymbolElement e12 = sl_symbol(1, 2, 1, e12_times(2, PhasePolynomial(Rational(1))));
  Matrix<PhasePolynomial> e21(2);
  e21.at(1, 0) = PhasePolynomial(Rational(1));
  SymbolElement e21s = sl_symbol(1, 2, 1, e21);
  Matrix<PhasePolynomial> h(2);
  h.at(0, 0) = PhasePolynomial(Rational(1));
  h.at(1, 1) = PhasePolynomial(Rational(-1));
  CHECK(symbol_bracket(e12, e21s) == sl_symbol(1, 2, 1, h));

  // {(xi1)_1, (x1 E_12)_1} = (E_12)_1, the class of [d1, x1 E_12].
  SymbolElement x1e12 = sl_symbol(1, 2, 1, e12_times(2, to_phase(x(0))));
  CHECK(symbol_bracket(xi1, x1e12) == e12);
  DifferentialOperator op_bracket = commutator(lift(xi1, 1), lift(x1e12, 1));
  CHECK(sigma_i(op_bracket, 1) == e12);
}

TEST_CASE("delta and theta") {
  SymbolElement a = sl_symbol(1, 2, 2, e12_times(2, xi(0)));
  CHECK(delta(a).is_zero());
  SymbolElement q = scalar_symbol(1, 2, 2, xi(0) * xi(0));
  CHECK(delta(q) == xi(0) * xi(0));
  SymbolElement mixed = sl_symbol(2, 2, 1, e12_times(2, PhasePolynomial(Rational(1)))) +
                        scalar_symbol(2, 2, 1, to_phase(x(1)) * xi(0)) +
                        constant_symbol(2, 2, Rational(5));
  CHECK(delta(mixed) == to_phase(x(1)) * xi(0) + PhasePolynomial(Rational(5)));

  Matrix<PhasePolynomial> sl = e12_times(2, xi(0));
  CHECK(theta(sl, 2, 1) == a);
  CHECK(delta(theta(sl, 2, 1)).is_zero());
  CHECK(theta(Matrix<PhasePolynomial>(2), 3, 1).is_zero());
  Matrix<PhasePolynomial> bad(2);
  bad.at(0, 0) = xi(0);
  CHECK_THROWS_AS(theta(bad, 2, 1), InvariantViolation);
}

TEST_CASE("square-zero membership and decomposition") {
  SymbolElement a = sl_symbol(1, 2, 2, e12_times(2, xi(0)));
  CHECK(j_membership(a));
  CHECK(symbol_product(a, a).is_zero());
  CHECK(!j_membership(scalar_symbol(1, 2, 1, xi(0))));
  CHECK(j_membership(SymbolElement(1, 2)));

  SymbolElement mixed = sl_symbol(1, 2, 1, e12_times(2, PhasePolynomial(Rational(1)))) +
                        scalar_symbol(1, 2, 1, to_phase(x(0)) * xi(0));
  SymbolDecomposition parts = decompose(mixed);
  CHECK(parts.j_part == sl_symbol(1, 2, 1, e12_times(2, PhasePolynomial(Rational(1)))));
  CHECK(parts.pol_part == scalar_symbol(1, 2, 1, to_phase(x(0)) * xi(0)));
  CHECK(parts.j_part + parts.pol_part == mixed);
}

TEST_CASE("inversion of u + f") {
  SymbolElement u = sl_symbol(1, 2, 2, e12_times(2, xi(0)));
  SymbolElement p = u + constant_symbol(1, 2, Rational(2));
  SymbolElement inv = invert(p);
  CHECK(inv == u.scaled(Rational(-1, 4)) + constant_symbol(1, 2, Rational(1, 2)));
  CHECK(symbol_product(p, inv) == constant_symbol(1, 2, Rational(1)));

  CHECK(invert(constant_symbol(1, 2, Rational(1))) == constant_symbol(1, 2, Rational(1)));

  try {
    invert(scalar_symbol(1, 2, 0, to_phase(x(0))));
    FAIL("x1 must not be invertible");
  } catch (const NotInvertibleError& e) {
    CHECK(e.reason() == NotInvertibleError::Reason::non_constant_scalar);
  }
  try {
    invert(u);
    FAIL("square-zero elements must not be invertible");
  } catch (const NotInvertibleError& e) {
    CHECK(e.reason() == NotInvertibleError::Reason::zero_scalar);
  }
}

TEST_CASE("bracket-lowering membership") {
  SymbolElement gl_part = sl_symbol(1, 2, 1, e12_times(2, to_phase(x(0))));
  CHECK(lowering_set_membership(gl_part, 3));
  CHECK(lowering_set_membership(scalar_symbol(1, 2, 2, xi(0) * xi(0)), 2));
  CHECK(!lowering_set_membership(scalar_symbol(1, 2, 1, xi(0)), 3));
  CHECK_THROWS_AS(lowering_set_membership(gl_part, -1), InvariantViolation);
}

TEST_CASE("well-definedness under representative changes") {
  GenDims dims{2, 2, 2, 3};
  for (int t = 0; t < 25; ++t) {
    Rng rng(derive_seed(31, "well-definedness", static_cast<std::uint64_t>(t)));
    int i = rng.range(0, 3);
    int j = rng.range(0, 3);
    SymbolElement p = random_homogeneous_symbol(rng, dims, i);
    SymbolElement q = random_homogeneous_symbol(rng, dims, j);
    DifferentialOperator tp = noisy_representative(rng, dims, p, i);
    DifferentialOperator tq = noisy_representative(rng, dims, q, j);
    REQUIRE(sigma_i(compose(tp, tq), i + j) == symbol_product(p, q));
    if (i + j >= 1) {
      REQUIRE(sigma_i(commutator(tp, tq), i + j - 1) == symbol_bracket(p, q));
    }
  }
}

TEST_CASE("randomized Poisson axioms and oracle equivalence") {
  GenDims dims{2, 2, 2, 2};
  for (int t = 0; t < 20; ++t) {
    Rng rng(derive_seed(37, "symbol-axioms", static_cast<std::uint64_t>(t)));
    SymbolElement p = random_symbol(rng, dims);
    SymbolElement q = random_symbol(rng, dims);
    SymbolElement r = random_symbol(rng, dims);
    REQUIRE(symbol_product(p, q) == symbol_product(q, p));
    REQUIRE(symbol_product(symbol_product(p, q), r) == symbol_product(p, symbol_product(q, r)));
    REQUIRE((symbol_bracket(p, q) + symbol_bracket(q, p)).is_zero());
    REQUIRE(symbol_bracket(p, symbol_product(q, r)) ==
            symbol_product(symbol_bracket(p, q), r) + symbol_product(q, symbol_bracket(p, r)));
    REQUIRE(symbol_product(p, q) == symbol_product_via_operators(p, q));
    REQUIRE(symbol_bracket(p, q) == symbol_bracket_via_operators(p, q));
    REQUIRE(delta(symbol_product(p, q)) == delta(p) * delta(q));
  }
}
