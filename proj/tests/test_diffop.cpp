#include <catch2/catch_amalgamated.hpp>

#include <symalg/diff_operator.hpp>
#include <symalg/oracles.hpp>
#include <symalg/random_gen.hpp>

using namespace symalg;

namespace {

Polynomial x(int var) { return Polynomial::monomial(MultiIndex::unit(var), Rational(1)); }

DifferentialOperator d_op(int m, int n, int var, int power = 1) {
  DifferentialOperator t(m, n);
  t.add_term(MultiIndex::unit(var, power), identity_matrix<Polynomial>(n));
  return t;
}

DifferentialOperator unit_op(int m, int n, int i, int j, const MultiIndex& alpha) {
  DifferentialOperator t(m, n);
  t.add_term(alpha, matrix_unit<Polynomial>(n, i, j));
  return t;
}

}  // namespace

TEST_CASE("gamma is multiplicative and order zero") {
  CHECK(gamma(2, 2, Polynomial()).is_zero());
  CHECK(gamma(2, 2, Polynomial(Rational(1))) == identity_operator(2, 2));
  CHECK(compose(gamma(2, 2, x(0)), gamma(2, 2, x(1))) == gamma(2, 2, x(0) * x(1)));
}

TEST_CASE("apply examples") {
  Section s = {x(0) * x(0), Polynomial()};
  Section ds = symalg::apply(d_op(1, 2, 0), s);
  CHECK(ds[0] == x(0) * Rational(2));
  CHECK(ds[1].is_zero());

  Polynomial u = x(0) + Polynomial(Rational(3));
  Section us = symalg::apply(gamma(1, 2, u), s);
  CHECK(us[0] == u * s[0]);
  CHECK(us[1].is_zero());

  // E_12 d1 on (0, x1) picks the second component and differentiates.
  Section t = {Polynomial(), x(0)};
  Section et = symalg::apply(unit_op(1, 2, 0, 1, MultiIndex::unit(0)), t);
  CHECK(et[0] == Polynomial(Rational(1)));
  CHECK(et[1].is_zero());

  CHECK_THROWS_AS(symalg::apply(d_op(1, 2, 0), Section{x(0)}), DimensionMismatch);
}

TEST_CASE("compose uses the Leibniz rule") {
  // d1 o gamma_x1 = gamma_x1 d1 + id.
  DifferentialOperator lhs = compose(d_op(1, 2, 0), gamma(1, 2, x(0)));
  DifferentialOperator rhs(1, 2);
  rhs.add_term(MultiIndex::unit(0), scalar_matrix(2, x(0)));
  rhs.add_term(MultiIndex(), identity_matrix<Polynomial>(2));
  CHECK(lhs == rhs);

  // (E_12 d1) o (E_21 d1) = E_11 d1^2, cross-checked on random sections.
  DifferentialOperator a = unit_op(1, 2, 0, 1, MultiIndex::unit(0));
  DifferentialOperator b = unit_op(1, 2, 1, 0, MultiIndex::unit(0));
  DifferentialOperator prod = compose(a, b);
  CHECK(prod == unit_op(1, 2, 0, 0, MultiIndex::unit(0, 2)));
  GenDims dims{1, 2, 2, 2};
  for (int t = 0; t < 20; ++t) {
    Rng rng(derive_seed(3, "compose-oracle", static_cast<std::uint64_t>(t)));
    Section s = random_section(rng, dims);
    REQUIRE(symalg::apply(prod, s) == symalg::apply(a, symalg::apply(b, s)));
  }

  DifferentialOperator t = unit_op(2, 2, 0, 1, MultiIndex({1, 1}));
  CHECK(compose(t, identity_operator(2, 2)) == t);
  CHECK_THROWS_AS(compose(t, identity_operator(2, 3)), DimensionMismatch);
}

TEST_CASE("commutator examples") {
  CHECK(commutator(d_op(1, 2, 0), gamma(1, 2, x(0))) == identity_operator(1, 2));
  Polynomial u = x(0) * x(0) + Polynomial(Rational(2));
  CHECK(commutator(gamma(2, 2, u), gamma(2, 2, x(1))).is_zero());
  // [E_12 d1, gamma_x1] = E_12.
  CHECK(commutator(unit_op(1, 2, 0, 1, MultiIndex::unit(0)), gamma(1, 2, x(0))) ==
        unit_op(1, 2, 0, 1, MultiIndex()));
}

TEST_CASE("differential and quantum-Poisson orders") {
  CHECK(!diff_order(DifferentialOperator(2, 2)));
  CHECK(!pson_order(DifferentialOperator(2, 2)));
  CHECK(*diff_order(gamma(2, 2, x(0))) == 0);
  CHECK(*pson_order(gamma(2, 2, x(0))) == 0);
  CHECK(*diff_order(d_op(1, 2, 0, 2)) == 2);
  CHECK(*pson_order(d_op(1, 2, 0, 2)) == 2);

  DifferentialOperator e12 = unit_op(1, 2, 0, 1, MultiIndex());
  CHECK(*diff_order(e12) == 0);
  CHECK(*pson_order(e12) == 1);

  DifferentialOperator e12d1 = unit_op(1, 2, 0, 1, MultiIndex::unit(0));
  CHECK(*pson_order(e12d1) == 2);

  // Scalar top with a matrix tail keeps the usual order.
  DifferentialOperator mixed = d_op(1, 2, 0, 2) + e12d1;
  CHECK(*pson_order(mixed) == 2);
}

TEST_CASE("filtration membership against the commutator oracle") {
  DifferentialOperator d1sq = d_op(1, 2, 0, 2);
  CHECK(in_P_k(d1sq, 2));
  CHECK(in_P_k_commutator_oracle(d1sq, 2));

  DifferentialOperator e12d1 = unit_op(2, 2, 0, 1, MultiIndex::unit(0));
  CHECK(!in_P_k(e12d1, 1));
  CHECK(!in_P_k_commutator_oracle(e12d1, 1));
  CHECK(in_P_k(e12d1, 2));
  CHECK(in_P_k_commutator_oracle(e12d1, 2));
  CHECK(in_D_k(e12d1, 1));
  CHECK(in_D_k_commutator_oracle(e12d1, 1));
  CHECK(!in_D_k(e12d1, 0));

  CHECK(in_P_k(DifferentialOperator(2, 2), -5));  // the zero operator sits in every P^k

  GenDims dims{2, 2, 1, 2};
  for (int t = 0; t < 25; ++t) {
    Rng rng(derive_seed(11, "membership-oracle", static_cast<std::uint64_t>(t)));
    DifferentialOperator op = random_nonzero_operator(rng, dims);
    int k = *pson_order(op);
    REQUIRE(in_P_k(op, k));
    REQUIRE(in_P_k_commutator_oracle(op, k));
    REQUIRE(!in_P_k(op, k - 1));
    REQUIRE(!in_P_k_commutator_oracle(op, k - 1));
  }
}

TEST_CASE("randomized operator laws") {
  GenDims dims{2, 2, 2, 2};
  for (int t = 0; t < 25; ++t) {
    Rng rng(derive_seed(23, "operator-laws", static_cast<std::uint64_t>(t)));
    DifferentialOperator a = random_operator(rng, dims);
    DifferentialOperator b = random_operator(rng, dims);
    DifferentialOperator c = random_operator(rng, dims);
    REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
    REQUIRE(commutator(commutator(a, b), c) + commutator(commutator(b, c), a) +
                commutator(commutator(c, a), b) ==
            DifferentialOperator(2, 2));
    Section s = random_section(rng, dims);
    REQUIRE(symalg::apply(compose(a, b), s) == symalg::apply(a, symalg::apply(b, s)));
    if (!a.is_zero() && !b.is_zero()) {
      auto prod_ord = pson_order(compose(a, b));
      auto br_ord = pson_order(commutator(a, b));
      REQUIRE((!prod_ord || *prod_ord <= *pson_order(a) + *pson_order(b)));
      REQUIRE((!br_ord || *br_ord <= *pson_order(a) + *pson_order(b) - 1));
      REQUIRE(*pson_order(a) <= *diff_order(a) + 1);
    }
  }
}
