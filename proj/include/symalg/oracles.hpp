#ifndef SYMALG_ORACLES_HPP
#define SYMALG_ORACLES_HPP

#include <vector>

#include "symalg/diff_operator.hpp"
#include "symalg/random_gen.hpp"
#include "symalg/symbol.hpp"

namespace symalg {

// Independent recomputation routes for the harness: everything here goes
// through compose/commutator/apply rather than the closed forms it checks.

// Coordinates and their pairwise products. Brackets with gamma_u are linear in
// the first derivatives of u with polynomial multipliers, so this finite set
// decides the recursive filtration conditions for polynomial operators.
inline std::vector<Polynomial> coordinate_test_set(int m) {
  std::vector<Polynomial> fns;
  for (int a = 0; a < m; ++a) {
    fns.push_back(Polynomial::monomial(MultiIndex::unit(a), Rational(1)));
  }
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      fns.push_back(Polynomial::monomial(MultiIndex::unit(a) + MultiIndex::unit(b), Rational(1)));
    }
  }
  return fns;
}

inline bool is_gamma_form(const DifferentialOperator& t) {
  if (t.is_zero()) return true;
  auto d = diff_order(t);
  return *d == 0 && is_scalar_matrix(t.terms().begin()->second);
}

// Recursive membership in P^k straight from the definition: P^0 holds the
// multiplication operators, and T lies in P^{k} iff [T, gamma_u] lies in
// P^{k-1} for every test function u.
inline bool in_P_k_commutator_oracle(const DifferentialOperator& t, int k) {
  if (t.is_zero()) return true;
  if (k < 0) return false;
  if (k == 0) return is_gamma_form(t);
  for (const Polynomial& u : coordinate_test_set(t.base_dim())) {
    DifferentialOperator bracket = commutator(t, gamma(t.base_dim(), t.rank(), u));
    if (!in_P_k_commutator_oracle(bracket, k - 1)) return false;
  }
  return true;
}

// Same recursion for the usual filtration D^k, whose floor is the operators
// commuting with every gamma_u (pointwise matrix multiplications).
inline bool in_D_k_commutator_oracle(const DifferentialOperator& t, int k) {
  if (t.is_zero()) return true;
  if (k < 0) return false;
  if (k == 0) {
    auto d = diff_order(t);
    return *d == 0;
  }
  for (const Polynomial& u : coordinate_test_set(t.base_dim())) {
    DifferentialOperator bracket = commutator(t, gamma(t.base_dim(), t.rank(), u));
    if (!in_D_k_commutator_oracle(bracket, k - 1)) return false;
  }
  return true;
}

// sigma_{i+j}(T o D) extended bilinearly over the components of P and Q.
inline SymbolElement symbol_product_via_operators(const SymbolElement& p,
                                                  const SymbolElement& q) {
  p.check_dims(q);
  SymbolElement out(p.base_dim(), p.rank());
  for (const auto& [i, pc] : p.components()) {
    SymbolElement hp(p.base_dim(), p.rank());
    hp.add_component(i, pc.sl, pc.scalar);
    DifferentialOperator tp = lift(hp, i);
    for (const auto& [j, qc] : q.components()) {
      SymbolElement hq(q.base_dim(), q.rank());
      hq.add_component(j, qc.sl, qc.scalar);
      out += sigma_i(compose(tp, lift(hq, j)), i + j);
    }
  }
  return out;
}

// sigma_{i+j-1}([T, D]) extended bilinearly.
inline SymbolElement symbol_bracket_via_operators(const SymbolElement& p,
                                                  const SymbolElement& q) {
  p.check_dims(q);
  SymbolElement out(p.base_dim(), p.rank());
  for (const auto& [i, pc] : p.components()) {
    SymbolElement hp(p.base_dim(), p.rank());
    hp.add_component(i, pc.sl, pc.scalar);
    DifferentialOperator tp = lift(hp, i);
    for (const auto& [j, qc] : q.components()) {
      SymbolElement hq(q.base_dim(), q.rank());
      hq.add_component(j, qc.sl, qc.scalar);
      DifferentialOperator bracket = commutator(tp, lift(hq, j));
      if (i + j - 1 < 0) {
        // gamma's commute; the bracket must vanish identically.
        if (!bracket.is_zero()) throw InvariantViolation("degree-0 operators failed to commute");
        continue;
      }
      out += sigma_i(bracket, i + j - 1);
    }
  }
  return out;
}

// Random operator of quantum-Poisson order at most `bound`: arbitrary matrix
// coefficients strictly below, scalarized coefficients at |alpha| = bound.
inline DifferentialOperator random_operator_in_P(Rng& rng, const GenDims& dims, int bound) {
  DifferentialOperator out(dims.m, dims.n);
  if (bound < 0) return out;
  GenDims capped = dims;
  capped.max_order = bound;
  DifferentialOperator raw = random_operator(rng, capped);
  for (const auto& [alpha, coeff] : raw.terms()) {
    if (alpha.total() == bound) {
      out.add_term(alpha, scalar_matrix(dims.n, coeff.trace() * Rational(1, dims.n)));
    } else {
      out.add_term(alpha, coeff);
    }
  }
  return out;
}

// A representative of a homogeneous symbol: the canonical lift plus random
// lower-order noise, for well-definedness checks.
inline DifferentialOperator noisy_representative(Rng& rng, const GenDims& dims,
                                                 const SymbolElement& p, int degree) {
  return lift(p, degree) + random_operator_in_P(rng, dims, degree - 1);
}

}  // namespace symalg

#endif  // SYMALG_ORACLES_HPP
