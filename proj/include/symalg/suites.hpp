#ifndef SYMALG_SUITES_HPP
#define SYMALG_SUITES_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "symalg/diff_operator.hpp"
#include "symalg/gl_symbol.hpp"
#include "symalg/json_io.hpp"
#include "symalg/morphism.hpp"
#include "symalg/oracles.hpp"
#include "symalg/random_gen.hpp"
#include "symalg/symbol.hpp"

namespace symalg {

struct SuiteConfig {
  std::string suite = "all";
  int m = 2;
  int n = 2;
  int max_xdeg = 2;
  int max_order = 3;
  int trials = 200;
  std::uint64_t seed = 0;
  std::string format = "text";
};

inline void validate_config(const SuiteConfig& cfg) {
  if (cfg.m < 1) throw Error("base dimension must be >= 1");
  if (cfg.n < 2) throw Error("rank must be >= 2");
  if (cfg.trials < 1) throw Error("trials must be >= 1");
  if (cfg.max_xdeg < 0 || cfg.max_order < 0) throw Error("degree bounds must be >= 0");
  if (cfg.format != "json" && cfg.format != "text") throw Error("format must be json or text");
}

struct PropertyOutcome {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::optional<ojson> counterexample;
};

struct Report {
  std::string suite;
  SuiteConfig config;
  std::vector<PropertyOutcome> properties;
  int total_failures = 0;
  double seconds = 0.0;
};

// A property returns nothing on success and a counterexample object on
// failure; it draws all randomness from the per-trial seed.
using PropertyFn = std::function<std::optional<ojson>(const GenDims&, std::uint64_t)>;

struct PropertySpec {
  std::string name;
  PropertyFn fn;
  int trials = 0;  // 0: the configured count; else a cap on it
};

inline int thread_budget() {
  if (const char* env = std::getenv("VERIFY_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

template <class Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

namespace suites_detail {

inline ojson cx(std::initializer_list<std::pair<std::string, ojson>> fields) {
  ojson out;
  for (const auto& [k, v] : fields) out[k] = v;
  return out;
}

// ---- operator-laws ---------------------------------------------------------

inline std::optional<ojson> poly_ring_axioms(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  Polynomial p = random_polynomial(rng, d.m, d.max_xdeg);
  Polynomial q = random_polynomial(rng, d.m, d.max_xdeg);
  Polynomial r = random_polynomial(rng, d.m, d.max_xdeg);
  bool ok = (p + q) + r == p + (q + r) && p + q == q + p && p * q == q * p &&
            (p * q) * r == p * (q * r) && p * (q + r) == p * q + p * r;
  PhasePolynomial f = random_phase_polynomial(rng, d, 2);
  PhasePolynomial g = random_phase_polynomial(rng, d, 2);
  PhasePolynomial h = random_phase_polynomial(rng, d, 2);
  ok = ok && (f + g) + h == f + (g + h) && f * g == g * f && (f * g) * h == f * (g * h) &&
       f * (g + h) == f * g + f * h;
  if (ok) return std::nullopt;
  return cx({{"p", to_string(p)}, {"q", to_string(q)}, {"r", to_string(r)},
             {"f", to_string(f)}, {"g", to_string(g)}, {"h", to_string(h)}});
}

inline std::optional<ojson> matrix_ring_axioms(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  Matrix<Polynomial> a = random_matrix_polynomial(rng, d);
  Matrix<Polynomial> b = random_matrix_polynomial(rng, d);
  Matrix<Polynomial> c = random_matrix_polynomial(rng, d);
  bool ok = (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
            (a + b) * c == a * c + b * c && (a * b).trace() == (b * a).trace();
  if (ok) return std::nullopt;
  return cx({{"detail", "matrix ring axiom failed"}});
}

inline std::optional<ojson> trace_decomposition(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  Matrix<Polynomial> m = random_matrix_polynomial(rng, d);
  Matrix<Polynomial> t = traceless_part(m);
  Polynomial u = random_polynomial(rng, d.m, d.max_xdeg);
  bool ok = t.trace().is_zero() &&
            t + scalar_matrix(d.n, m.trace() * Rational(1, d.n)) == m &&
            traceless_part(t) == t && traceless_part(scalar_matrix(d.n, u)).is_zero();
  if (ok) return std::nullopt;
  return cx({{"detail", "trace decomposition failed"}});
}

inline std::optional<ojson> canonical_bracket_laws(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  PhasePolynomial f = random_phase_polynomial(rng, d, 2);
  PhasePolynomial g = random_phase_polynomial(rng, d, 2);
  PhasePolynomial h = random_phase_polynomial(rng, d, 2);
  PhasePolynomial jac = canonical_bracket(canonical_bracket(f, g), h) +
                        canonical_bracket(canonical_bracket(g, h), f) +
                        canonical_bracket(canonical_bracket(h, f), g);
  bool ok = canonical_bracket(f, f).is_zero() &&
            (canonical_bracket(f, g) + canonical_bracket(g, f)).is_zero() && jac.is_zero() &&
            canonical_bracket(f, g * h) ==
                canonical_bracket(f, g) * h + g * canonical_bracket(f, h);
  if (ok) return std::nullopt;
  return cx({{"f", to_string(f)}, {"g", to_string(g)}, {"h", to_string(h)}});
}

inline std::optional<ojson> compose_associative(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  DifferentialOperator t = random_operator(rng, d);
  DifferentialOperator u = random_operator(rng, d);
  DifferentialOperator v = random_operator(rng, d);
  if (compose(compose(t, u), v) == compose(t, compose(u, v))) return std::nullopt;
  return cx({{"T", to_json(t)}, {"D", to_json(u)}, {"E", to_json(v)}});
}

inline std::optional<ojson> apply_compose_consistency(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  DifferentialOperator t = random_operator(rng, d);
  DifferentialOperator u = random_operator(rng, d);
  Section s = random_section(rng, d);
  if (symalg::apply(compose(t, u), s) == symalg::apply(t, symalg::apply(u, s))) return std::nullopt;
  return cx({{"T", to_json(t)}, {"D", to_json(u)}});
}

inline std::optional<ojson> commutator_jacobi(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  DifferentialOperator t = random_operator(rng, d, false, 2);
  DifferentialOperator u = random_operator(rng, d, false, 2);
  DifferentialOperator v = random_operator(rng, d, false, 2);
  DifferentialOperator jac = commutator(commutator(t, u), v) + commutator(commutator(u, v), t) +
                             commutator(commutator(v, t), u);
  if (jac.is_zero()) return std::nullopt;
  return cx({{"T", to_json(t)}, {"D", to_json(u)}, {"E", to_json(v)}});
}

inline std::optional<ojson> gamma_laws(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  Polynomial u = random_polynomial(rng, d.m, d.max_xdeg);
  Polynomial v = random_polynomial(rng, d.m, d.max_xdeg);
  Section s = random_section(rng, d);
  DifferentialOperator gu = gamma(d.m, d.n, u);
  DifferentialOperator gv = gamma(d.m, d.n, v);
  Section us(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) us[i] = u * s[i];
  bool ok = compose(gu, gv) == gamma(d.m, d.n, u * v) && commutator(gu, gv).is_zero() &&
            symalg::apply(gu, s) == us;
  if (ok) return std::nullopt;
  return cx({{"u", to_string(u)}, {"v", to_string(v)}});
}

inline std::optional<ojson> pson_filtration_laws(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  DifferentialOperator t = random_nonzero_operator(rng, d);
  DifferentialOperator u = random_nonzero_operator(rng, d);
  int ot = *pson_order(t);
  int ou = *pson_order(u);
  auto prod_ord = pson_order(compose(t, u));
  auto br_ord = pson_order(commutator(t, u));
  bool ok = (!prod_ord || *prod_ord <= ot + ou) && (!br_ord || *br_ord <= ot + ou - 1);
  if (ok) return std::nullopt;
  return cx({{"T", to_json(t)}, {"D", to_json(u)},
             {"ord_T", ot}, {"ord_D", ou},
             {"ord_TD", prod_ord ? ojson(*prod_ord) : ojson(nullptr)},
             {"ord_[T,D]", br_ord ? ojson(*br_ord) : ojson(nullptr)}});
}

inline std::optional<ojson> local_form_vs_commutator_membership(const GenDims& d,
                                                                std::uint64_t seed) {
  Rng rng(seed);
  DifferentialOperator t = random_nonzero_operator(rng, d, rng.chance(1, 3));
  int k = *pson_order(t);
  bool ok = in_P_k(t, k) && in_P_k_commutator_oracle(t, k) && !in_P_k(t, k - 1) &&
            !in_P_k_commutator_oracle(t, k - 1);
  int dk = *diff_order(t);
  ok = ok && in_D_k(t, dk) && in_D_k_commutator_oracle(t, dk) && !in_D_k(t, dk - 1) &&
       !in_D_k_commutator_oracle(t, dk - 1);
  if (ok) return std::nullopt;
  return cx({{"T", to_json(t)}, {"pson_order", k}, {"diff_order", dk}});
}

inline std::optional<ojson> coordinate_bracket_descent(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  DifferentialOperator t = random_nonzero_operator(rng, d);
  int k = *pson_order(t);
  for (const Polynomial& u : coordinate_test_set(d.m)) {
    if (!in_P_k(commutator(t, gamma(d.m, d.n, u)), k - 1)) {
      return cx({{"T", to_json(t)}, {"u", to_string(u)}});
    }
  }
  return std::nullopt;
}

inline std::optional<ojson> d_filtration_consistency(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  DifferentialOperator t = random_nonzero_operator(rng, d);
  int dk = *diff_order(t);
  int pk = *pson_order(t);
  // D^{k}(E,M) sits inside P^{k+1}(E,M).
  bool ok = in_D_k(t, dk) && !in_D_k(t, dk - 1) && pk <= dk + 1 && in_P_k(t, dk + 1);
  if (ok) return std::nullopt;
  return cx({{"T", to_json(t)}, {"diff_order", dk}, {"pson_order", pk}});
}

// ---- symbol-laws -----------------------------------------------------------

inline std::optional<ojson> product_representative_independence(const GenDims& d,
                                                                std::uint64_t seed) {
  Rng rng(seed);
  int i = rng.range(0, d.max_order);
  int j = rng.range(0, d.max_order);
  SymbolElement p = random_homogeneous_symbol(rng, d, i);
  SymbolElement q = random_homogeneous_symbol(rng, d, j);
  DifferentialOperator t = noisy_representative(rng, d, p, i);
  DifferentialOperator u = noisy_representative(rng, d, q, j);
  SymbolElement via_ops = sigma_i(compose(t, u), i + j);
  SymbolElement closed = symbol_product(p, q);
  if (via_ops == closed) return std::nullopt;
  return cx({{"P", to_json(p)}, {"Q", to_json(q)}, {"T", to_json(t)}, {"D", to_json(u)},
             {"sigma_of_compose", to_json(via_ops)}, {"closed_form", to_json(closed)}});
}

inline std::optional<ojson> bracket_representative_independence(const GenDims& d,
                                                                std::uint64_t seed) {
  Rng rng(seed);
  int i = rng.range(0, d.max_order);
  int j = rng.range(0, d.max_order);
  SymbolElement p = random_homogeneous_symbol(rng, d, i);
  SymbolElement q = random_homogeneous_symbol(rng, d, j);
  DifferentialOperator t = noisy_representative(rng, d, p, i);
  DifferentialOperator u = noisy_representative(rng, d, q, j);
  DifferentialOperator br = commutator(t, u);
  SymbolElement closed = symbol_bracket(p, q);
  if (i + j - 1 < 0) {
    if (br.is_zero() && closed.is_zero()) return std::nullopt;
  } else if (sigma_i(br, i + j - 1) == closed) {
    return std::nullopt;
  }
  return cx({{"P", to_json(p)}, {"Q", to_json(q)}, {"T", to_json(t)}, {"D", to_json(u)}});
}

inline std::optional<ojson> product_commutative(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  SymbolElement p = random_symbol(rng, d);
  SymbolElement q = random_symbol(rng, d);
  if (symbol_product(p, q) == symbol_product(q, p)) return std::nullopt;
  return cx({{"P", to_json(p)}, {"Q", to_json(q)}});
}

inline std::optional<ojson> product_associative(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  SymbolElement p = random_symbol(rng, d);
  SymbolElement q = random_symbol(rng, d);
  SymbolElement r = random_symbol(rng, d);
  if (symbol_product(symbol_product(p, q), r) == symbol_product(p, symbol_product(q, r))) {
    return std::nullopt;
  }
  return cx({{"P", to_json(p)}, {"Q", to_json(q)}, {"R", to_json(r)}});
}

inline std::optional<ojson> bracket_antisymmetric(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  SymbolElement p = random_symbol(rng, d);
  SymbolElement q = random_symbol(rng, d);
  bool ok = symbol_bracket(p, p).is_zero() &&
            (symbol_bracket(p, q) + symbol_bracket(q, p)).is_zero();
  if (ok) return std::nullopt;
  return cx({{"P", to_json(p)}, {"Q", to_json(q)}});
}

inline std::optional<ojson> bracket_jacobi(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  SymbolElement p = random_symbol(rng, d);
  SymbolElement q = random_symbol(rng, d);
  SymbolElement r = random_symbol(rng, d);
  SymbolElement jac = symbol_bracket(symbol_bracket(p, q), r) +
                      symbol_bracket(symbol_bracket(q, r), p) +
                      symbol_bracket(symbol_bracket(r, p), q);
  if (jac.is_zero()) return std::nullopt;
  return cx({{"P", to_json(p)}, {"Q", to_json(q)}, {"R", to_json(r)}});
}

inline std::optional<ojson> bracket_leibniz(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  SymbolElement p = random_symbol(rng, d);
  SymbolElement q = random_symbol(rng, d);
  SymbolElement r = random_symbol(rng, d);
  SymbolElement lhs = symbol_bracket(p, symbol_product(q, r));
  SymbolElement rhs = symbol_product(symbol_bracket(p, q), r) +
                      symbol_product(q, symbol_bracket(p, r));
  if (lhs == rhs) return std::nullopt;
  return cx({{"P", to_json(p)}, {"Q", to_json(q)}, {"R", to_json(r)}});
}

inline std::optional<ojson> gradation_of_operations(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  int i = rng.range(0, d.max_order);
  int j = rng.range(0, d.max_order);
  SymbolElement p = random_homogeneous_symbol(rng, d, i);
  SymbolElement q = random_homogeneous_symbol(rng, d, j);
  SymbolElement prod = symbol_product(p, q);
  SymbolElement br = symbol_bracket(p, q);
  bool ok = (prod.is_zero() || (prod.homogeneous_degree() && *prod.homogeneous_degree() == i + j)) &&
            (br.is_zero() || (br.homogeneous_degree() && *br.homogeneous_degree() == i + j - 1));
  if (ok) return std::nullopt;
  return cx({{"P", to_json(p)}, {"Q", to_json(q)}, {"product", to_json(prod)},
             {"bracket", to_json(br)}});
}

inline std::optional<ojson> sigma_lift_roundtrip(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  int k = rng.range(0, d.max_order);
  SymbolElement p = random_homogeneous_symbol(rng, d, k);
  DifferentialOperator t = lift(p, k);
  bool ok = sigma_i(t, k) == p && (p.is_zero() || sigma_pson(t) == p);
  if (ok) return std::nullopt;
  return cx({{"P", to_json(p)}, {"lift", to_json(t)}});
}

inline std::optional<ojson> sigma_pson_consistency(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  DifferentialOperator t = random_nonzero_operator(rng, d);
  int ord = *pson_order(t);
  bool ok = sigma_pson(t) == sigma_i(t, ord) && sigma_i(t, ord + 1).is_zero() &&
            sigma_i(t, ord + 2).is_zero() && !sigma_pson(t).is_zero();
  if (ok) return std::nullopt;
  return cx({{"T", to_json(t)}, {"ord", ord}});
}

// ---- oracle-equivalence ----------------------------------------------------

inline std::optional<ojson> product_closed_vs_operator(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  SymbolElement p = random_symbol(rng, d);
  SymbolElement q = random_symbol(rng, d);
  SymbolElement closed = symbol_product(p, q);
  SymbolElement via = symbol_product_via_operators(p, q);
  if (closed == via) return std::nullopt;
  return cx({{"P", to_json(p)}, {"Q", to_json(q)}, {"closed", to_json(closed)},
             {"via_operators", to_json(via)}});
}

inline std::optional<ojson> bracket_closed_vs_operator(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  SymbolElement p = random_symbol(rng, d);
  SymbolElement q = random_symbol(rng, d);
  SymbolElement closed = symbol_bracket(p, q);
  SymbolElement via = symbol_bracket_via_operators(p, q);
  if (closed == via) return std::nullopt;
  return cx({{"P", to_json(p)}, {"Q", to_json(q)}, {"closed", to_json(closed)},
             {"via_operators", to_json(via)}});
}

inline std::optional<ojson> bracket_sign_anchor(const GenDims& d, std::uint64_t seed) {
  (void)seed;
  for (int a = 0; a < d.m; ++a) {
    DifferentialOperator da(d.m, d.n);
    da.add_term(MultiIndex::unit(a), identity_matrix<Polynomial>(d.n));
    Polynomial xa = Polynomial::monomial(MultiIndex::unit(a), Rational(1));
    SymbolElement sym = sigma_i(commutator(da, gamma(d.m, d.n, xa)), 0);
    PhasePolynomial xi_a = xi_monomial(MultiIndex::unit(a));
    PhasePolynomial x_a = to_phase(xa);
    bool ok = sym == constant_symbol(d.m, d.n, Rational(1)) &&
              canonical_bracket(xi_a, x_a) == PhasePolynomial(Rational(1));
    // Second-order anchor: [d_a^2, gamma_{x_a}] = 2 d_a.
    DifferentialOperator da2(d.m, d.n);
    da2.add_term(MultiIndex::unit(a, 2), identity_matrix<Polynomial>(d.n));
    ok = ok && sigma_i(commutator(da2, gamma(d.m, d.n, xa)), 1) ==
                   scalar_symbol(d.m, d.n, 1, xi_a * Rational(2)) &&
         canonical_bracket(xi_a * xi_a, x_a) == xi_a * Rational(2);
    if (!ok) return cx({{"coordinate", a + 1}});
  }
  return std::nullopt;
}

// ---- ideal -----------------------------------------------------------------

inline std::optional<ojson> ker_delta_characterization(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  SymbolElement p = rng.chance(1, 2) ? random_symbol(rng, d) : random_j_element(rng, d);
  bool in_kernel = delta(p).is_zero();
  bool squares_to_zero = symbol_product(p, p).is_zero();
  bool member = j_membership(p);
  if (in_kernel == squares_to_zero && member == in_kernel) return std::nullopt;
  return cx({{"P", to_json(p)}, {"ker_delta", in_kernel}, {"square_zero", squares_to_zero}});
}

inline std::optional<ojson> ideal_absorption(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  SymbolElement p = random_symbol(rng, d);
  SymbolElement u = random_j_element(rng, d);
  if (j_membership(symbol_product(p, u)) && j_membership(symbol_product(u, p))) {
    return std::nullopt;
  }
  return cx({{"P", to_json(p)}, {"u", to_json(u)}});
}

inline std::optional<ojson> trivial_multiplication_on_j(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  SymbolElement u = random_j_element(rng, d);
  SymbolElement v = random_j_element(rng, d);
  if (symbol_product(u, v).is_zero()) return std::nullopt;
  return cx({{"u", to_json(u)}, {"v", to_json(v)}, {"uv", to_json(symbol_product(u, v))}});
}

inline std::optional<ojson> decompose_splitting(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  SymbolElement p = random_symbol(rng, d);
  SymbolDecomposition parts = decompose(p);
  bool pol_scalar_only = true;
  for (const auto& [k, c] : parts.pol_part.components()) {
    (void)k;
    if (!c.sl.is_zero()) pol_scalar_only = false;
  }
  bool ok = parts.j_part + parts.pol_part == p && j_membership(parts.j_part) &&
            pol_scalar_only && parts.j_part.components().count(0) == 0;
  if (ok) return std::nullopt;
  return cx({{"P", to_json(p)}, {"j_part", to_json(parts.j_part)},
             {"pol_part", to_json(parts.pol_part)}});
}

inline std::optional<ojson> decompose_uniqueness(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  SymbolElement u = random_j_element(rng, d);
  SymbolElement w = random_pol_element(rng, d);
  SymbolDecomposition parts = decompose(u + w);
  if (parts.j_part == u && parts.pol_part == w) return std::nullopt;
  return cx({{"u", to_json(u)}, {"w", to_json(w)}});
}

inline std::optional<ojson> pol_subalgebra(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  SymbolElement w1 = random_pol_element(rng, d);
  SymbolElement w2 = random_pol_element(rng, d);
  SymbolElement prod = symbol_product(w1, w2);
  for (const auto& [k, c] : prod.components()) {
    (void)k;
    if (!c.sl.is_zero()) {
      return cx({{"w1", to_json(w1)}, {"w2", to_json(w2)}, {"product", to_json(prod)}});
    }
  }
  return std::nullopt;
}

// ---- inverse ---------------------------------------------------------------

inline std::optional<ojson> invert_closed_form(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  SymbolElement u = random_j_element(rng, d);
  Rational f = random_nonzero_rational(rng);
  SymbolElement p = u + constant_symbol(d.m, d.n, f);
  SymbolElement inv = invert(p);
  Rational inv_f = Rational(1) / f;
  SymbolElement expected = u.scaled(-inv_f * inv_f) + constant_symbol(d.m, d.n, inv_f);
  bool ok = symbol_product(p, inv) == constant_symbol(d.m, d.n, Rational(1)) &&
            inv == expected && symbol_product(u, u).is_zero();
  if (ok) return std::nullopt;
  return cx({{"u", to_json(u)}, {"f", rational_to_string(f)}, {"inverse", to_json(inv)},
             {"expected", to_json(expected)}});
}

inline std::optional<ojson> invert_rejects_zero_scalar(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  SymbolElement u = random_j_element(rng, d);
  try {
    invert(u);
  } catch (const NotInvertibleError& e) {
    if (e.reason() == NotInvertibleError::Reason::zero_scalar) return std::nullopt;
    return cx({{"u", to_json(u)}, {"detail", "wrong failure reason"}});
  }
  return cx({{"u", to_json(u)}, {"detail", "inversion unexpectedly succeeded"}});
}

inline std::optional<ojson> invert_rejects_non_constant(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  SymbolElement u = random_j_element(rng, d);
  SymbolElement p = u;
  if (rng.chance(1, 2)) {
    // Degree-0 scalar that genuinely depends on x.
    Polynomial f = random_polynomial(rng, d.m, d.max_xdeg);
    f.add_term(MultiIndex::unit(rng.below(d.m)), random_nonzero_rational(rng));
    while (f.is_constant()) {
      f.add_term(MultiIndex::unit(rng.below(d.m)), random_nonzero_rational(rng));
    }
    p += scalar_symbol(d.m, d.n, 0, to_phase(f));
  } else {
    int k = rng.range(1, d.max_order);
    PhasePolynomial f = random_xi_homogeneous(rng, d, k);
    while (f.is_zero()) f = random_xi_homogeneous(rng, d, k);
    p += scalar_symbol(d.m, d.n, k, f);
  }
  try {
    invert(p);
  } catch (const NotInvertibleError& e) {
    if (e.reason() == NotInvertibleError::Reason::non_constant_scalar) return std::nullopt;
    return cx({{"P", to_json(p)}, {"detail", "wrong failure reason"}});
  }
  return cx({{"P", to_json(p)}, {"detail", "inversion unexpectedly succeeded"}});
}

inline std::optional<ojson> invert_worked_example(const GenDims& d, std::uint64_t seed) {
  (void)seed;
  // u = E_12 xi_1 in degree 2, f = 2; the inverse is -(1/4) u + 1/2.
  GenDims dd = d;
  dd.n = 2;
  Matrix<PhasePolynomial> sl(2);
  sl.at(0, 1) = xi_monomial(MultiIndex::unit(0));
  SymbolElement u(dd.m, 2);
  u.add_component(2, sl, PhasePolynomial());
  SymbolElement p = u + constant_symbol(dd.m, 2, Rational(2));
  SymbolElement inv = invert(p);
  SymbolElement expected = u.scaled(Rational(-1, 4)) + constant_symbol(dd.m, 2, Rational(1, 2));
  bool ok = inv == expected &&
            symbol_product(p, inv) == constant_symbol(dd.m, 2, Rational(1));
  if (ok) return std::nullopt;
  return cx({{"inverse", to_json(inv)}, {"expected", to_json(expected)}});
}

// ---- exact-sequence --------------------------------------------------------

inline std::optional<ojson> delta_product_homomorphism(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  SymbolElement p = random_symbol(rng, d);
  SymbolElement q = random_symbol(rng, d);
  if (delta(symbol_product(p, q)) == delta(p) * delta(q)) return std::nullopt;
  return cx({{"P", to_json(p)}, {"Q", to_json(q)}});
}

inline std::optional<ojson> delta_theta_zero(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  int k = rng.range(1, std::max(4, d.max_order));
  Matrix<PhasePolynomial> a = random_sl_matrix(rng, d, k - 1);
  SymbolElement th = theta(a, k, d.m);
  if (delta(th).is_zero() && th.component(k).sl == a) return std::nullopt;
  return cx({{"degree", k}, {"theta", to_json(th)}});
}

inline std::optional<ojson> ker_delta_is_theta_image(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  int k = rng.range(1, d.max_order);
  SymbolElement p = random_homogeneous_symbol(rng, d, k);
  SymbolElement kernel_part(d.m, d.n);
  kernel_part.add_component(k, p.component(k).sl, PhasePolynomial());
  bool ok = j_membership(kernel_part) &&
            theta(p.component(k).sl, k, d.m) == kernel_part;
  if (ok) return std::nullopt;
  return cx({{"P", to_json(p)}});
}

// Monomial-basis exactness, degree by degree: delta  o theta = 0, every kernel
// basis vector is a theta image, and the dimension count matches
// Pol^{k-1} (x) sl + Pol^k with x-degree capped at max_xdeg.
inline std::optional<ojson> exactness_on_monomial_basis(const GenDims& d, std::uint64_t seed) {
  (void)seed;
  std::vector<Matrix<Rational>> sl_basis;
  for (int i = 0; i < d.n; ++i) {
    for (int j = 0; j < d.n; ++j) {
      if (i != j) sl_basis.push_back(matrix_unit<Rational>(d.n, i, j));
    }
  }
  for (int i = 0; i + 1 < d.n; ++i) {
    Matrix<Rational> h(d.n);
    h.at(i, i) = Rational(1);
    h.at(i + 1, i + 1) = Rational(-1);
    sl_basis.push_back(h);
  }
  auto x_monomials = multi_indices_up_to_degree(d.m, d.max_xdeg);
  auto binom = [](int a, int b) { return rational_binomial(a, b); };
  for (int k = 0; k <= 4; ++k) {
    // Kernel sector: traceless matrices of xi-degree k-1 monomials.
    long sl_count = 0;
    if (k >= 1) {
      for (const Matrix<Rational>& b : sl_basis) {
        for (const MultiIndex& beta : multi_indices_of_degree(d.m, k - 1)) {
          for (const MultiIndex& lam : x_monomials) {
            Matrix<PhasePolynomial> a = map_entries(b, [&](const Rational& r) {
              PhasePolynomial p;
              p.add_term({lam, beta}, r);
              return p;
            });
            SymbolElement th = theta(a, k, d.m);
            if (!delta(th).is_zero()) {
              return cx({{"degree", k}, {"detail", "delta o theta != 0"}});
            }
            if (!(th.component(k).sl == a) || !j_membership(th)) {
              return cx({{"degree", k}, {"detail", "theta image lost its sl part"}});
            }
            ++sl_count;
          }
        }
      }
    }
    // Scalar sector: delta restores each monomial, so delta is onto Pol^k.
    long scalar_count = 0;
    for (const MultiIndex& beta : multi_indices_of_degree(d.m, k)) {
      for (const MultiIndex& lam : x_monomials) {
        PhasePolynomial mono = PhasePolynomial::monomial({lam, beta}, Rational(1));
        SymbolElement s = scalar_symbol(d.m, d.n, k, mono);
        if (delta(s) != mono || j_membership(s)) {
          return cx({{"degree", k}, {"detail", "delta failed on a scalar monomial"}});
        }
        ++scalar_count;
      }
    }
    // Dimension bookkeeping against the closed-form counts.
    Rational x_dim(0);
    for (int t = 0; t <= d.max_xdeg; ++t) x_dim += binom(t + d.m - 1, d.m - 1);
    Rational expected_sl = k >= 1 ? Rational(d.n * d.n - 1) * binom(k - 1 + d.m - 1, d.m - 1) * x_dim
                                  : Rational(0);
    Rational expected_scalar = binom(k + d.m - 1, d.m - 1) * x_dim;
    if (Rational(sl_count) != expected_sl || Rational(scalar_count) != expected_scalar) {
      return cx({{"degree", k},
                 {"sl_count", sl_count},
                 {"scalar_count", scalar_count},
                 {"detail", "dimension count mismatch"}});
    }
  }
  return std::nullopt;
}

// ---- filtration-lemma ------------------------------------------------------

inline bool syntactic_lowering_membership(const SymbolElement& p, int i) {
  for (const auto& [k, c] : p.components()) {
    if (k == i || k == 0) continue;
    if (k == 1 && c.scalar.is_zero()) continue;  // an x-dependent gl matrix
    return false;
  }
  return true;
}

inline SymbolElement random_lemma_symbol(Rng& rng, const GenDims& d, int i) {
  SymbolElement p(d.m, d.n);
  // gl-flavored pieces.
  if (rng.chance(1, 2)) {
    p += scalar_symbol(d.m, d.n, 0, to_phase(random_polynomial(rng, d.m, d.max_xdeg)));
  }
  if (rng.chance(1, 2)) {
    p.add_component(1, to_phase_matrix(random_traceless_matrix(rng, d)), PhasePolynomial());
  }
  // A component at the allowed degree.
  if (rng.chance(1, 2)) p += random_homogeneous_symbol(rng, d, i);
  // Possibly an offending component anywhere.
  if (rng.chance(1, 2)) p += random_homogeneous_symbol(rng, d, rng.range(0, d.max_order));
  if (p.is_zero()) p += random_homogeneous_symbol(rng, d, rng.range(0, d.max_order));
  return p;
}

inline std::optional<ojson> lemma_agreement(const GenDims& d, std::uint64_t seed, int i) {
  Rng rng(seed);
  SymbolElement p = random_lemma_symbol(rng, d, i);
  bool via_brackets = lowering_set_membership(p, i);
  bool syntactic = syntactic_lowering_membership(p, i);
  if (via_brackets == syntactic) return std::nullopt;
  return cx({{"P", to_json(p)}, {"i", i}, {"via_brackets", via_brackets},
             {"syntactic", syntactic}});
}

inline std::optional<ojson> lemma_edge_cases(const GenDims& d, std::uint64_t seed) {
  (void)seed;
  GenDims dd = d;
  dd.n = 2;
  auto sl_unit_x1 = [&] {  // x1 E_12, a gl element with base-dependent entries
    Matrix<PhasePolynomial> sl(2);
    sl.at(0, 1) = to_phase(Polynomial::monomial(MultiIndex::unit(0), Rational(1)));
    SymbolElement s(dd.m, 2);
    s.add_component(1, sl, PhasePolynomial());
    return s;
  }();
  SymbolElement xi1_deg1 = scalar_symbol(dd.m, 2, 1, xi_monomial(MultiIndex::unit(0)));
  SymbolElement xi1sq_deg2 =
      scalar_symbol(dd.m, 2, 2, xi_monomial(MultiIndex::unit(0, 2)));
  SymbolElement x1_deg0 = coordinate_symbol(dd.m, 2, 0);
  struct Case {
    const char* name;
    SymbolElement p;
    int i;
    bool expected;
  };
  std::vector<Case> cases = {
      {"gl-part-brackets-to-zero", sl_unit_x1, 3, true},
      {"degree-i-component-allowed", xi1sq_deg2, 2, true},
      {"xi-at-wrong-degree", xi1_deg1, 3, false},
      {"degree-0-is-gl", x1_deg0, 2, true},
      {"degree-0-at-i-0", x1_deg0, 0, true},
      {"sl-plus-offending-scalar", sl_unit_x1 + xi1_deg1, 3, false},
      {"mixed-allowed", x1_deg0 + xi1sq_deg2, 2, true},
      {"mixed-offending", x1_deg0 + xi1sq_deg2, 3, false},
  };
  for (const Case& c : cases) {
    bool via = lowering_set_membership(c.p, c.i);
    bool syn = syntactic_lowering_membership(c.p, c.i);
    if (via != c.expected || syn != c.expected) {
      return cx({{"case", c.name}, {"via_brackets", via}, {"syntactic", syn},
                 {"expected", c.expected}});
    }
  }
  return std::nullopt;
}

// ---- gl-case ---------------------------------------------------------------

inline std::optional<ojson> gl_product_matches_symbols(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  GlSymbol p = random_gl_symbol(rng, d);
  GlSymbol q = random_gl_symbol(rng, d);
  GlSymbol prod = gl_product(p, q);
  // Literal right-hand side of the multiplication formula.
  GlSymbol literal(d.m,
                   p.matrix_part() * q.scalar_part() + q.matrix_part() * p.scalar_part(),
                   p.scalar_part() * q.scalar_part());
  bool ok = prod == literal &&
            to_symbol(prod) == symbol_product(to_symbol(p), to_symbol(q));
  if (ok) return std::nullopt;
  return cx({{"P", to_json(p)}, {"Q", to_json(q)}});
}

inline std::optional<ojson> gl_bracket_matches_symbols(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  GlSymbol p = random_gl_symbol(rng, d);
  GlSymbol q = random_gl_symbol(rng, d);
  GlSymbol br = gl_bracket(p, q);
  GlSymbol literal(d.m, p.matrix_part() * q.matrix_part() - q.matrix_part() * p.matrix_part(),
                   Polynomial());
  bool ok = br == literal && to_symbol(br) == symbol_bracket(to_symbol(p), to_symbol(q));
  if (ok) return std::nullopt;
  return cx({{"P", to_json(p)}, {"Q", to_json(q)}});
}

inline std::optional<ojson> gl_poisson_axioms(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  GlSymbol p = random_gl_symbol(rng, d);
  GlSymbol q = random_gl_symbol(rng, d);
  GlSymbol r = random_gl_symbol(rng, d);
  GlSymbol jac1 = gl_bracket(gl_bracket(p, q), r);
  GlSymbol jac2 = gl_bracket(gl_bracket(q, r), p);
  GlSymbol jac3 = gl_bracket(gl_bracket(r, p), q);
  Matrix<Polynomial> jac_sum =
      jac1.matrix_part() + jac2.matrix_part() + jac3.matrix_part();
  GlSymbol lhs = gl_bracket(p, gl_product(q, r));
  GlSymbol rhs_a = gl_product(gl_bracket(p, q), r);
  GlSymbol rhs_b = gl_product(q, gl_bracket(p, r));
  bool leibniz = lhs.matrix_part() == rhs_a.matrix_part() + rhs_b.matrix_part() &&
                 lhs.scalar_part() == rhs_a.scalar_part() + rhs_b.scalar_part();
  bool ok = jac_sum.is_zero() && leibniz &&
            gl_product(p, q) == gl_product(q, p) &&
            gl_product(gl_product(p, q), r) == gl_product(p, gl_product(q, r));
  if (ok) return std::nullopt;
  return cx({{"P", to_json(p)}, {"Q", to_json(q)}, {"R", to_json(r)}});
}

inline std::optional<ojson> gl_invert_random(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  Matrix<Polynomial> a = random_traceless_matrix(rng, d);
  Rational f = random_nonzero_rational(rng);
  GlSymbol p(d.m, a, Polynomial(f));
  GlSymbol inv = gl_invert(p);
  Rational inv_f = Rational(1) / f;
  GlSymbol expected(d.m, a.scaled(-inv_f * inv_f), Polynomial(inv_f));
  GlSymbol unit(d.m, Matrix<Polynomial>(d.n), Polynomial(Rational(1)));
  bool ok = inv == expected && gl_product(p, inv) == unit &&
            to_symbol(inv) == invert(to_symbol(p));
  if (!ok) return cx({{"P", to_json(p)}, {"inverse", to_json(inv)}});
  try {
    gl_invert(GlSymbol(d.m, a, Polynomial()));
    return cx({{"detail", "inverting u = 0 succeeded"}});
  } catch (const NotInvertibleError& e) {
    if (e.reason() != NotInvertibleError::Reason::zero_scalar) {
      return cx({{"detail", "wrong reason for u = 0"}});
    }
  }
  try {
    Polynomial nonconst = Polynomial(f);
    nonconst.add_term(MultiIndex::unit(0), Rational(1));
    gl_invert(GlSymbol(d.m, a, nonconst));
    return cx({{"detail", "inverting non-constant u succeeded"}});
  } catch (const NotInvertibleError& e) {
    if (e.reason() != NotInvertibleError::Reason::non_constant_scalar) {
      return cx({{"detail", "wrong reason for non-constant u"}});
    }
  }
  return std::nullopt;
}

inline std::optional<ojson> gl_invert_worked_example(const GenDims& d, std::uint64_t seed) {
  (void)seed;
  // (E_12 + gamma_2)^{-1} = -(1/4) E_12 + gamma_{1/2}.
  Matrix<Polynomial> e12 = matrix_unit<Polynomial>(2, 0, 1);
  GlSymbol p(d.m, e12, Polynomial(Rational(2)));
  GlSymbol inv = gl_invert(p);
  GlSymbol expected(d.m, e12.scaled(Rational(-1, 4)), Polynomial(Rational(1, 2)));
  GlSymbol unit(d.m, Matrix<Polynomial>(2), Polynomial(Rational(1)));
  if (inv == expected && gl_product(p, inv) == unit) return std::nullopt;
  return cx({{"inverse", to_json(inv)}, {"expected", to_json(expected)}});
}

inline std::optional<ojson> gl_j_decomposition(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  GlSymbol p = random_gl_symbol(rng, d);
  auto [a, f] = gl_j_decompose(p);
  GlSymbol q = random_gl_symbol(rng, d);
  bool ok = a.scalar_part().is_zero() && a.matrix_part() == p.matrix_part() &&
            f == p.scalar_part() && gl_product(a, a).is_zero() &&
            GlSymbol(d.m, a.matrix_part(), f) == p &&
            gl_product(q, a).scalar_part().is_zero() &&
            (gl_product(p, p).is_zero() == p.scalar_part().is_zero());
  if (ok) return std::nullopt;
  return cx({{"P", to_json(p)}});
}

inline std::optional<ojson> gl_embed_properties(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  Matrix<Polynomial> b = random_matrix_polynomial(rng, d);
  GlSymbol e = gl_embed(d.m, b);
  bool ok = e.matrix_part().trace().is_zero() &&
            e.matrix_part() + scalar_matrix(d.n, e.scalar_part()) == b;
  if (ok) return std::nullopt;
  return cx({{"B", to_json(gl_embed(d.m, b))}});
}

// ---- morphism --------------------------------------------------------------

inline std::optional<ojson> induced_poisson_isomorphism(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  MorphismSpec spec = random_morphism_spec(rng, d.m, d.n);
  VerificationReport rep =
      verify_poisson_homomorphism_with(induced_symbol_map(spec), d, 50, rng.next());
  if (rep.all_passed()) return std::nullopt;
  ojson failing;
  for (const auto& c : rep.checks) {
    if (c.failures > 0 && c.counterexample) failing[c.name] = *c.counterexample;
  }
  return cx({{"spec", to_json(spec)}, {"failures", failing}});
}

inline std::optional<ojson> induced_structure_preservation(const GenDims& d,
                                                           std::uint64_t seed) {
  Rng rng(seed);
  MorphismSpec spec = random_morphism_spec(rng, d.m, d.n);
  VerificationReport rep =
      verify_structure_preservation_with(induced_symbol_map(spec), d, 50, rng.next());
  if (rep.all_passed()) return std::nullopt;
  ojson failing;
  for (const auto& c : rep.checks) {
    if (c.failures > 0 && c.counterexample) failing[c.name] = *c.counterexample;
  }
  return cx({{"spec", to_json(spec)}, {"failures", failing}});
}

inline std::optional<ojson> morphism_symbol_route_vs_operator_route(const GenDims& d,
                                                                    std::uint64_t seed) {
  Rng rng(seed);
  MorphismSpec spec = random_morphism_spec(rng, d.m, d.n);
  SymbolElement p = random_symbol(rng, d);
  SymbolElement closed = induce_on_symbols(spec, p);
  SymbolElement via = induce_on_symbols_via_operators(spec, p);
  if (closed == via) return std::nullopt;
  return cx({{"spec", to_json(spec)}, {"P", to_json(p)}, {"closed", to_json(closed)},
             {"via_operators", to_json(via)}});
}

inline std::optional<ojson> morphism_functoriality(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  MorphismSpec s1 = random_morphism_spec(rng, d.m, d.n);
  MorphismSpec s2 = random_morphism_spec(rng, d.m, d.n);
  DifferentialOperator t = random_operator(rng, d);
  DifferentialOperator chained = induce_on_operators(s2, induce_on_operators(s1, t));
  DifferentialOperator direct = induce_on_operators(compose(s2, s1), t);
  if (chained == direct) return std::nullopt;
  return cx({{"spec1", to_json(s1)}, {"spec2", to_json(s2)}, {"T", to_json(t)}});
}

inline std::optional<ojson> morphism_inverse_roundtrip(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  MorphismSpec spec = random_morphism_spec(rng, d.m, d.n);
  MorphismSpec inv = inverse(spec);
  DifferentialOperator t = random_operator(rng, d);
  SymbolElement p = random_symbol(rng, d);
  bool ok = induce_on_operators(inv, induce_on_operators(spec, t)) == t &&
            induce_on_symbols(inv, induce_on_symbols(spec, p)) == p;
  if (ok) return std::nullopt;
  return cx({{"spec", to_json(spec)}, {"T", to_json(t)}, {"P", to_json(p)}});
}

inline std::optional<ojson> morphism_respects_orders(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  MorphismSpec spec = random_morphism_spec(rng, d.m, d.n);
  DifferentialOperator t = random_nonzero_operator(rng, d);
  DifferentialOperator img = induce_on_operators(spec, t);
  bool ok = pson_order(img) == pson_order(t) && diff_order(img) == diff_order(t) &&
            induce_on_symbols(spec, sigma_pson(t)) == sigma_pson(img);
  if (ok) return std::nullopt;
  return cx({{"spec", to_json(spec)}, {"T", to_json(t)}, {"image", to_json(img)}});
}

inline std::optional<ojson> morphism_gamma_transport(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  MorphismSpec spec = random_morphism_spec(rng, d.m, d.n);
  Polynomial u = random_polynomial(rng, d.m, d.max_xdeg);
  Matrix<Rational> linv = inverse(spec.L);
  std::vector<Rational> shift(static_cast<std::size_t>(d.m));
  for (int i = 0; i < d.m; ++i) {
    Rational v(0);
    for (int j = 0; j < d.m; ++j) v -= linv.at(i, j) * spec.c[static_cast<std::size_t>(j)];
    shift[static_cast<std::size_t>(i)] = v;
  }
  DifferentialOperator expected = gamma(d.m, d.n, substitute_affine(u, linv, shift));
  DifferentialOperator got = induce_on_operators(spec, gamma(d.m, d.n, u));
  if (got == expected) return std::nullopt;
  return cx({{"spec", to_json(spec)}, {"u", to_string(u)}, {"image", to_json(got)}});
}

inline std::optional<ojson> morphism_apply_conjugation(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  MorphismSpec spec = random_morphism_spec(rng, d.m, d.n);
  DifferentialOperator t = random_operator(rng, d);
  Section s = random_section(rng, d);
  Section lhs = symalg::apply(induce_on_operators(spec, t), transform_section(spec, s));
  Section rhs = transform_section(spec, symalg::apply(t, s));
  if (lhs == rhs) return std::nullopt;
  return cx({{"spec", to_json(spec)}, {"T", to_json(t)}});
}

inline std::optional<ojson> morphism_identity_fixed_points(const GenDims& d,
                                                           std::uint64_t seed) {
  Rng rng(seed);
  MorphismSpec id = identity_spec(d.m, d.n);
  DifferentialOperator t = random_operator(rng, d);
  SymbolElement p = random_symbol(rng, d);
  if (induce_on_operators(id, t) == t && induce_on_symbols(id, p) == p) return std::nullopt;
  return cx({{"T", to_json(t)}, {"P", to_json(p)}});
}

// Injected corruptions, each designed to trip exactly one family of checks.
inline SymbolMap sl_scaling_control(const MorphismSpec& spec, const Rational& s) {
  SymbolMap base = induced_symbol_map(spec);
  auto scale_sl = [](const SymbolElement& p, const Rational& factor) {
    SymbolElement out(p.base_dim(), p.rank());
    for (const auto& [k, c] : p.components()) out.add_component(k, c.sl.scaled(factor), c.scalar);
    return out;
  };
  Rational inv = Rational(1) / s;
  return {[base, s, scale_sl](const SymbolElement& p) { return scale_sl(base.forward(p), s); },
          [base, inv, scale_sl](const SymbolElement& p) {
            return base.backward(scale_sl(p, inv));
          }};
}

inline SymbolMap scalar_scaling_control(const MorphismSpec& spec, const Rational& s) {
  SymbolMap base = induced_symbol_map(spec);
  auto scale_scalar = [](const SymbolElement& p, const Rational& factor) {
    SymbolElement out(p.base_dim(), p.rank());
    for (const auto& [k, c] : p.components()) out.add_component(k, c.sl, c.scalar * factor);
    return out;
  };
  Rational inv = Rational(1) / s;
  return {
      [base, s, scale_scalar](const SymbolElement& p) { return scale_scalar(base.forward(p), s); },
      [base, inv, scale_scalar](const SymbolElement& p) {
        return base.backward(scale_scalar(p, inv));
      }};
}

inline SymbolMap degree_shift_control() {
  auto shift = [](const SymbolElement& p) {
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
  };
  return {shift, [](const SymbolElement& p) { return p; }};
}

inline SymbolMap j_breaking_control() {
  auto leak = [](const SymbolElement& p) {
    SymbolElement out(p.base_dim(), p.rank());
    for (const auto& [k, c] : p.components()) {
      PhasePolynomial scalar = c.scalar;
      if (k >= 1) scalar += c.sl.at(0, 1) * xi_monomial(MultiIndex::unit(0));
      out.add_component(k, c.sl, scalar);
    }
    return out;
  };
  return {leak, [](const SymbolElement& p) { return p; }};
}

inline std::optional<ojson> morphism_negative_controls(const GenDims& d, std::uint64_t seed) {
  Rng rng(seed);
  MorphismSpec spec = random_morphism_spec(rng, d.m, d.n);
  int inner = 25;

  // Scaling the sl sector is an automorphism of the associative product
  // (sl . sl = 0) but breaks the bracket.
  VerificationReport sl_rep = verify_poisson_homomorphism_with(
      sl_scaling_control(spec, Rational(2)), d, inner, rng.next());
  const CheckOutcome* prod = sl_rep.find("product-preserved");
  const CheckOutcome* br = sl_rep.find("bracket-preserved");
  if (!prod || !br || prod->failures != 0 || br->failures == 0 || !br->counterexample) {
    return cx({{"control", "sl-scaling"},
               {"detail", "expected bracket failures with intact products"}});
  }

  VerificationReport sc_rep = verify_poisson_homomorphism_with(
      scalar_scaling_control(spec, Rational(2)), d, inner, rng.next());
  const CheckOutcome* prod2 = sc_rep.find("product-preserved");
  if (!prod2 || prod2->failures == 0 || !prod2->counterexample) {
    return cx({{"control", "scalar-scaling"}, {"detail", "expected product failures"}});
  }

  VerificationReport shift_rep =
      verify_structure_preservation_with(degree_shift_control(), d, inner, rng.next());
  const CheckOutcome* deg0 = shift_rep.find("degree0-preserved");
  if (!deg0 || deg0->failures == 0 || !deg0->counterexample) {
    return cx({{"control", "degree-shift"}, {"detail", "expected degree-0 failures"}});
  }

  VerificationReport leak_rep =
      verify_structure_preservation_with(j_breaking_control(), d, inner, rng.next());
  const CheckOutcome* ideal = leak_rep.find("ideal-preserved");
  if (!ideal || ideal->failures == 0 || !ideal->counterexample) {
    return cx({{"control", "j-breaking"}, {"detail", "expected ideal failures"}});
  }
  return std::nullopt;
}

}  // namespace suites_detail

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "operator-laws", "symbol-laws", "oracle-equivalence", "ideal",      "inverse",
      "exact-sequence", "filtration-lemma", "gl-case",       "morphism"};
  return names;
}

inline std::vector<PropertySpec> properties_for(const std::string& suite) {
  using namespace suites_detail;
  std::vector<PropertySpec> props;
  auto add = [&props](std::string name, PropertyFn fn, int trials = 0) {
    props.push_back({std::move(name), std::move(fn), trials});
  };
  if (suite == "operator-laws") {
    add("poly-ring-axioms", poly_ring_axioms);
    add("matrix-ring-axioms", matrix_ring_axioms);
    add("trace-decomposition", trace_decomposition);
    add("canonical-bracket-laws", canonical_bracket_laws);
    add("compose-associative", compose_associative);
    add("apply-compose-consistency", apply_compose_consistency);
    add("commutator-jacobi", commutator_jacobi);
    add("gamma-laws", gamma_laws);
    add("pson-filtration-laws", pson_filtration_laws);
    add("local-form-vs-commutator-membership", local_form_vs_commutator_membership);
    add("coordinate-bracket-descent", coordinate_bracket_descent);
    add("d-filtration-consistency", d_filtration_consistency);
  } else if (suite == "symbol-laws") {
    add("product-representative-independence", product_representative_independence);
    add("bracket-representative-independence", bracket_representative_independence);
    add("product-commutative", product_commutative);
    add("product-associative", product_associative);
    add("bracket-antisymmetric", bracket_antisymmetric);
    add("bracket-jacobi", bracket_jacobi);
    add("bracket-leibniz", bracket_leibniz);
    add("gradation-of-operations", gradation_of_operations);
    add("sigma-lift-roundtrip", sigma_lift_roundtrip);
    add("sigma-pson-consistency", sigma_pson_consistency);
  } else if (suite == "oracle-equivalence") {
    add("product-closed-vs-operator", product_closed_vs_operator);
    add("bracket-closed-vs-operator", bracket_closed_vs_operator);
    add("bracket-sign-anchor", bracket_sign_anchor, 1);
  } else if (suite == "ideal") {
    add("ker-delta-characterization", ker_delta_characterization);
    add("ideal-absorption", ideal_absorption);
    add("trivial-multiplication-on-j", trivial_multiplication_on_j);
    add("decompose-splitting", decompose_splitting);
    add("decompose-uniqueness", decompose_uniqueness);
    add("pol-subalgebra", pol_subalgebra);
  } else if (suite == "inverse") {
    add("invert-closed-form", invert_closed_form);
    add("invert-rejects-zero-scalar", invert_rejects_zero_scalar);
    add("invert-rejects-non-constant", invert_rejects_non_constant);
    add("invert-worked-example", invert_worked_example, 1);
  } else if (suite == "exact-sequence") {
    add("delta-product-homomorphism", delta_product_homomorphism);
    add("delta-theta-zero", delta_theta_zero);
    add("ker-delta-is-theta-image", ker_delta_is_theta_image);
    add("exactness-on-monomial-basis", exactness_on_monomial_basis, 1);
  } else if (suite == "filtration-lemma") {
    add("lemma-agreement-i1",
        [](const GenDims& d, std::uint64_t s) { return lemma_agreement(d, s, 1); });
    add("lemma-agreement-i2",
        [](const GenDims& d, std::uint64_t s) { return lemma_agreement(d, s, 2); });
    add("lemma-agreement-i3",
        [](const GenDims& d, std::uint64_t s) { return lemma_agreement(d, s, 3); });
    add("lemma-edge-cases", lemma_edge_cases, 1);
  } else if (suite == "gl-case") {
    add("gl-product-matches-symbols", gl_product_matches_symbols);
    add("gl-bracket-matches-symbols", gl_bracket_matches_symbols);
    add("gl-poisson-axioms", gl_poisson_axioms);
    add("gl-invert-random", gl_invert_random);
    add("gl-invert-worked-example", gl_invert_worked_example, 1);
    add("gl-j-decomposition", gl_j_decomposition);
    add("gl-embed-properties", gl_embed_properties);
  } else if (suite == "morphism") {
    add("induced-poisson-isomorphism", induced_poisson_isomorphism, 50);
    add("induced-structure-preservation", induced_structure_preservation, 50);
    add("symbol-route-vs-operator-route", morphism_symbol_route_vs_operator_route, 50);
    add("functoriality", morphism_functoriality, 50);
    add("inverse-roundtrip", morphism_inverse_roundtrip, 50);
    add("respects-orders", morphism_respects_orders, 50);
    add("gamma-transport", morphism_gamma_transport, 50);
    add("apply-conjugation", morphism_apply_conjugation, 50);
    add("identity-fixed-points", morphism_identity_fixed_points, 5);
    add("negative-controls", morphism_negative_controls, 1);
  } else {
    throw Error("unknown suite '" + suite + "'");
  }
  return props;
}

inline PropertyOutcome run_property(const PropertySpec& prop, const SuiteConfig& cfg) {
  int trials = prop.trials > 0 ? std::min(prop.trials, cfg.trials) : cfg.trials;
  GenDims dims{cfg.m, cfg.n, cfg.max_xdeg, cfg.max_order};
  std::vector<std::optional<ojson>> results(static_cast<std::size_t>(trials));
  parallel_for(trials, thread_budget(), [&](int t) {
    std::uint64_t trial_seed = derive_seed(cfg.seed, prop.name, static_cast<std::uint64_t>(t));
    try {
      results[static_cast<std::size_t>(t)] = prop.fn(dims, trial_seed);
    } catch (const std::exception& e) {
      results[static_cast<std::size_t>(t)] = ojson{{"exception", e.what()}};
    }
  });
  PropertyOutcome out{prop.name, trials, 0, std::nullopt};
  for (auto& r : results) {
    if (r && ++out.failures == 1) out.counterexample = std::move(r);
  }
  return out;
}

inline Report run_suite(const SuiteConfig& cfg) {
  validate_config(cfg);
  std::vector<PropertySpec> props;
  if (cfg.suite == "all") {
    for (const std::string& name : suite_names()) {
      for (PropertySpec& p : properties_for(name)) {
        p.name = name + "/" + p.name;
        props.push_back(std::move(p));
      }
    }
  } else {
    props = properties_for(cfg.suite);
  }
  Report report;
  report.suite = cfg.suite;
  report.config = cfg;
  auto start = std::chrono::steady_clock::now();
  for (const PropertySpec& prop : props) {
    PropertyOutcome outcome = run_property(prop, cfg);
    report.total_failures += outcome.failures;
    report.properties.push_back(std::move(outcome));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// The JSON form carries no timing, so identical (suite, config, seed) runs
// serialize byte-for-byte identically.
inline ojson report_to_json(const Report& r) {
  ojson out;
  out["suite"] = r.suite;
  out["config"] = ojson{{"m", r.config.m},
                        {"n", r.config.n},
                        {"max_xdeg", r.config.max_xdeg},
                        {"max_order", r.config.max_order},
                        {"trials", r.config.trials},
                        {"seed", r.config.seed}};
  ojson props = ojson::array();
  for (const PropertyOutcome& p : r.properties) {
    ojson entry;
    entry["name"] = p.name;
    entry["trials"] = p.trials;
    entry["failures"] = p.failures;
    entry["counterexample"] = p.counterexample ? *p.counterexample : ojson(nullptr);
    props.push_back(std::move(entry));
  }
  out["properties"] = std::move(props);
  out["total_failures"] = r.total_failures;
  return out;
}

inline std::string report_to_text(const Report& r) {
  std::string out;
  out += "suite " + r.suite + "  (m=" + std::to_string(r.config.m) +
         " n=" + std::to_string(r.config.n) + " max_xdeg=" + std::to_string(r.config.max_xdeg) +
         " max_order=" + std::to_string(r.config.max_order) +
         " trials=" + std::to_string(r.config.trials) +
         " seed=" + std::to_string(r.config.seed) + ")\n";
  for (const PropertyOutcome& p : r.properties) {
    out += (p.failures == 0 ? "PASS  " : "FAIL  ") + p.name + "  (" +
           std::to_string(p.trials - p.failures) + "/" + std::to_string(p.trials) + ")\n";
    if (p.counterexample) {
      out += "      first counterexample: " + p.counterexample->dump() + "\n";
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", r.seconds);
  out += "total failures: " + std::to_string(r.total_failures) + "  (" + buf + " s)\n";
  return out;
}

}  // namespace symalg

#endif  // SYMALG_SUITES_HPP
