#ifndef SYMALG_RANDOM_GEN_HPP
#define SYMALG_RANDOM_GEN_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "symalg/diff_operator.hpp"
#include "symalg/gl_symbol.hpp"
#include "symalg/matrix.hpp"
#include "symalg/polynomial.hpp"
#include "symalg/symbol.hpp"

namespace symalg {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Independent per-trial seed: mixing keeps trials decoupled across properties.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                 std::uint64_t index) {
  return splitmix64(master ^ splitmix64(fnv1a(tag) + 0x9e3779b97f4a7c15ULL * (index + 1)));
}

// Deterministic bounded draws on top of mt19937_64; avoids the
// implementation-defined std::uniform_int_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  std::uint64_t next() { return g_(); }

  int below(int n) {  // uniform over [0, n)
    if (n <= 0) throw InvariantViolation("Rng::below needs a positive bound");
    std::uint64_t un = static_cast<std::uint64_t>(n);
    std::uint64_t limit = (~0ULL / un) * un;
    std::uint64_t r;
    do {
      r = g_();
    } while (r >= limit);
    return static_cast<int>(r % un);
  }

  int range(int lo, int hi) { return lo + below(hi - lo + 1); }  // inclusive

  bool chance(int num, int den) { return below(den) < num; }

 private:
  std::mt19937_64 g_;
};

struct GenDims {
  int m = 2;
  int n = 2;
  int max_xdeg = 2;
  int max_order = 3;
};

// Coefficients live in a fixed small box of rationals.
inline Rational random_rational(Rng& rng) {
  return Rational(rng.range(-9, 9), rng.range(1, 4));
}

inline Rational random_nonzero_rational(Rng& rng) {
  Rational r = random_rational(rng);
  while (r.is_zero()) r = random_rational(rng);
  return r;
}

inline MultiIndex random_multi_index(Rng& rng, int m, int max_total) {
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  int budget = rng.range(0, max_total);
  for (int t = 0; t < budget; ++t) e[static_cast<std::size_t>(rng.below(m))] += 1;
  return MultiIndex(std::move(e));
}

inline MultiIndex random_multi_index_exact(Rng& rng, int m, int total) {
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  for (int t = 0; t < total; ++t) e[static_cast<std::size_t>(rng.below(m))] += 1;
  return MultiIndex(std::move(e));
}

inline Polynomial random_polynomial(Rng& rng, int m, int max_xdeg, int max_terms = 3) {
  Polynomial p;
  int terms = rng.range(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    p.add_term(random_multi_index(rng, m, max_xdeg), random_rational(rng));
  }
  return p;
}

inline Polynomial random_nonzero_polynomial(Rng& rng, int m, int max_xdeg,
                                            int max_terms = 3) {
  Polynomial p = random_polynomial(rng, m, max_xdeg, max_terms);
  while (p.is_zero()) {
    p.add_term(random_multi_index(rng, m, max_xdeg), random_nonzero_rational(rng));
  }
  return p;
}

inline PhasePolynomial random_phase_polynomial(Rng& rng, const GenDims& d, int max_xi_deg,
                                               int max_terms = 3) {
  PhasePolynomial p;
  int terms = rng.range(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    p.add_term({random_multi_index(rng, d.m, d.max_xdeg),
                random_multi_index(rng, d.m, max_xi_deg)},
               random_rational(rng));
  }
  return p;
}

inline PhasePolynomial random_xi_homogeneous(Rng& rng, const GenDims& d, int xi_deg,
                                             int max_terms = 3) {
  PhasePolynomial p;
  int terms = rng.range(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    p.add_term({random_multi_index(rng, d.m, d.max_xdeg),
                random_multi_index_exact(rng, d.m, xi_deg)},
               random_rational(rng));
  }
  return p;
}

inline Matrix<Polynomial> random_matrix_polynomial(Rng& rng, const GenDims& d,
                                                   int max_terms = 2) {
  Matrix<Polynomial> m(d.n);
  for (int i = 0; i < d.n; ++i) {
    for (int j = 0; j < d.n; ++j) m.at(i, j) = random_polynomial(rng, d.m, d.max_xdeg, max_terms);
  }
  return m;
}

inline Matrix<Polynomial> random_traceless_matrix(Rng& rng, const GenDims& d,
                                                  int max_terms = 2) {
  return traceless_part(random_matrix_polynomial(rng, d, max_terms));
}

// Traceless matrix of xi-homogeneous entries, the sl sector of a degree
// xi_deg + 1 component.
inline Matrix<PhasePolynomial> random_sl_matrix(Rng& rng, const GenDims& d, int xi_deg,
                                                int max_terms = 2) {
  Matrix<PhasePolynomial> m(d.n);
  for (int i = 0; i < d.n; ++i) {
    for (int j = 0; j < d.n; ++j) m.at(i, j) = random_xi_homogeneous(rng, d, xi_deg, max_terms);
  }
  return traceless_part(m);
}

inline Section random_section(Rng& rng, const GenDims& d, int max_terms = 3) {
  Section s(static_cast<std::size_t>(d.n));
  for (auto& entry : s) entry = random_polynomial(rng, d.m, d.max_xdeg, max_terms);
  return s;
}

inline DifferentialOperator random_operator(Rng& rng, const GenDims& d,
                                            bool force_scalar = false, int max_terms = 3) {
  DifferentialOperator t(d.m, d.n);
  int terms = rng.range(1, max_terms);
  for (int k = 0; k < terms; ++k) {
    MultiIndex alpha = random_multi_index(rng, d.m, d.max_order);
    Matrix<Polynomial> coeff =
        force_scalar ? scalar_matrix(d.n, random_polynomial(rng, d.m, d.max_xdeg))
                     : random_matrix_polynomial(rng, d);
    t.add_term(alpha, coeff);
  }
  return t;
}

inline DifferentialOperator random_nonzero_operator(Rng& rng, const GenDims& d,
                                                    bool force_scalar = false) {
  DifferentialOperator t = random_operator(rng, d, force_scalar);
  while (t.is_zero()) t = random_operator(rng, d, force_scalar);
  return t;
}

inline SymbolElement random_homogeneous_symbol(Rng& rng, const GenDims& d, int degree,
                                               int max_terms = 2) {
  SymbolElement s(d.m, d.n);
  Matrix<PhasePolynomial> sl =
      degree >= 1 ? random_sl_matrix(rng, d, degree - 1, max_terms)
                  : Matrix<PhasePolynomial>(d.n);
  s.add_component(degree, sl, random_xi_homogeneous(rng, d, degree, max_terms));
  return s;
}

inline SymbolElement random_symbol(Rng& rng, const GenDims& d, int max_terms = 2) {
  SymbolElement s(d.m, d.n);
  for (int k = 0; k <= d.max_order; ++k) {
    if (rng.chance(1, 2)) s += random_homogeneous_symbol(rng, d, k, max_terms);
  }
  if (s.is_zero()) s += random_homogeneous_symbol(rng, d, rng.range(0, d.max_order));
  return s;
}

// A few single-monomial components; the lean shape the morphism verifier
// transports in bulk.
inline SymbolElement random_sparse_symbol(Rng& rng, const GenDims& d, int max_components = 2) {
  SymbolElement s(d.m, d.n);
  int count = rng.range(1, max_components);
  for (int c = 0; c < count; ++c) {
    s += random_homogeneous_symbol(rng, d, rng.range(0, d.max_order), 1);
  }
  return s;
}

// Element of the square-zero ideal J: sl parts only, degrees >= 1.
inline SymbolElement random_j_element(Rng& rng, const GenDims& d, int max_terms = 2) {
  SymbolElement s(d.m, d.n);
  for (int k = 1; k <= d.max_order; ++k) {
    if (rng.chance(1, 2)) {
      s.add_component(k, random_sl_matrix(rng, d, k - 1, max_terms), PhasePolynomial());
    }
  }
  if (s.is_zero()) {
    int k = rng.range(1, d.max_order);
    s.add_component(k, random_sl_matrix(rng, d, k - 1, max_terms), PhasePolynomial());
  }
  return s;
}

// Scalar-only element, the Pol(T*M) sector.
inline SymbolElement random_pol_element(Rng& rng, const GenDims& d, int max_terms = 2) {
  SymbolElement s(d.m, d.n);
  for (int k = 0; k <= d.max_order; ++k) {
    if (rng.chance(1, 2)) {
      s.add_component(k, Matrix<PhasePolynomial>(d.n),
                      random_xi_homogeneous(rng, d, k, max_terms));
    }
  }
  return s;
}

inline GlSymbol random_gl_symbol(Rng& rng, const GenDims& d) {
  return GlSymbol(d.m, random_traceless_matrix(rng, d),
                  random_polynomial(rng, d.m, d.max_xdeg));
}

}  // namespace symalg

#endif  // SYMALG_RANDOM_GEN_HPP
