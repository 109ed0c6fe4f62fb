#ifndef SYMALG_MORPHISM_HPP
#define SYMALG_MORPHISM_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symalg/json_io.hpp"
#include "symalg/random_gen.hpp"
#include "symalg/symbol.hpp"

namespace symalg {

// Bundle isomorphism (x, e) -> (L x + c, G e) of the trivial bundle: an affine
// base diffeomorphism plus a constant gauge transformation. Affine maps keep
// polynomial coefficients polynomial; constant gauges conjugate without
// derivative corrections.
struct MorphismSpec {
  Matrix<Rational> L;
  std::vector<Rational> c;
  Matrix<Rational> G;

  int base_dim() const { return L.dim(); }
  int rank() const { return G.dim(); }
};

inline void validate_spec(const MorphismSpec& spec) {
  if (static_cast<int>(spec.c.size()) != spec.base_dim()) {
    throw DimensionMismatch("translation vector length differs from base dimension");
  }
  if (!is_invertible(spec.L)) throw SingularMatrixError("L is singular");
  if (!is_invertible(spec.G)) throw SingularMatrixError("G is singular");
}

inline MorphismSpec identity_spec(int m, int n) {
  return {identity_matrix<Rational>(m), std::vector<Rational>(static_cast<std::size_t>(m)),
          identity_matrix<Rational>(n)};
}

// Apply spec1 first, then spec2.
inline MorphismSpec compose(const MorphismSpec& spec2, const MorphismSpec& spec1) {
  if (spec1.base_dim() != spec2.base_dim() || spec1.rank() != spec2.rank()) {
    throw DimensionMismatch("morphism spec dimensions differ");
  }
  int m = spec1.base_dim();
  MorphismSpec out{spec2.L * spec1.L, std::vector<Rational>(static_cast<std::size_t>(m)),
                   spec2.G * spec1.G};
  for (int i = 0; i < m; ++i) {
    Rational v = spec2.c[static_cast<std::size_t>(i)];
    for (int j = 0; j < m; ++j) v += spec2.L.at(i, j) * spec1.c[static_cast<std::size_t>(j)];
    out.c[static_cast<std::size_t>(i)] = v;
  }
  return out;
}

inline MorphismSpec inverse(const MorphismSpec& spec) {
  Matrix<Rational> linv = inverse(spec.L);
  int m = spec.base_dim();
  MorphismSpec out{linv, std::vector<Rational>(static_cast<std::size_t>(m)), inverse(spec.G)};
  for (int i = 0; i < m; ++i) {
    Rational v(0);
    for (int j = 0; j < m; ++j) v -= linv.at(i, j) * spec.c[static_cast<std::size_t>(j)];
    out.c[static_cast<std::size_t>(i)] = v;
  }
  return out;
}

// p(A x + b), expanded exactly.
inline Polynomial substitute_affine(const Polynomial& p, const Matrix<Rational>& a,
                                    const std::vector<Rational>& b) {
  int m = a.dim();
  std::vector<Polynomial> forms(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    Polynomial f(b[static_cast<std::size_t>(i)]);
    for (int j = 0; j < m; ++j) {
      f.add_term(MultiIndex::unit(j), a.at(i, j));
    }
    forms[static_cast<std::size_t>(i)] = std::move(f);
  }
  Polynomial out;
  for (const auto& [key, coef] : p.terms()) {
    Polynomial term{coef};
    for (std::size_t v = 0; v < key.width(); ++v) {
      for (int t = 0; t < key[v]; ++t) term = term * forms[v];
    }
    out += term;
  }
  return out;
}

// Pushforward of a section: (Phi s)(y) = G s(phi^{-1}(y)).
inline Section transform_section(const MorphismSpec& spec, const Section& s) {
  Matrix<Rational> linv = inverse(spec.L);
  std::vector<Rational> shift(static_cast<std::size_t>(spec.base_dim()));
  for (int i = 0; i < spec.base_dim(); ++i) {
    Rational v(0);
    for (int j = 0; j < spec.base_dim(); ++j) {
      v -= linv.at(i, j) * spec.c[static_cast<std::size_t>(j)];
    }
    shift[static_cast<std::size_t>(i)] = v;
  }
  int n = spec.rank();
  Section pulled(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) pulled[i] = substitute_affine(s[i], linv, shift);
  Section out(s.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out[static_cast<std::size_t>(i)] += pulled[static_cast<std::size_t>(j)] * Polynomial(spec.G.at(i, j));
    }
  }
  return out;
}

// Conjugation T -> Phi o T o Phi^{-1}: coefficients are composed with
// phi^{-1} = L^{-1}(x - c) and conjugated by G; each d_a becomes the constant
// coefficient derivation sum_b L_{ba} d_b.
inline DifferentialOperator induce_on_operators(const MorphismSpec& spec,
                                                const DifferentialOperator& t) {
  if (spec.base_dim() != t.base_dim() || spec.rank() != t.rank()) {
    throw DimensionMismatch("morphism and operator dimensions differ");
  }
  int m = t.base_dim();
  int n = t.rank();
  Matrix<Rational> linv = inverse(spec.L);
  std::vector<Rational> shift(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    Rational v(0);
    for (int j = 0; j < m; ++j) v -= linv.at(i, j) * spec.c[static_cast<std::size_t>(j)];
    shift[static_cast<std::size_t>(i)] = v;
  }
  Matrix<Polynomial> g_poly = to_polynomial_matrix(spec.G);
  Matrix<Polynomial> ginv_poly = to_polynomial_matrix(inverse(spec.G));

  // Pushforward of each coordinate derivation.
  std::vector<DifferentialOperator> derivations;
  derivations.reserve(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    DifferentialOperator ell(m, n);
    for (int b = 0; b < m; ++b) {
      if (spec.L.at(b, a).is_zero()) continue;
      ell.add_term(MultiIndex::unit(b), scalar_matrix(n, Polynomial(spec.L.at(b, a))));
    }
    derivations.push_back(std::move(ell));
  }

  DifferentialOperator out(m, n);
  for (const auto& [alpha, coeff] : t.terms()) {
    Matrix<Polynomial> moved = map_entries(
        coeff, [&](const Polynomial& p) { return substitute_affine(p, linv, shift); });
    Matrix<Polynomial> conj = g_poly * moved * ginv_poly;
    DifferentialOperator d = identity_operator(m, n);
    for (std::size_t a = 0; a < alpha.width(); ++a) {
      for (int rep = 0; rep < alpha[a]; ++rep) {
        d = compose(d, derivations[a]);
      }
    }
    out += compose(operator_term(m, MultiIndex(), conj), d);
  }
  return out;
}

// Substitution x -> Ax + b, xi -> M xi with per-variable power tables, so
// repeated exponents across terms and matrix entries are expanded once.
class PhaseSubstitution {
 public:
  PhaseSubstitution(const Matrix<Rational>& a, const std::vector<Rational>& b,
                    const Matrix<Rational>& xi_map) {
    int m = a.dim();
    x_pows_.resize(static_cast<std::size_t>(m));
    xi_pows_.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      PhasePolynomial fx(b[static_cast<std::size_t>(i)]);
      PhasePolynomial fxi;
      for (int j = 0; j < m; ++j) {
        fx.add_term({MultiIndex::unit(j), MultiIndex()}, a.at(i, j));
        fxi.add_term({MultiIndex(), MultiIndex::unit(j)}, xi_map.at(i, j));
      }
      x_pows_[static_cast<std::size_t>(i)] = {PhasePolynomial(Rational(1)), std::move(fx)};
      xi_pows_[static_cast<std::size_t>(i)] = {PhasePolynomial(Rational(1)), std::move(fxi)};
    }
  }

  PhasePolynomial operator()(const PhasePolynomial& p) {
    PhasePolynomial out;
    for (const auto& [key, coef] : p.terms()) {
      PhasePolynomial term{coef};
      for (std::size_t v = 0; v < key.x.width(); ++v) {
        if (key.x[v] > 0) term = term * power(x_pows_[v], key.x[v]);
      }
      for (std::size_t v = 0; v < key.xi.width(); ++v) {
        if (key.xi[v] > 0) term = term * power(xi_pows_[v], key.xi[v]);
      }
      out += term;
    }
    return out;
  }

 private:
  static const PhasePolynomial& power(std::vector<PhasePolynomial>& table, int e) {
    while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * table[1]);
    return table[static_cast<std::size_t>(e)];
  }

  std::vector<std::vector<PhasePolynomial>> x_pows_;
  std::vector<std::vector<PhasePolynomial>> xi_pows_;
};

// Symbol-level shadow of the operator conjugation, as a direct substitution:
// x goes through phi^{-1}, each xi_a becomes sum_b L_{ba} xi_b (the pushforward
// of d_a), and matrix parts are conjugated by G. Degreewise this equals
// sigma_k(induce_on_operators(spec, lift(P, k))); the harness keeps that
// operator route as the oracle for this closed form.
inline SymbolElement induce_on_symbols(const MorphismSpec& spec, const SymbolElement& p) {
  if (spec.base_dim() != p.base_dim() || spec.rank() != p.rank()) {
    throw DimensionMismatch("morphism and symbol dimensions differ");
  }
  int m = p.base_dim();
  Matrix<Rational> linv = inverse(spec.L);
  std::vector<Rational> shift(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    Rational v(0);
    for (int j = 0; j < m; ++j) v -= linv.at(i, j) * spec.c[static_cast<std::size_t>(j)];
    shift[static_cast<std::size_t>(i)] = v;
  }
  // xi_a picks up row a of L transposed.
  Matrix<Rational> xi_map(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) xi_map.at(i, j) = spec.L.at(j, i);
  }
  Matrix<PhasePolynomial> g_phase = map_entries(spec.G, [](const Rational& r) {
    return PhasePolynomial(r);
  });
  Matrix<PhasePolynomial> ginv_phase = map_entries(inverse(spec.G), [](const Rational& r) {
    return PhasePolynomial(r);
  });
  PhaseSubstitution subst(linv, shift, xi_map);
  SymbolElement out(p.base_dim(), p.rank());
  for (const auto& [k, c] : p.components()) {
    Matrix<PhasePolynomial> moved =
        map_entries(c.sl, [&](const PhasePolynomial& e) { return subst(e); });
    out.add_component(k, g_phase * moved * ginv_phase, subst(c.scalar));
  }
  return out;
}

// The defining route, degree by degree; the suites check it against the
// substitution closed form above.
inline SymbolElement induce_on_symbols_via_operators(const MorphismSpec& spec,
                                                     const SymbolElement& p) {
  if (spec.base_dim() != p.base_dim() || spec.rank() != p.rank()) {
    throw DimensionMismatch("morphism and symbol dimensions differ");
  }
  SymbolElement out(p.base_dim(), p.rank());
  for (const auto& [k, c] : p.components()) {
    SymbolElement piece(p.base_dim(), p.rank());
    piece.add_component(k, c.sl, c.scalar);
    out += sigma_i(induce_on_operators(spec, lift(piece, k)), k);
  }
  return out;
}

// ---- JSON -------------------------------------------------------------------
//
// {"L": [[rational...]], "c": [rational...], "G": [[rational...]]}

inline ojson to_json(const MorphismSpec& spec) {
  ojson out;
  out["L"] = jsondetail::matrix_to_json(spec.L,
                                        [](const Rational& r) { return rational_to_string(r); });
  ojson c = ojson::array();
  for (const Rational& v : spec.c) c.push_back(rational_to_string(v));
  out["c"] = std::move(c);
  out["G"] = jsondetail::matrix_to_json(spec.G,
                                        [](const Rational& r) { return rational_to_string(r); });
  return out;
}

inline MorphismSpec morphism_from_json(const json& j, const std::string& path = "$") {
  jsondetail::reject_unknown_fields(j, {"L", "c", "G"}, path);
  const json& l_json = jsondetail::require_array(jsondetail::require_field(j, "L", path),
                                                 path + ".L");
  int m = static_cast<int>(l_json.size());
  if (m < 1) throw ParseError(path + ".L", "expected a non-empty square matrix");
  Matrix<Rational> l = jsondetail::parse_square_matrix(
      l_json, m, path + ".L",
      [](const std::string& s, const std::string& p) { return parse_rational(s, p); });
  const json& c_json = jsondetail::require_array(jsondetail::require_field(j, "c", path),
                                                 path + ".c");
  if (static_cast<int>(c_json.size()) != m) {
    throw ParseError(path + ".c", "expected " + std::to_string(m) + " entries");
  }
  std::vector<Rational> c;
  for (std::size_t i = 0; i < c_json.size(); ++i) {
    c.push_back(parse_rational(
        jsondetail::require_string(c_json[i], path + ".c[" + std::to_string(i) + "]"),
        path + ".c[" + std::to_string(i) + "]"));
  }
  const json& g_json = jsondetail::require_array(jsondetail::require_field(j, "G", path),
                                                 path + ".G");
  int n = static_cast<int>(g_json.size());
  if (n < 1) throw ParseError(path + ".G", "expected a non-empty square matrix");
  Matrix<Rational> g = jsondetail::parse_square_matrix(
      g_json, n, path + ".G",
      [](const std::string& s, const std::string& p) { return parse_rational(s, p); });
  MorphismSpec spec{std::move(l), std::move(c), std::move(g)};
  try {
    validate_spec(spec);
  } catch (const SingularMatrixError& e) {
    throw ParseError(path, e.what());
  }
  return spec;
}

inline MorphismSpec random_morphism_spec(Rng& rng, int m, int n) {
  auto random_invertible = [&rng](int dim) {
    Matrix<Rational> mat(dim);
    do {
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) mat.at(i, j) = Rational(rng.range(-3, 3));
      }
    } while (!is_invertible(mat));
    return mat;
  };
  MorphismSpec spec{random_invertible(m), {}, random_invertible(n)};
  for (int i = 0; i < m; ++i) spec.c.push_back(random_rational(rng));
  return spec;
}

// ---- verification -----------------------------------------------------------

// A symbol-level transformation together with its inverse; the induced map of
// a spec by default, or an injected corruption in harness self-tests.
struct SymbolMap {
  std::function<SymbolElement(const SymbolElement&)> forward;
  std::function<SymbolElement(const SymbolElement&)> backward;
};

inline SymbolMap induced_symbol_map(const MorphismSpec& spec) {
  MorphismSpec inv = inverse(spec);
  return {[spec](const SymbolElement& p) { return induce_on_symbols(spec, p); },
          [inv](const SymbolElement& p) { return induce_on_symbols(inv, p); }};
}

struct CheckOutcome {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::optional<ojson> counterexample;
};

struct VerificationReport {
  std::vector<CheckOutcome> checks;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (c.failures != 0) return false;
    }
    return true;
  }

  const CheckOutcome* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

// Psi(P.Q) = Psi(P).Psi(Q) and Psi({P,Q}) = {Psi(P),Psi(Q)} on random pairs,
// both sides computed independently.
inline VerificationReport verify_poisson_homomorphism_with(const SymbolMap& map,
                                                           const GenDims& dims, int trials,
                                                           std::uint64_t seed) {
  if (trials < 1) throw InvariantViolation("trials must be >= 1");
  CheckOutcome product{"product-preserved", trials, 0, std::nullopt};
  CheckOutcome bracket{"bracket-preserved", trials, 0, std::nullopt};
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, "poisson-homomorphism", static_cast<std::uint64_t>(t)));
    SymbolElement p = random_sparse_symbol(rng, dims);
    SymbolElement q = random_sparse_symbol(rng, dims);
    SymbolElement fp = map.forward(p);
    SymbolElement fq = map.forward(q);
    SymbolElement lhs_prod = map.forward(symbol_product(p, q));
    SymbolElement rhs_prod = symbol_product(fp, fq);
    if (lhs_prod != rhs_prod && ++product.failures == 1) {
      product.counterexample = ojson{{"P", to_json(p)},
                                     {"Q", to_json(q)},
                                     {"psi_of_product", to_json(lhs_prod)},
                                     {"product_of_psi", to_json(rhs_prod)}};
    }
    SymbolElement lhs_br = map.forward(symbol_bracket(p, q));
    SymbolElement rhs_br = symbol_bracket(fp, fq);
    if (lhs_br != rhs_br && ++bracket.failures == 1) {
      bracket.counterexample = ojson{{"P", to_json(p)},
                                     {"Q", to_json(q)},
                                     {"psi_of_bracket", to_json(lhs_br)},
                                     {"bracket_of_psi", to_json(rhs_br)}};
    }
  }
  return {{product, bracket}};
}

inline VerificationReport verify_poisson_homomorphism(const MorphismSpec& spec, int trials,
                                                      std::uint64_t seed) {
  validate_spec(spec);
  GenDims dims{spec.base_dim(), spec.rank(), 2, 3};
  return verify_poisson_homomorphism_with(induced_symbol_map(spec), dims, trials, seed);
}

// Transport of the structural subspaces: (a) the square-zero ideal both ways,
// (b) degree-0 both ways, (c) homogeneous degree k to degree k, (d) sl-type
// degree-1 elements to sl-type elements.
inline VerificationReport verify_structure_preservation_with(const SymbolMap& map,
                                                             const GenDims& dims, int trials,
                                                             std::uint64_t seed) {
  if (trials < 1) throw InvariantViolation("trials must be >= 1");
  CheckOutcome ideal{"ideal-preserved", trials, 0, std::nullopt};
  CheckOutcome degree0{"degree0-preserved", trials, 0, std::nullopt};
  CheckOutcome gradation{"gradation-preserved", trials, 0, std::nullopt};
  CheckOutcome sl_type{"sl-type-preserved", trials, 0, std::nullopt};
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, "structure-preservation", static_cast<std::uint64_t>(t)));

    SymbolElement u = random_j_element(rng, dims, 1);
    SymbolElement fu = map.forward(u);
    SymbolElement bu = map.backward(u);
    bool ideal_ok = j_membership(fu) && j_membership(bu) &&
                    symbol_product(fu, fu).is_zero();
    if (!ideal_ok && ++ideal.failures == 1) {
      ideal.counterexample = ojson{{"u", to_json(u)}, {"psi_u", to_json(fu)}};
    }

    PhasePolynomial f0 = to_phase(random_polynomial(rng, dims.m, dims.max_xdeg));
    SymbolElement s0 = scalar_symbol(dims.m, dims.n, 0, f0);
    SymbolElement fs0 = map.forward(s0);
    SymbolElement bs0 = map.backward(s0);
    auto is_degree0 = [](const SymbolElement& s) {
      return s.is_zero() || (s.homogeneous_degree() && *s.homogeneous_degree() == 0);
    };
    if (!(is_degree0(fs0) && is_degree0(bs0)) && ++degree0.failures == 1) {
      degree0.counterexample = ojson{{"f", to_json(s0)}, {"psi_f", to_json(fs0)}};
    }

    int k = rng.range(0, dims.max_order);
    SymbolElement hom = random_homogeneous_symbol(rng, dims, k);
    SymbolElement fhom = map.forward(hom);
    bool graded_ok = fhom.is_zero() || (fhom.homogeneous_degree() &&
                                        *fhom.homogeneous_degree() == k);
    if (!graded_ok && ++gradation.failures == 1) {
      gradation.counterexample =
          ojson{{"degree", k}, {"P", to_json(hom)}, {"psi_P", to_json(fhom)}};
    }

    SymbolElement a(dims.m, dims.n);
    a.add_component(1, to_phase_matrix(random_traceless_matrix(rng, dims)), PhasePolynomial());
    SymbolElement fa = map.forward(a);
    bool sl_ok = true;
    for (const auto& [deg, comp] : fa.components()) {
      if (deg != 1 || !comp.scalar.is_zero()) sl_ok = false;
    }
    if (!sl_ok && ++sl_type.failures == 1) {
      sl_type.counterexample = ojson{{"A", to_json(a)}, {"psi_A", to_json(fa)}};
    }
  }
  return {{ideal, degree0, gradation, sl_type}};
}

inline VerificationReport verify_structure_preservation(const MorphismSpec& spec, int trials,
                                                        std::uint64_t seed) {
  validate_spec(spec);
  GenDims dims{spec.base_dim(), spec.rank(), 2, 3};
  return verify_structure_preservation_with(induced_symbol_map(spec), dims, trials, seed);
}

}  // namespace symalg

#endif  // SYMALG_MORPHISM_HPP
