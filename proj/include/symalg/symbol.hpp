#ifndef SYMALG_SYMBOL_HPP
#define SYMALG_SYMBOL_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "symalg/diff_operator.hpp"
#include "symalg/matrix.hpp"
#include "symalg/polynomial.hpp"

namespace symalg {

// Degree-k piece of the graded symbol algebra: a traceless matrix of
// xi-homogeneous degree k-1 polynomials together with a scalar xi-homogeneous
// degree-k polynomial. Degree 0 carries no sl part.
struct GradedComponent {
  Matrix<PhasePolynomial> sl;
  PhasePolynomial scalar;

  bool is_zero() const { return sl.is_zero() && scalar.is_zero(); }

  friend bool operator==(const GradedComponent& a, const GradedComponent& b) {
    return a.sl == b.sl && a.scalar == b.scalar;
  }
  friend bool operator!=(const GradedComponent& a, const GradedComponent& b) {
    return !(a == b);
  }
};

// Element of the graded algebra S = sum_k S^k with
// S^k = Pol^{k-1}(T*M, sl(n)) + Pol^k(T*M, R). Components keep their grading
// invariants by construction; zero components are never stored.
class SymbolElement {
 public:
  using component_map = std::map<int, GradedComponent>;

  SymbolElement(int base_dim, int rank) : m_(base_dim), n_(rank) {
    if (base_dim < 1) throw DimensionMismatch("base dimension must be >= 1");
    if (rank < 1) throw DimensionMismatch("rank must be >= 1");
  }

  int base_dim() const { return m_; }
  int rank() const { return n_; }
  const component_map& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  void add_component(int degree, const Matrix<PhasePolynomial>& sl,
                     const PhasePolynomial& scalar) {
    validate_component(degree, sl, scalar);
    auto it = comps_.find(degree);
    if (it == comps_.end()) {
      GradedComponent c{sl, scalar};
      if (!c.is_zero()) comps_.emplace(degree, std::move(c));
    } else {
      it->second.sl += sl;
      it->second.scalar += scalar;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  GradedComponent component(int degree) const {
    auto it = comps_.find(degree);
    if (it != comps_.end()) return it->second;
    return GradedComponent{Matrix<PhasePolynomial>(n_), PhasePolynomial()};
  }

  // The degree when the element is homogeneous (zero counts as homogeneous of
  // any degree and reports nothing here).
  std::optional<int> homogeneous_degree() const {
    if (comps_.size() == 1) return comps_.begin()->first;
    return std::nullopt;
  }

  SymbolElement& operator+=(const SymbolElement& o) {
    check_dims(o);
    for (const auto& [k, c] : o.comps_) add_component(k, c.sl, c.scalar);
    return *this;
  }
  SymbolElement& operator-=(const SymbolElement& o) {
    check_dims(o);
    for (const auto& [k, c] : o.comps_) add_component(k, -c.sl, -c.scalar);
    return *this;
  }

  friend SymbolElement operator+(SymbolElement a, const SymbolElement& b) { return a += b; }
  friend SymbolElement operator-(SymbolElement a, const SymbolElement& b) { return a -= b; }
  friend SymbolElement operator-(const SymbolElement& a) { return a.scaled(Rational(-1)); }

  SymbolElement scaled(const Rational& r) const {
    SymbolElement out(m_, n_);
    if (r.is_zero()) return out;
    for (const auto& [k, c] : comps_) {
      out.comps_.emplace(k, GradedComponent{c.sl.scaled(r), c.scalar * r});
    }
    return out;
  }

  friend bool operator==(const SymbolElement& a, const SymbolElement& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.comps_ == b.comps_;
  }
  friend bool operator!=(const SymbolElement& a, const SymbolElement& b) { return !(a == b); }

  void check_dims(const SymbolElement& o) const {
    if (m_ != o.m_ || n_ != o.n_) throw DimensionMismatch("symbol dimensions differ");
  }

 private:
  void validate_component(int degree, const Matrix<PhasePolynomial>& sl,
                          const PhasePolynomial& scalar) const {
    if (degree < 0) throw InvariantViolation("symbol degree must be non-negative");
    if (sl.dim() != n_) throw DimensionMismatch("sl part rank mismatch");
    if (!sl.trace().is_zero()) throw InvariantViolation("sl part must be traceless");
    if (degree == 0 && !sl.is_zero()) {
      throw InvariantViolation("degree 0 admits no sl part");
    }
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (!is_xi_homogeneous(sl.at(i, j), degree - 1)) {
          throw InvariantViolation("sl part must be xi-homogeneous of degree k-1");
        }
        if (variable_span(sl.at(i, j)) > static_cast<std::size_t>(m_)) {
          throw InvariantViolation("sl part uses a variable beyond the base dimension");
        }
      }
    }
    if (!is_xi_homogeneous(scalar, degree)) {
      throw InvariantViolation("scalar part must be xi-homogeneous of degree k");
    }
    if (variable_span(scalar) > static_cast<std::size_t>(m_)) {
      throw InvariantViolation("scalar part uses a variable beyond the base dimension");
    }
  }

  int m_;
  int n_;
  component_map comps_;
};

inline SymbolElement scalar_symbol(int m, int n, int degree, const PhasePolynomial& f) {
  SymbolElement s(m, n);
  s.add_component(degree, Matrix<PhasePolynomial>(n), f);
  return s;
}

inline SymbolElement constant_symbol(int m, int n, const Rational& c) {
  return scalar_symbol(m, n, 0, PhasePolynomial(c));
}

inline SymbolElement coordinate_symbol(int m, int n, std::size_t var) {
  return scalar_symbol(m, n, 0,
                       PhasePolynomial::monomial({MultiIndex::unit(static_cast<int>(var)),
                                                  MultiIndex()},
                                                 Rational(1)));
}

// ---- symbol extraction -----------------------------------------------------

// i-degree symbol of T: zero above the order, and at i = ord(T) the class of T
// mod P^{i-1}, realized as the traceless parts of the |alpha| = i-1
// coefficients plus the scalar parts of the |alpha| = i coefficients.
inline SymbolElement sigma_i(const DifferentialOperator& t, int i) {
  SymbolElement out(t.base_dim(), t.rank());
  auto ord = pson_order(t);
  if (!ord) return out;
  if (i < *ord) throw Error("sigma_i is undefined below the quantum-Poisson order");
  if (i > *ord) return out;
  int n = t.rank();
  Matrix<PhasePolynomial> sl(n);
  PhasePolynomial scalar;
  for (const auto& [alpha, coeff] : t.terms()) {
    if (alpha.total() == i - 1) {
      sl += to_phase_matrix(traceless_part(coeff)) * xi_monomial(alpha);
    } else if (alpha.total() == i) {
      scalar += to_phase(coeff.trace() * Rational(1, n)) * xi_monomial(alpha);
    }
  }
  out.add_component(i, sl, scalar);
  return out;
}

inline SymbolElement sigma_pson(const DifferentialOperator& t) {
  auto ord = pson_order(t);
  if (!ord) throw Error("sigma_pson is undefined for the zero operator");
  return sigma_i(t, *ord);
}

// Canonical representative of a homogeneous degree-k symbol: A xi^alpha
// becomes A d^alpha and scalar monomials u xi^beta become u id d^beta, so
// sigma_i(lift(P,k), k) = P.
inline DifferentialOperator lift(const SymbolElement& p, int k) {
  DifferentialOperator out(p.base_dim(), p.rank());
  if (p.is_zero()) return out;
  if (p.components().size() != 1 || p.components().begin()->first != k) {
    throw InvariantViolation("lift expects a homogeneous symbol of the stated degree");
  }
  int n = p.rank();
  const GradedComponent& c = p.components().begin()->second;
  std::map<MultiIndex, Matrix<Polynomial>, MultiIndex::Less> acc;
  auto coeff_at = [&](const MultiIndex& alpha) -> Matrix<Polynomial>& {
    auto it = acc.find(alpha);
    if (it == acc.end()) it = acc.emplace(alpha, Matrix<Polynomial>(n)).first;
    return it->second;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (const auto& [key, coef] : c.sl.at(i, j).terms()) {
        coeff_at(key.xi).at(i, j) += Polynomial::monomial(key.x, coef);
      }
    }
  }
  for (const auto& [key, coef] : c.scalar.terms()) {
    Matrix<Polynomial>& m = coeff_at(key.xi);
    for (int i = 0; i < n; ++i) m.at(i, i) += Polynomial::monomial(key.x, coef);
  }
  for (const auto& [alpha, coeff] : acc) out.add_term(alpha, coeff);
  return out;
}

// ---- graded product and bracket --------------------------------------------

namespace detail {

inline Matrix<PhasePolynomial> entrywise_bracket(const PhasePolynomial& f,
                                                 const Matrix<PhasePolynomial>& b) {
  return map_entries(b, [&](const PhasePolynomial& e) { return canonical_bracket(f, e); });
}

inline Matrix<PhasePolynomial> entrywise_bracket(const Matrix<PhasePolynomial>& a,
                                                 const PhasePolynomial& g) {
  return map_entries(a, [&](const PhasePolynomial& e) { return canonical_bracket(e, g); });
}

}  // namespace detail

// Bilinear extension of the homogeneous rule
//   (A,f) . (B,g) = (g A + f B, f g)   in degree i+j,
// the closed form of sigma_{i+j}(T o D) for representatives T, D.
inline SymbolElement symbol_product(const SymbolElement& p, const SymbolElement& q) {
  p.check_dims(q);
  SymbolElement out(p.base_dim(), p.rank());
  for (const auto& [i, pc] : p.components()) {
    for (const auto& [j, qc] : q.components()) {
      Matrix<PhasePolynomial> sl = pc.sl * qc.scalar + qc.sl * pc.scalar;
      PhasePolynomial scalar = pc.scalar * qc.scalar;
      out.add_component(i + j, sl, scalar);
    }
  }
  return out;
}

// Bilinear extension of
//   {(A,f),(B,g)} = ([A,B] + {f,B} + {A,g}, {f,g})   in degree i+j-1,
// with [.,.] the pointwise matrix commutator and {.,.} the canonical bracket;
// the closed form of sigma_{i+j-1}([T,D]).
inline SymbolElement symbol_bracket(const SymbolElement& p, const SymbolElement& q) {
  p.check_dims(q);
  SymbolElement out(p.base_dim(), p.rank());
  for (const auto& [i, pc] : p.components()) {
    for (const auto& [j, qc] : q.components()) {
      if (i + j - 1 < 0) continue;  // degree-0 pairs bracket to zero identically
      Matrix<PhasePolynomial> sl = commutator(pc.sl, qc.sl) +
                                   detail::entrywise_bracket(pc.scalar, qc.sl) +
                                   detail::entrywise_bracket(pc.sl, qc.scalar);
      PhasePolynomial scalar = canonical_bracket(pc.scalar, qc.scalar);
      out.add_component(i + j - 1, sl, scalar);
    }
  }
  return out;
}

// ---- the exact sequence ----------------------------------------------------

// Scalar principal part, degreewise: an algebra homomorphism onto Pol(T*M).
inline PhasePolynomial delta(const SymbolElement& p) {
  PhasePolynomial out;
  for (const auto& [k, c] : p.components()) {
    (void)k;
    out += c.scalar;
  }
  return out;
}

// Inclusion of sl-valued symbols in degree k; delta o theta = 0.
inline SymbolElement theta(const SymbolElement&) = delete;  // guard against misuse
inline SymbolElement theta(const Matrix<PhasePolynomial>& a, int k, int m) {
  SymbolElement out(m, a.dim());
  out.add_component(k, a, PhasePolynomial());
  return out;
}

// ---- the square-zero ideal -------------------------------------------------

// J = { P : P.P = 0 } = ker delta.
inline bool j_membership(const SymbolElement& p) { return delta(p).is_zero(); }

struct SymbolDecomposition {
  SymbolElement j_part;
  SymbolElement pol_part;
};

// Split along S = J + Pol(T*M): the sl parts against the scalar parts.
inline SymbolDecomposition decompose(const SymbolElement& p) {
  SymbolElement j(p.base_dim(), p.rank());
  SymbolElement pol(p.base_dim(), p.rank());
  for (const auto& [k, c] : p.components()) {
    j.add_component(k, c.sl, PhasePolynomial());
    pol.add_component(k, Matrix<PhasePolynomial>(p.rank()), c.scalar);
  }
  return {std::move(j), std::move(pol)};
}

// Inverse of u + f for u square-zero and f a nonzero rational constant:
// (u + f)^{-1} = -f^{-2} u + f^{-1}. Everything else is rejected: in the
// polynomial coefficient ring only nonzero constants are invertible.
inline SymbolElement invert(const SymbolElement& p) {
  PhasePolynomial d = delta(p);
  if (d.is_zero()) {
    throw NotInvertibleError(NotInvertibleError::Reason::zero_scalar,
                             "scalar part is zero; element squares to zero");
  }
  if (!d.is_constant()) {
    throw NotInvertibleError(NotInvertibleError::Reason::non_constant_scalar,
                             "scalar part is not a nonzero rational constant");
  }
  Rational f = d.constant_value();
  SymbolDecomposition parts = decompose(p);
  Rational inv_f = Rational(1) / f;
  SymbolElement out = parts.j_part.scaled(-inv_f * inv_f);
  out += constant_symbol(p.base_dim(), p.rank(), inv_f);
  return out;
}

// ---- the bracket-lowering subspace of Lemma "filtr" ------------------------

// Membership in { T : {T, f} lies in the degree-(i-1) component for every
// base function f }, equal to S^i + gl: checked by bracketing against each
// coordinate symbol. Brackets with degree-0 symbols are linear in the first
// x-derivatives of the function, so the coordinates decide the general case.
inline bool lowering_set_membership(const SymbolElement& p, int i) {
  if (i < 0) throw InvariantViolation("lowering index must be non-negative");
  for (int a = 0; a < p.base_dim(); ++a) {
    SymbolElement b = symbol_bracket(p, coordinate_symbol(p.base_dim(), p.rank(),
                                                          static_cast<std::size_t>(a)));
    for (const auto& [k, c] : b.components()) {
      (void)c;
      if (k != i - 1) return false;
    }
  }
  return true;
}

}  // namespace symalg

#endif  // SYMALG_SYMBOL_HPP
