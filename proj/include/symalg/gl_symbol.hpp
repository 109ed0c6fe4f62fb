#ifndef SYMALG_GL_SYMBOL_HPP
#define SYMALG_GL_SYMBOL_HPP

#include <utility>

#include "symalg/matrix.hpp"
#include "symalg/polynomial.hpp"
#include "symalg/symbol.hpp"

namespace symalg {

// The finite-order symbol algebra sl(E) + C^inf(M) id: the image of gl(E)
// under the pair of its degree-1 and degree-0 symbol data.
class GlSymbol {
 public:
  GlSymbol(int base_dim, Matrix<Polynomial> traceless, Polynomial scalar)
      : m_(base_dim), a_(std::move(traceless)), u_(std::move(scalar)) {
    if (base_dim < 1) throw DimensionMismatch("base dimension must be >= 1");
    if (!a_.trace().is_zero()) throw InvariantViolation("matrix part must be traceless");
  }

  static GlSymbol zero(int m, int n) {
    return GlSymbol(m, Matrix<Polynomial>(n), Polynomial());
  }

  int base_dim() const { return m_; }
  int rank() const { return a_.dim(); }
  const Matrix<Polynomial>& matrix_part() const { return a_; }
  const Polynomial& scalar_part() const { return u_; }
  bool is_zero() const { return a_.is_zero() && u_.is_zero(); }

  friend bool operator==(const GlSymbol& a, const GlSymbol& b) {
    return a.m_ == b.m_ && a.a_ == b.a_ && a.u_ == b.u_;
  }
  friend bool operator!=(const GlSymbol& a, const GlSymbol& b) { return !(a == b); }

  void check_dims(const GlSymbol& o) const {
    if (m_ != o.m_ || rank() != o.rank()) throw DimensionMismatch("gl symbol dimensions differ");
  }

 private:
  int m_;
  Matrix<Polynomial> a_;
  Polynomial u_;
};

// sigma applied to a matrix multiplication operator B: the traceless part in
// degree 1 together with tr(B)/n in degree 0.
inline GlSymbol gl_embed(int m, const Matrix<Polynomial>& b) {
  return GlSymbol(m, traceless_part(b), b.trace() * Rational(1, b.dim()));
}

// (A + u)(B + v) = (v A + u B, u v).
inline GlSymbol gl_product(const GlSymbol& p, const GlSymbol& q) {
  p.check_dims(q);
  return GlSymbol(p.base_dim(),
                  p.matrix_part() * q.scalar_part() + q.matrix_part() * p.scalar_part(),
                  p.scalar_part() * q.scalar_part());
}

// {A + u, B + v} = [A, B].
inline GlSymbol gl_bracket(const GlSymbol& p, const GlSymbol& q) {
  p.check_dims(q);
  return GlSymbol(p.base_dim(), commutator(p.matrix_part(), q.matrix_part()), Polynomial());
}

// (A + u)^{-1} = u^{-2}(-A + u), defined exactly when u is a nonzero constant.
inline GlSymbol gl_invert(const GlSymbol& p) {
  const Polynomial& u = p.scalar_part();
  if (u.is_zero()) {
    throw NotInvertibleError(NotInvertibleError::Reason::zero_scalar,
                             "scalar part is zero; element squares to zero");
  }
  if (!u.is_constant()) {
    throw NotInvertibleError(NotInvertibleError::Reason::non_constant_scalar,
                             "scalar part is not a nonzero rational constant");
  }
  Rational inv_u = Rational(1) / u.constant_value();
  return GlSymbol(p.base_dim(), p.matrix_part().scaled(-inv_u * inv_u),
                  Polynomial(inv_u));
}

// Split along sigma(gl(E)) = J(E) + C^inf(M): the square-zero part (A, 0) and
// the function part u.
inline std::pair<GlSymbol, Polynomial> gl_j_decompose(const GlSymbol& p) {
  return {GlSymbol(p.base_dim(), p.matrix_part(), Polynomial()), p.scalar_part()};
}

// Embedding into the full symbol algebra: (A, u) -> (A, 0)_1 + (0, u)_0.
inline SymbolElement to_symbol(const GlSymbol& p) {
  SymbolElement s(p.base_dim(), p.rank());
  s.add_component(1, to_phase_matrix(p.matrix_part()), PhasePolynomial());
  s.add_component(0, Matrix<PhasePolynomial>(p.rank()), to_phase(p.scalar_part()));
  return s;
}

}  // namespace symalg

#endif  // SYMALG_GL_SYMBOL_HPP
