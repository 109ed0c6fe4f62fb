#ifndef SYMALG_DIFF_OPERATOR_HPP
#define SYMALG_DIFF_OPERATOR_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "symalg/matrix.hpp"
#include "symalg/multi_index.hpp"
#include "symalg/polynomial.hpp"

namespace symalg {

// A section of the trivial rank-n bundle: n polynomials in the base variables.
using Section = std::vector<Polynomial>;

// Matrix-coefficient differential operator sum_alpha A_alpha d^alpha acting on
// sections of the trivial bundle U x R^n, U in R^m. Canonical form stores no
// zero coefficient matrices; the zero operator has an empty term map.
class DifferentialOperator {
 public:
  using term_map = std::map<MultiIndex, Matrix<Polynomial>, MultiIndex::Less>;

  DifferentialOperator(int base_dim, int rank) : m_(base_dim), n_(rank) {
    if (base_dim < 1) throw DimensionMismatch("base dimension must be >= 1");
    if (rank < 1) throw DimensionMismatch("rank must be >= 1");
  }

  int base_dim() const { return m_; }
  int rank() const { return n_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MultiIndex& alpha, const Matrix<Polynomial>& coeff) {
    if (coeff.dim() != n_) throw DimensionMismatch("coefficient matrix rank mismatch");
    if (alpha.width() > static_cast<std::size_t>(m_)) {
      throw InvariantViolation("derivative index exceeds base dimension");
    }
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (variable_span(coeff.at(i, j)) > static_cast<std::size_t>(m_)) {
          throw InvariantViolation("coefficient uses a variable beyond the base dimension");
        }
      }
    }
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
      if (!coeff.is_zero()) terms_.emplace(alpha, coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Matrix<Polynomial> coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Matrix<Polynomial>(n_) : it->second;
  }

  DifferentialOperator& operator+=(const DifferentialOperator& o) {
    check_dims(o);
    for (const auto& [alpha, coeff] : o.terms_) add_term(alpha, coeff);
    return *this;
  }
  DifferentialOperator& operator-=(const DifferentialOperator& o) {
    check_dims(o);
    for (const auto& [alpha, coeff] : o.terms_) add_term(alpha, -coeff);
    return *this;
  }

  friend DifferentialOperator operator+(DifferentialOperator a, const DifferentialOperator& b) {
    return a += b;
  }
  friend DifferentialOperator operator-(DifferentialOperator a, const DifferentialOperator& b) {
    return a -= b;
  }
  friend DifferentialOperator operator-(const DifferentialOperator& a) {
    DifferentialOperator r(a.m_, a.n_);
    for (const auto& [alpha, coeff] : a.terms_) r.terms_.emplace(alpha, -coeff);
    return r;
  }

  DifferentialOperator scaled(const Rational& r) const {
    DifferentialOperator out(m_, n_);
    if (r.is_zero()) return out;
    for (const auto& [alpha, coeff] : terms_) out.terms_.emplace(alpha, coeff.scaled(r));
    return out;
  }

  friend bool operator==(const DifferentialOperator& a, const DifferentialOperator& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const DifferentialOperator& a, const DifferentialOperator& b) {
    return !(a == b);
  }

  void check_dims(const DifferentialOperator& o) const {
    if (m_ != o.m_ || n_ != o.n_) throw DimensionMismatch("operator dimensions differ");
  }

 private:
  int m_;
  int n_;
  term_map terms_;
};

// gamma_u: the multiplication operator s -> u s.
inline DifferentialOperator gamma(int m, int n, const Polynomial& u) {
  DifferentialOperator t(m, n);
  t.add_term(MultiIndex(), scalar_matrix(n, u));
  return t;
}

inline DifferentialOperator identity_operator(int m, int n) {
  return gamma(m, n, Polynomial(Rational(1)));
}

// Single term A d^alpha.
inline DifferentialOperator operator_term(int m, const MultiIndex& alpha,
                                          const Matrix<Polynomial>& coeff) {
  DifferentialOperator t(m, coeff.dim());
  t.add_term(alpha, coeff);
  return t;
}

inline Section apply(const DifferentialOperator& t, const Section& s) {
  if (static_cast<int>(s.size()) != t.rank()) {
    throw DimensionMismatch("section length differs from operator rank");
  }
  int n = t.rank();
  Section out(static_cast<std::size_t>(n));
  for (const auto& [alpha, coeff] : t.terms()) {
    Section ds(s.size());
    for (int i = 0; i < n; ++i) ds[static_cast<std::size_t>(i)] = dx_power(s[static_cast<std::size_t>(i)], alpha);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        out[static_cast<std::size_t>(i)] += coeff.at(i, j) * ds[static_cast<std::size_t>(j)];
      }
    }
  }
  return out;
}

// Composition via the Leibniz rule:
//   (A d^alpha)(B d^beta) = sum_{gamma <= alpha} C(alpha,gamma) A d^gamma(B) d^{alpha-gamma+beta}.
inline DifferentialOperator compose(const DifferentialOperator& t, const DifferentialOperator& d) {
  t.check_dims(d);
  DifferentialOperator out(t.base_dim(), t.rank());
  for (const auto& [alpha, a] : t.terms()) {
    for (const auto& [beta, b] : d.terms()) {
      for_each_sub_index(alpha, [&](const MultiIndex& g) {
        Matrix<Polynomial> db = map_entries(b, [&](const Polynomial& p) { return dx_power(p, g); });
        if (db.is_zero()) return;
        Rational bin = multi_binomial(alpha, g);
        out.add_term(alpha.minus(g) + beta, (a * db).scaled(bin));
      });
    }
  }
  return out;
}

inline DifferentialOperator commutator(const DifferentialOperator& t,
                                       const DifferentialOperator& d) {
  return compose(t, d) - compose(d, t);
}

// Usual differential order: max |alpha|, or nothing for the zero operator.
inline std::optional<int> diff_order(const DifferentialOperator& t) {
  if (t.is_zero()) return std::nullopt;
  return t.terms().rbegin()->first.total();
}

// Order in the quantum-Poisson filtration P^k, decided by the local form:
// membership in P^k requires matrix coefficients below order k and scalar
// coefficients exactly at order k. For the zero operator there is no order.
inline std::optional<int> pson_order(const DifferentialOperator& t) {
  auto d = diff_order(t);
  if (!d) return std::nullopt;
  for (const auto& [alpha, coeff] : t.terms()) {
    if (alpha.total() == *d && !is_scalar_matrix(coeff)) return *d + 1;
  }
  return *d;
}

inline bool in_P_k(const DifferentialOperator& t, int k) {
  auto ord = pson_order(t);
  return !ord || *ord <= k;
}

inline bool in_D_k(const DifferentialOperator& t, int k) {
  auto ord = diff_order(t);
  return !ord || *ord <= k;
}

}  // namespace symalg

#endif  // SYMALG_DIFF_OPERATOR_HPP
