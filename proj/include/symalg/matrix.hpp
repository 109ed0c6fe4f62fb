#ifndef SYMALG_MATRIX_HPP
#define SYMALG_MATRIX_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "symalg/polynomial.hpp"
#include "symalg/rational.hpp"

namespace symalg {

// Square matrix over an exact ring entry type (Rational, Polynomial,
// PhasePolynomial). Entries default-construct to zero.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
    if (n < 1) throw DimensionMismatch("matrix dimension must be positive");
  }

  int dim() const { return n_; }

  T& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const T& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const T& v) { return v.is_zero(); });
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_dim(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_dim(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a) {
    Matrix r(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = -a.a_[i];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_same_dim(b);
    Matrix r(a.n_);
    for (int i = 0; i < a.n_; ++i) {
      for (int k = 0; k < a.n_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (int j = 0; j < a.n_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
    return r;
  }

  // Entrywise scaling by a ring element or a rational.
  friend Matrix operator*(const Matrix& a, const T& s) {
    Matrix r(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] * s;
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& a) { return a * s; }

  Matrix scaled(const Rational& r) const {
    Matrix out(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * r;
    return out;
  }

  T trace() const {
    T t{};
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_same_dim(const Matrix& o) const {
    if (n_ != o.n_) throw DimensionMismatch("matrix dimensions differ");
  }

  int n_ = 0;
  std::vector<T> a_;
};

template <class T>
Matrix<T> identity_matrix(int n) {
  Matrix<T> m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = T(Rational(1));
  return m;
}

template <class T>
Matrix<T> scalar_matrix(int n, const T& v) {
  Matrix<T> m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = v;
  return m;
}

// Matrix unit E_ij over any entry ring.
template <class T>
Matrix<T> matrix_unit(int n, int i, int j, const Rational& c = Rational(1)) {
  Matrix<T> m(n);
  m.at(i, j) = T(c);
  return m;
}

template <class T>
bool is_scalar_matrix(const Matrix<T>& m) {
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      if (i != j && !m.at(i, j).is_zero()) return false;
    }
  }
  for (int i = 1; i < m.dim(); ++i) {
    if (m.at(i, i) != m.at(0, 0)) return false;
  }
  return true;
}

// A - tr(A)/n id, the sl projection; exact over the rationals.
template <class T>
Matrix<T> traceless_part(const Matrix<T>& m) {
  T shift = m.trace() * Rational(1, m.dim());
  Matrix<T> r = m;
  for (int i = 0; i < m.dim(); ++i) r.at(i, i) -= shift;
  return r;
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

template <class From, class Fn>
auto map_entries(const Matrix<From>& m, Fn&& fn) -> Matrix<decltype(fn(m.at(0, 0)))> {
  Matrix<decltype(fn(m.at(0, 0)))> r(m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) r.at(i, j) = fn(m.at(i, j));
  }
  return r;
}

inline Matrix<Polynomial> to_polynomial_matrix(const Matrix<Rational>& m) {
  return map_entries(m, [](const Rational& r) { return Polynomial(r); });
}

inline Matrix<PhasePolynomial> to_phase_matrix(const Matrix<Polynomial>& m) {
  return map_entries(m, [](const Polynomial& p) { return to_phase(p); });
}

// Exact Gauss-Jordan inverse over the rationals.
inline Matrix<Rational> inverse(const Matrix<Rational>& m) {
  int n = m.dim();
  Matrix<Rational> a = m;
  Matrix<Rational> inv = identity_matrix<Rational>(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw SingularMatrixError("matrix is singular");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    Rational scale = Rational(1) / a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      Rational f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

inline bool is_invertible(const Matrix<Rational>& m) {
  try {
    inverse(m);
    return true;
  } catch (const SingularMatrixError&) {
    return false;
  }
}

}  // namespace symalg

#endif  // SYMALG_MATRIX_HPP
