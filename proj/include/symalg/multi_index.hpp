#ifndef SYMALG_MULTI_INDEX_HPP
#define SYMALG_MULTI_INDEX_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "symalg/errors.hpp"
#include "symalg/rational.hpp"

namespace symalg {

// Exponent vector of a monomial. Trailing zeros are trimmed, so a MultiIndex
// does not pin the ambient variable count; position i reads as 0 past the end.
class MultiIndex {
 public:
  MultiIndex() = default;

  explicit MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
    for (int v : e_) {
      if (v < 0) throw InvariantViolation("multi-index exponent must be non-negative");
    }
    trim();
    total_ = 0;
    for (int v : e_) total_ += v;
  }

  static MultiIndex unit(int var, int power = 1) {
    if (var < 0 || power < 0) throw InvariantViolation("bad multi-index unit");
    if (power == 0) return MultiIndex();
    std::vector<int> e(static_cast<std::size_t>(var) + 1, 0);
    e.back() = power;
    return MultiIndex(std::move(e));
  }

  int operator[](std::size_t i) const { return i < e_.size() ? e_[i] : 0; }

  // Number of leading positions in use (= highest variable index + 1).
  std::size_t width() const { return e_.size(); }

  int total() const { return total_; }

  bool is_zero() const { return e_.empty(); }

  MultiIndex operator+(const MultiIndex& o) const {
    std::vector<int> e(std::max(e_.size(), o.e_.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = (*this)[i] + o[i];
    return MultiIndex(std::move(e));
  }

  // Requires o <= *this componentwise.
  MultiIndex minus(const MultiIndex& o) const {
    std::vector<int> e(std::max(e_.size(), o.e_.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = (*this)[i] - o[i];
      if (e[i] < 0) throw InvariantViolation("multi-index subtraction went negative");
    }
    return MultiIndex(std::move(e));
  }

  MultiIndex lowered(std::size_t var) const { return minus(unit(static_cast<int>(var))); }

  // Graded-lexicographic: total degree first, ties by leftmost differing
  // exponent with x1 ranked highest. Returns -1, 0 or +1.
  static int compare(const MultiIndex& a, const MultiIndex& b) {
    int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb ? -1 : 1;
    std::size_t w = std::max(a.width(), b.width());
    for (std::size_t i = 0; i < w; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

  struct Less {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
      return compare(a, b) < 0;
    }
  };

  const std::vector<int>& exponents() const { return e_; }

  std::vector<int> padded(std::size_t m) const {
    std::vector<int> e(m, 0);
    for (std::size_t i = 0; i < e_.size() && i < m; ++i) e[i] = e_[i];
    return e;
  }

 private:
  void trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
  }

  std::vector<int> e_;
  int total_ = 0;
};

// Monomial exponent on phase space: an x part and a xi (fiber) part.
struct PhaseExponent {
  MultiIndex x;
  MultiIndex xi;

  int total() const { return x.total() + xi.total(); }
  int xi_degree() const { return xi.total(); }

  PhaseExponent operator+(const PhaseExponent& o) const { return {x + o.x, xi + o.xi}; }

  // Graded-lexicographic on the concatenated exponent vector (x part first).
  static int compare(const PhaseExponent& a, const PhaseExponent& b) {
    int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb ? -1 : 1;
    if (int c = MultiIndex::compare(a.x, b.x); c != 0) return c;
    return MultiIndex::compare(a.xi, b.xi);
  }

  friend bool operator==(const PhaseExponent& a, const PhaseExponent& b) {
    return a.x == b.x && a.xi == b.xi;
  }
  friend bool operator!=(const PhaseExponent& a, const PhaseExponent& b) { return !(a == b); }

  struct Less {
    bool operator()(const PhaseExponent& a, const PhaseExponent& b) const {
      return compare(a, b) < 0;
    }
  };
};

// Visits every gamma with gamma <= alpha componentwise (the Leibniz range).
template <class Fn>
void for_each_sub_index(const MultiIndex& alpha, Fn&& fn) {
  std::vector<int> cur(alpha.width(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == cur.size()) {
      fn(MultiIndex(cur));
      return;
    }
    for (int v = 0; v <= alpha[pos]; ++v) {
      cur[pos] = v;
      rec(pos + 1);
    }
    cur[pos] = 0;
  };
  rec(0);
}

inline Rational multi_binomial(const MultiIndex& alpha, const MultiIndex& gamma) {
  Rational r(1);
  std::size_t w = std::max(alpha.width(), gamma.width());
  for (std::size_t i = 0; i < w; ++i) r *= rational_binomial(alpha[i], gamma[i]);
  return r;
}

// All multi-indices on m variables with total degree exactly `total`.
inline std::vector<MultiIndex> multi_indices_of_degree(int m, int total) {
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == m - 1) {
      cur[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(MultiIndex(cur));
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, remaining - v);
    }
  };
  if (m <= 0) {
    if (total == 0) out.push_back(MultiIndex());
    return out;
  }
  rec(0, total);
  return out;
}

inline std::vector<MultiIndex> multi_indices_up_to_degree(int m, int max_total) {
  std::vector<MultiIndex> out;
  for (int d = 0; d <= max_total; ++d) {
    auto level = multi_indices_of_degree(m, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace symalg

#endif  // SYMALG_MULTI_INDEX_HPP
