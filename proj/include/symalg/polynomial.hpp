#ifndef SYMALG_POLYNOMIAL_HPP
#define SYMALG_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symalg/multi_index.hpp"
#include "symalg/rational.hpp"

namespace symalg {

// Sparse polynomial over exact rationals, keyed by a monomial exponent type.
// Canonical form: no zero coefficients, terms ordered graded-lex by key.
template <class Key>
class SparsePoly {
 public:
  using key_type = Key;
  using term_map = std::map<Key, Rational, typename Key::Less>;

  SparsePoly() = default;
  explicit SparsePoly(const Rational& constant) { add_term(Key{}, constant); }

  static SparsePoly monomial(const Key& k, const Rational& c) {
    SparsePoly p;
    p.add_term(k, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const term_map& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Value of the constant term; the whole polynomial is constant iff
  // is_constant() holds.
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{});
  }
  Rational constant_value() const { return coefficient(Key{}); }

  int total_degree() const {  // -1 for the zero polynomial
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total();
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  SparsePoly& operator*=(const Rational& r) {
    if (r.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= r;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(const SparsePoly& a) {
    SparsePoly r;
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
    return r;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    }
    return r;
  }
  friend SparsePoly operator*(SparsePoly a, const Rational& r) { return a *= r; }
  friend SparsePoly operator*(const Rational& r, SparsePoly a) { return a *= r; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

 private:
  term_map terms_;
};

using Polynomial = SparsePoly<MultiIndex>;        // coefficients on the base, x only
using PhasePolynomial = SparsePoly<PhaseExponent>;  // functions on T*M, x and xi

// ---- derivatives ----------------------------------------------------------

inline Polynomial dx(const Polynomial& p, std::size_t var) {
  Polynomial r;
  for (const auto& [k, c] : p.terms()) {
    int e = k[var];
    if (e > 0) r.add_term(k.lowered(var), c * e);
  }
  return r;
}

inline PhasePolynomial dx(const PhasePolynomial& p, std::size_t var) {
  PhasePolynomial r;
  for (const auto& [k, c] : p.terms()) {
    int e = k.x[var];
    if (e > 0) r.add_term({k.x.lowered(var), k.xi}, c * e);
  }
  return r;
}

inline PhasePolynomial dxi(const PhasePolynomial& p, std::size_t var) {
  PhasePolynomial r;
  for (const auto& [k, c] : p.terms()) {
    int e = k.xi[var];
    if (e > 0) r.add_term({k.x, k.xi.lowered(var)}, c * e);
  }
  return r;
}

inline Polynomial dx_power(Polynomial p, const MultiIndex& alpha) {
  for (std::size_t v = 0; v < alpha.width(); ++v) {
    for (int t = 0; t < alpha[v]; ++t) p = dx(p, v);
  }
  return p;
}

// ---- conversions ----------------------------------------------------------

inline PhasePolynomial to_phase(const Polynomial& p) {
  PhasePolynomial r;
  for (const auto& [k, c] : p.terms()) r.add_term({k, MultiIndex()}, c);
  return r;
}

inline Polynomial require_base_polynomial(const PhasePolynomial& p,
                                          const std::string& path = {}) {
  Polynomial r;
  for (const auto& [k, c] : p.terms()) {
    if (!k.xi.is_zero()) throw ParseError(path, "fiber variable not allowed here");
    r.add_term(k.x, c);
  }
  return r;
}

inline PhasePolynomial xi_monomial(const MultiIndex& xi) {
  return PhasePolynomial::monomial({MultiIndex(), xi}, Rational(1));
}

// ---- xi-homogeneity -------------------------------------------------------

inline bool is_xi_homogeneous(const PhasePolynomial& p, int degree) {
  for (const auto& [k, c] : p.terms()) {
    (void)c;
    if (k.xi_degree() != degree) return false;
  }
  return true;
}

inline PhasePolynomial xi_component(const PhasePolynomial& p, int degree) {
  PhasePolynomial r;
  for (const auto& [k, c] : p.terms()) {
    if (k.xi_degree() == degree) r.add_term(k, c);
  }
  return r;
}

inline int max_xi_degree(const PhasePolynomial& p) {  // -1 for zero
  int d = -1;
  for (const auto& [k, c] : p.terms()) {
    (void)c;
    d = std::max(d, k.xi_degree());
  }
  return d;
}

// Highest variable slot referenced by either the x or xi part.
inline std::size_t variable_span(const PhasePolynomial& p) {
  std::size_t w = 0;
  for (const auto& [k, c] : p.terms()) {
    (void)c;
    w = std::max({w, k.x.width(), k.xi.width()});
  }
  return w;
}

inline std::size_t variable_span(const Polynomial& p) {
  std::size_t w = 0;
  for (const auto& [k, c] : p.terms()) {
    (void)c;
    w = std::max(w, k.width());
  }
  return w;
}

// ---- canonical Poisson bracket on T*M -------------------------------------
//
// {f,g} = sum_a (df/dxi_a dg/dx_a - df/dx_a dg/dxi_a), normalized so that
// {xi_a, x_a} = 1, the sign forced by the operator identity [d_a, x_a] = id.
inline PhasePolynomial canonical_bracket(const PhasePolynomial& f, const PhasePolynomial& g) {
  PhasePolynomial r;
  std::size_t span = std::max(variable_span(f), variable_span(g));
  for (std::size_t a = 0; a < span; ++a) {
    r += dxi(f, a) * dx(g, a);
    r -= dx(f, a) * dxi(g, a);
  }
  return r;
}

// ---- canonical text form ---------------------------------------------------
//
// Terms graded-lex descending; coefficients "p/q" (just "p" when q = 1);
// unit coefficients elided in front of a monomial, e.g. "3/2 x1^2 xi1 - 1".

namespace detail {

inline std::string monomial_string(const MultiIndex& x, const MultiIndex& xi) {
  std::string s;
  auto put = [&s](const char* base, const MultiIndex& e) {
    for (std::size_t i = 0; i < e.width(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += ' ';
      s += base;
      s += std::to_string(i + 1);
      if (e[i] != 1) {
        s += '^';
        s += std::to_string(e[i]);
      }
    }
  };
  put("x", x);
  put("xi", xi);
  return s;
}

inline void append_term(std::string& out, bool first, const Rational& coeff,
                        const std::string& mono) {
  Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
  if (first) {
    if (coeff < 0) out += '-';
  } else {
    out += coeff < 0 ? " - " : " + ";
  }
  if (mono.empty()) {
    out += rational_to_string(mag);
  } else if (mag == 1) {
    out += mono;
  } else {
    out += rational_to_string(mag) + " " + mono;
  }
}

}  // namespace detail

inline std::string to_string(const PhasePolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    detail::append_term(out, first, it->second,
                        detail::monomial_string(it->first.x, it->first.xi));
    first = false;
  }
  return out;
}

inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    detail::append_term(out, first, it->second,
                        detail::monomial_string(it->first, MultiIndex()));
    first = false;
  }
  return out;
}

namespace detail {

// "x12^3" / "xi4" -> (is_xi, zero-based index, power)
inline bool parse_var_token(const std::string& tok, bool& is_xi, std::size_t& index,
                            int& power) {
  std::size_t pos = 0;
  if (tok.size() >= 2 && tok[0] == 'x' && tok[1] == 'i') {
    is_xi = true;
    pos = 2;
  } else if (!tok.empty() && tok[0] == 'x') {
    is_xi = false;
    pos = 1;
  } else {
    return false;
  }
  std::size_t digits_begin = pos;
  while (pos < tok.size() && tok[pos] >= '0' && tok[pos] <= '9') ++pos;
  if (pos == digits_begin) return false;
  unsigned long idx = std::stoul(tok.substr(digits_begin, pos - digits_begin));
  if (idx == 0) return false;
  index = idx - 1;
  power = 1;
  if (pos < tok.size()) {
    if (tok[pos] != '^') return false;
    ++pos;
    std::size_t pow_begin = pos;
    while (pos < tok.size() && tok[pos] >= '0' && tok[pos] <= '9') ++pos;
    if (pos == pow_begin || pos != tok.size()) return false;
    power = static_cast<int>(std::stoul(tok.substr(pow_begin)));
  }
  return true;
}

inline bool looks_like_rational(const std::string& tok) {
  return !tok.empty() && tok[0] >= '0' && tok[0] <= '9';
}

}  // namespace detail

inline PhasePolynomial parse_phase_polynomial(const std::string& text,
                                              const std::string& path = {}) {
  // Split on whitespace, then detach leading signs glued to a token ("-x1").
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  std::vector<std::string> split;
  for (auto& t : tokens) {
    if (t.size() > 1 && (t[0] == '+' || t[0] == '-')) {
      split.emplace_back(1, t[0]);
      split.push_back(t.substr(1));
    } else {
      split.push_back(t);
    }
  }
  if (split.empty()) throw ParseError(path, "empty polynomial text");

  PhasePolynomial result;
  std::size_t i = 0;
  int sign = 1;
  bool have_sign = false;
  bool any_term = false;
  while (i < split.size()) {
    if (split[i] == "+" || split[i] == "-") {
      if (have_sign) throw ParseError(path, "consecutive signs in polynomial");
      sign = split[i] == "-" ? -1 : 1;
      have_sign = true;
      ++i;
      continue;
    }
    // One term: factors up to the next sign token.
    Rational coeff(1);
    std::vector<int> xe, xie;
    while (i < split.size() && split[i] != "+" && split[i] != "-") {
      const std::string& tok = split[i];
      bool is_xi = false;
      std::size_t index = 0;
      int power = 0;
      if (detail::looks_like_rational(tok)) {
        coeff *= parse_rational(tok, path);
      } else if (detail::parse_var_token(tok, is_xi, index, power)) {
        auto& vec = is_xi ? xie : xe;
        if (vec.size() <= index) vec.resize(index + 1, 0);
        vec[index] += power;
      } else {
        throw ParseError(path, "unrecognized token '" + tok + "' in polynomial");
      }
      ++i;
    }
    if (sign < 0) coeff = -coeff;
    result.add_term({MultiIndex(std::move(xe)), MultiIndex(std::move(xie))}, coeff);
    sign = 1;
    have_sign = false;
    any_term = true;
  }
  if (have_sign) throw ParseError(path, "polynomial ends with a dangling sign");
  if (!any_term) throw ParseError(path, "empty polynomial text");
  return result;
}

inline Polynomial parse_polynomial(const std::string& text, const std::string& path = {}) {
  return require_base_polynomial(parse_phase_polynomial(text, path), path);
}

}  // namespace symalg

#endif  // SYMALG_POLYNOMIAL_HPP
