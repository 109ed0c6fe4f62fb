#ifndef SYMALG_RATIONAL_HPP
#define SYMALG_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "symalg/errors.hpp"

namespace symalg {

// Exact rational scalars over arbitrary-precision integers. cpp_rational keeps
// the canonical form we rely on everywhere: gcd(num, den) = 1, den > 0, and
// zero stored as 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& r) { return r.str(); }

// Accepts the canonical forms "p" and "p/q" with an optional leading sign and
// q > 0; reduction is automatic.
inline Rational parse_rational(const std::string& text, const std::string& path = {}) {
  if (text.empty()) throw ParseError(path, "empty rational literal");
  std::size_t pos = text[0] == '+' || text[0] == '-' ? 1 : 0;
  bool seen_digit = false;
  bool seen_slash = false;
  for (; pos < text.size(); ++pos) {
    char ch = text[pos];
    if (ch >= '0' && ch <= '9') {
      seen_digit = true;
    } else if (ch == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw ParseError(path, "invalid rational literal '" + text + "'");
    }
  }
  if (!seen_digit) throw ParseError(path, "invalid rational literal '" + text + "'");
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw ParseError(path, "invalid rational literal '" + text + "'");
  }
}

inline Rational rational_binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Integer num = 1;
  for (int i = 0; i < k; ++i) num *= (n - i);
  Integer den = 1;
  for (int i = 2; i <= k; ++i) den *= i;
  return Rational(num / den);
}

}  // namespace symalg

#endif  // SYMALG_RATIONAL_HPP
