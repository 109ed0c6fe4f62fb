#ifndef SYMALG_JSON_IO_HPP
#define SYMALG_JSON_IO_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

#include "symalg/diff_operator.hpp"
#include "symalg/gl_symbol.hpp"
#include "symalg/matrix.hpp"
#include "symalg/polynomial.hpp"
#include "symalg/symbol.hpp"

namespace symalg {

// ordered_json keeps insertion order, which makes every serialization
// byte-reproducible.
using ojson = nlohmann::ordered_json;
using json = nlohmann::json;

namespace jsondetail {

inline void reject_unknown_fields(const json& j, std::initializer_list<const char*> allowed,
                                  const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) throw ParseError(path + "." + it.key(), "unknown field");
  }
}

inline const json& require_field(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + "." + key, "missing field");
  return *it;
}

inline int require_int(const json& j, const std::string& path, int min_value) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  long long v = j.get<long long>();
  if (v < min_value) throw ParseError(path, "value below " + std::to_string(min_value));
  return static_cast<int>(v);
}

inline std::string require_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "expected a string");
  return j.get<std::string>();
}

inline const json& require_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

template <class Parse>
auto parse_square_matrix(const json& j, int n, const std::string& path, Parse parse)
    -> Matrix<decltype(parse(std::string{}, std::string{}))> {
  require_array(j, path);
  if (static_cast<int>(j.size()) != n) throw ParseError(path, "expected " + std::to_string(n) + " rows");
  Matrix<decltype(parse(std::string{}, std::string{}))> m(n);
  for (int i = 0; i < n; ++i) {
    std::string row_path = path + "[" + std::to_string(i) + "]";
    const json& row = require_array(j[static_cast<std::size_t>(i)], row_path);
    if (static_cast<int>(row.size()) != n) {
      throw ParseError(row_path, "expected " + std::to_string(n) + " columns");
    }
    for (int c = 0; c < n; ++c) {
      std::string cell_path = row_path + "[" + std::to_string(c) + "]";
      m.at(i, c) = parse(require_string(row[static_cast<std::size_t>(c)], cell_path), cell_path);
    }
  }
  return m;
}

template <class T, class Print>
ojson matrix_to_json(const Matrix<T>& m, Print print) {
  ojson rows = ojson::array();
  for (int i = 0; i < m.dim(); ++i) {
    ojson row = ojson::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(print(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace jsondetail

// ---- differential operators -------------------------------------------------
//
// {"m": int, "n": int, "terms": [{"alpha": [int...], "coeff": [[poly...]]}]}
// with terms in ascending graded-lex order on alpha.

inline ojson to_json(const DifferentialOperator& t) {
  ojson out;
  out["m"] = t.base_dim();
  out["n"] = t.rank();
  ojson terms = ojson::array();
  for (const auto& [alpha, coeff] : t.terms()) {
    ojson term;
    term["alpha"] = alpha.padded(static_cast<std::size_t>(t.base_dim()));
    term["coeff"] =
        jsondetail::matrix_to_json(coeff, [](const Polynomial& p) { return to_string(p); });
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

inline DifferentialOperator operator_from_json(const json& j, const std::string& path = "$") {
  jsondetail::reject_unknown_fields(j, {"m", "n", "terms"}, path);
  int m = jsondetail::require_int(jsondetail::require_field(j, "m", path), path + ".m", 1);
  int n = jsondetail::require_int(jsondetail::require_field(j, "n", path), path + ".n", 1);
  DifferentialOperator t(m, n);
  const json& terms = jsondetail::require_array(jsondetail::require_field(j, "terms", path),
                                                path + ".terms");
  std::size_t idx = 0;
  for (const json& term : terms) {
    std::string term_path = path + ".terms[" + std::to_string(idx++) + "]";
    jsondetail::reject_unknown_fields(term, {"alpha", "coeff"}, term_path);
    const json& alpha_json = jsondetail::require_array(
        jsondetail::require_field(term, "alpha", term_path), term_path + ".alpha");
    if (static_cast<int>(alpha_json.size()) != m) {
      throw ParseError(term_path + ".alpha", "expected " + std::to_string(m) + " exponents");
    }
    std::vector<int> e;
    for (std::size_t i = 0; i < alpha_json.size(); ++i) {
      e.push_back(jsondetail::require_int(alpha_json[i],
                                          term_path + ".alpha[" + std::to_string(i) + "]", 0));
    }
    MultiIndex alpha{std::move(e)};
    if (t.terms().count(alpha) != 0) throw ParseError(term_path + ".alpha", "duplicate alpha");
    Matrix<Polynomial> coeff = jsondetail::parse_square_matrix(
        jsondetail::require_field(term, "coeff", term_path), n, term_path + ".coeff",
        [](const std::string& s, const std::string& p) { return parse_polynomial(s, p); });
    t.add_term(alpha, coeff);
  }
  return t;
}

// ---- symbols ----------------------------------------------------------------
//
// {"m": int, "n": int, "components": [{"degree": int, "sl": [[...]], "scalar": "..."}]}
// degrees ascending; omitted components are zero.

inline ojson to_json(const SymbolElement& s) {
  ojson out;
  out["m"] = s.base_dim();
  out["n"] = s.rank();
  ojson comps = ojson::array();
  for (const auto& [k, c] : s.components()) {
    ojson comp;
    comp["degree"] = k;
    comp["sl"] =
        jsondetail::matrix_to_json(c.sl, [](const PhasePolynomial& p) { return to_string(p); });
    comp["scalar"] = to_string(c.scalar);
    comps.push_back(std::move(comp));
  }
  out["components"] = std::move(comps);
  return out;
}

inline SymbolElement symbol_from_json(const json& j, const std::string& path = "$") {
  jsondetail::reject_unknown_fields(j, {"m", "n", "components"}, path);
  int m = jsondetail::require_int(jsondetail::require_field(j, "m", path), path + ".m", 1);
  int n = jsondetail::require_int(jsondetail::require_field(j, "n", path), path + ".n", 1);
  SymbolElement s(m, n);
  const json& comps = jsondetail::require_array(
      jsondetail::require_field(j, "components", path), path + ".components");
  std::size_t idx = 0;
  for (const json& comp : comps) {
    std::string comp_path = path + ".components[" + std::to_string(idx++) + "]";
    jsondetail::reject_unknown_fields(comp, {"degree", "sl", "scalar"}, comp_path);
    int degree = jsondetail::require_int(jsondetail::require_field(comp, "degree", comp_path),
                                         comp_path + ".degree", 0);
    if (s.components().count(degree) != 0) {
      throw ParseError(comp_path + ".degree", "duplicate degree");
    }
    Matrix<PhasePolynomial> sl = jsondetail::parse_square_matrix(
        jsondetail::require_field(comp, "sl", comp_path), n, comp_path + ".sl",
        [](const std::string& text, const std::string& p) {
          return parse_phase_polynomial(text, p);
        });
    PhasePolynomial scalar = parse_phase_polynomial(
        jsondetail::require_string(jsondetail::require_field(comp, "scalar", comp_path),
                                   comp_path + ".scalar"),
        comp_path + ".scalar");
    try {
      s.add_component(degree, sl, scalar);
    } catch (const InvariantViolation& e) {
      throw ParseError(comp_path, e.what());
    } catch (const DimensionMismatch& e) {
      throw ParseError(comp_path, e.what());
    }
  }
  return s;
}

// ---- gl symbols --------------------------------------------------------------
//
// {"m": int, "n": int, "A": [[poly...]], "u": poly}

inline ojson to_json(const GlSymbol& g) {
  ojson out;
  out["m"] = g.base_dim();
  out["n"] = g.rank();
  out["A"] = jsondetail::matrix_to_json(g.matrix_part(),
                                        [](const Polynomial& p) { return to_string(p); });
  out["u"] = to_string(g.scalar_part());
  return out;
}

inline GlSymbol gl_from_json(const json& j, const std::string& path = "$") {
  jsondetail::reject_unknown_fields(j, {"m", "n", "A", "u"}, path);
  int m = jsondetail::require_int(jsondetail::require_field(j, "m", path), path + ".m", 1);
  int n = jsondetail::require_int(jsondetail::require_field(j, "n", path), path + ".n", 1);
  Matrix<Polynomial> a = jsondetail::parse_square_matrix(
      jsondetail::require_field(j, "A", path), n, path + ".A",
      [](const std::string& s, const std::string& p) { return parse_polynomial(s, p); });
  Polynomial u = parse_polynomial(
      jsondetail::require_string(jsondetail::require_field(j, "u", path), path + ".u"),
      path + ".u");
  try {
    return GlSymbol(m, a, u);
  } catch (const InvariantViolation& e) {
    throw ParseError(path + ".A", e.what());
  }
}

}  // namespace symalg

#endif  // SYMALG_JSON_IO_HPP
