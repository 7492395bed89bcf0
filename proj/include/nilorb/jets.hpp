#pragma once

#include "json.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nilorb {

/// x_i^{(j)}: base variable i at jet level j.
struct JetVar {
  int base = 0;
  int level = 0;
  friend auto operator<=>(const JetVar&, const JetVar&) = default;
};

/// Sorted by variable, positive exponents.
using Monomial = std::vector<std::pair<JetVar, int>>;

/// Sparse polynomial with integer coefficients in the variables x_i^{(j)}.
class JetPolynomial {
public:
  JetPolynomial() = default;
  static JetPolynomial constant(std::int64_t c);
  static JetPolynomial variable(int base, int level = 0);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::map<Monomial, std::int64_t>& terms() const noexcept { return terms_; }
  std::int64_t coefficient(const Monomial& m) const;

  /// Total degree of the highest term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  int max_level() const;

  /// Terms in canonical order: higher degree first, then lexicographic on the
  /// exponents of x0_0 < x0_1 < ... < x1_0 < ..., larger exponent first.
  std::vector<std::pair<Monomial, std::int64_t>> canonical_terms() const;
  /// "2*x0_0*x0_1 + x1_0*x2_1 - x3_0^2"; "0" for the zero polynomial.
  std::string to_string() const;
  /// [{"coeff": c, "monomial": [[i, j, e], ...]}, ...] in canonical order.
  nlohmann::json to_json() const;
  static JetPolynomial from_json(const nlohmann::json& j);

  std::int64_t evaluate(const std::function<std::int64_t(JetVar)>& value) const;

  JetPolynomial& operator+=(const JetPolynomial& o);
  JetPolynomial& operator-=(const JetPolynomial& o);
  friend JetPolynomial operator+(JetPolynomial a, const JetPolynomial& b) { return a += b; }
  friend JetPolynomial operator-(JetPolynomial a, const JetPolynomial& b) { return a -= b; }
  friend JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b);
  friend JetPolynomial operator*(std::int64_t c, const JetPolynomial& a);
  friend bool operator==(const JetPolynomial&, const JetPolynomial&) = default;

private:
  void add_term(const Monomial& m, std::int64_t c);
  std::map<Monomial, std::int64_t> terms_;
};

std::string variable_name(JetVar v);

/// A polynomial read from text together with its variable names; the i-th
/// name (sorted alphabetically) becomes base variable i.
struct ParsedPolynomial {
  JetPolynomial poly;
  std::vector<std::string> names;
};

/// Parses integer polynomial expressions: + - * ^, parentheses, integer
/// literals and identifiers. Throws std::invalid_argument.
ParsedPolynomial parse_polynomial(std::string_view text);

/// Substitutes x_i -> sum_j x_i^{(j)} t^j and returns the coefficients of
/// t^0..t^m. Throws std::invalid_argument when f has a variable of level > 0.
std::vector<JetPolynomial> jet_expand(const JetPolynomial& f, int m);

/// Jet expansions of the entries of X^d (row-major) for each level 0..m,
/// followed at each level by tr(X^2) when d = 3. X is the generic n x n
/// matrix with x_{a,b} = base variable a*n + b; when traceless, the last
/// diagonal entry is replaced by minus the sum of the other diagonal entries.
std::vector<JetPolynomial> matrix_power_jet_ideal(int n, int d, int m, bool traceless);

/// Minimal degree among the non-zero generators; all must be homogeneous.
int homogeneous_min_degree(const std::vector<JetPolynomial>& gens);

}  // namespace nilorb
