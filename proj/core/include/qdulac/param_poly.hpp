#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdulac/rational.hpp"

namespace qdulac {

/// Product of named symbols with positive exponents, kept sorted by name.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<std::string, unsigned>> powers);

  static Monomial symbol(std::string name);

  const std::vector<std::pair<std::string, unsigned>>& powers() const noexcept { return powers_; }
  bool is_one() const noexcept { return powers_.empty(); }
  unsigned degree() const noexcept;
  unsigned degree_in(std::string_view name) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Graded order: total degree first, then lexicographic on (name, exponent).
  friend bool operator<(const Monomial& a, const Monomial& b);

private:
  std::vector<std::pair<std::string, unsigned>> powers_;
};

/// Symbols that may never name a parameter: the independent and dependent
/// variables, the log variable, and the shift operator keyword.
bool is_reserved_symbol(std::string_view name) noexcept;

/// Throws Errc::reserved_symbol / Errc::invalid_argument for bad names.
void check_symbol_name(std::string_view name);

using Assignment = std::map<std::string, Rat, std::less<>>;

/// Sparse multivariate polynomial over Q in named parameters (a3, C1, ...).
/// The zero polynomial has no terms; stored coefficients are never zero.
class ParamPoly {
public:
  ParamPoly() = default;
  template <std::integral I>
  ParamPoly(I c) : ParamPoly(Rat(c)) {} // NOLINT(google-explicit-constructor)
  ParamPoly(const Rat& c); // NOLINT(google-explicit-constructor)
  ParamPoly(const Monomial& m, const Rat& c);

  static ParamPoly symbol(const std::string& name);

  const std::map<Monomial, Rat>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Value of a constant polynomial; throws if parameters occur.
  Rat constant_value() const;
  /// Coefficient of the monomial 1.
  Rat constant_term() const;
  unsigned total_degree() const noexcept;
  std::set<std::string> symbols() const;
  bool contains_symbol(std::string_view name) const noexcept;

  /// Exact value under a full assignment. Throws Errc::unbound_symbol.
  Rat evaluate(const Assignment& assignment) const;
  /// Replaces the assigned symbols by their values; others stay symbolic.
  ParamPoly substitute(const Assignment& assignment) const;

  ParamPoly pow(unsigned e) const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const Rat& c);
  ParamPoly& operator/=(const Rat& c);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const Rat& c) { return a *= c; }
  friend ParamPoly operator*(const Rat& c, ParamPoly a) { return a *= c; }
  friend ParamPoly operator/(ParamPoly a, const Rat& c) { return a /= c; }
  friend ParamPoly operator-(const ParamPoly& a);
  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

  /// True when the polynomial is a single term with a negative coefficient.
  bool reads_negative() const noexcept;
  /// More than one term (needs parentheses as a factor).
  bool is_sum() const noexcept { return terms_.size() > 1; }

  /// Plain text in the equation DSL, e.g. "-(16/5)*a3 - (2/5)*C1^2".
  std::string str() const;
  /// LaTeX rendering, e.g. "-\frac{16}{5} a_{3} - \frac{2}{5} C_{1}^{2}".
  std::string latex() const;

private:
  void add_term(const Monomial& m, const Rat& c);

  std::map<Monomial, Rat> terms_;
};

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

/// Renders a symbol name for LaTeX: "a3" -> "a_{3}".
std::string latex_symbol(std::string_view name);
/// Renders a rational for LaTeX: "3/2" -> "\frac{3}{2}".
std::string latex_rat(const Rat& r);

} // namespace qdulac
