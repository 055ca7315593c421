#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qdulac/param_poly.hpp"
#include "qdulac/rational.hpp"

namespace qdulac {

/// Exponent point Q = (q1, q2): q1 is the power of x, q2 the total degree in
/// y and its shifts.
struct Point {
  Rat q1;
  Rat q2;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
  friend Point operator+(const Point& a, const Point& b) { return {a.q1 + b.q1, a.q2 + b.q2}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.q1 - b.q1, a.q2 - b.q2}; }

  std::string str() const { return "(" + q1.str() + "," + q2.str() + ")"; }
};

using PointSet = std::set<Point>;

/// (sigma^level y)^power; level 0 is y itself.
struct SigmaFactor {
  unsigned level = 0;
  unsigned power = 1;

  friend bool operator==(const SigmaFactor&, const SigmaFactor&) = default;
  friend auto operator<=>(const SigmaFactor&, const SigmaFactor&) = default;
};

/// Product of shifted unknowns, levels strictly ascending, powers positive.
class SigmaMonomial {
public:
  SigmaMonomial() = default;
  explicit SigmaMonomial(std::vector<SigmaFactor> factors);
  static SigmaMonomial shift(unsigned level, unsigned power = 1);

  const std::vector<SigmaFactor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  unsigned degree() const noexcept;
  unsigned max_level() const noexcept;
  /// sum of level * power: the exponent of q^r picked up under y = c x^r.
  unsigned weighted_level() const noexcept;

  friend SigmaMonomial operator*(const SigmaMonomial& a, const SigmaMonomial& b);
  friend bool operator==(const SigmaMonomial&, const SigmaMonomial&) = default;
  friend auto operator<=>(const SigmaMonomial&, const SigmaMonomial&) = default;

private:
  std::vector<SigmaFactor> factors_;
};

struct QTerm {
  ParamPoly coeff;
  Rat x_exp;
  SigmaMonomial sigma;

  /// Exponent map Q(term).
  Point exponent() const { return {x_exp, Rat(sigma.degree())}; }
};

/// Finite q-difference sum: sum of coeff * x^e * prod (sigma^l y)^d with like
/// terms merged and exact zeros removed. `var` only affects printing.
class QPolynomial {
public:
  struct Key {
    Rat x_exp;
    SigmaMonomial sigma;
    friend bool operator==(const Key&, const Key&) = default;
    friend bool operator<(const Key& a, const Key& b);
  };

  QPolynomial() = default;
  explicit QPolynomial(std::string var) : var_(std::move(var)) {}

  static QPolynomial constant(const ParamPoly& c, std::string var = "y");
  static QPolynomial x_power(const Rat& e, std::string var = "y");
  static QPolynomial shift(unsigned level, std::string var = "y");
  static QPolynomial from_terms(const std::vector<QTerm>& terms, std::string var = "y");

  const std::string& var() const noexcept { return var_; }
  QPolynomial renamed(std::string var) const;

  std::vector<QTerm> terms() const;
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Highest shift level n occurring (0 when no sigma factors).
  unsigned order() const noexcept;
  PointSet support_points() const;
  Rat min_x_exp() const;

  /// Sum of the terms whose exponent point lies in `points`.
  QPolynomial restricted_to(const PointSet& points) const;
  /// Terms free of y (the part that survives y = 0).
  QPolynomial unknown_free_part() const;

  QPolynomial times_x_power(const Rat& e) const;
  QPolynomial pow(unsigned e) const;
  QPolynomial map_coefficients(const std::function<ParamPoly(const ParamPoly&)>& fn) const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const ParamPoly& c);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator-(const QPolynomial& a);
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(QPolynomial a, const ParamPoly& c) { return a *= c; }

  /// Structural equality; the variable name is ignored.
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.terms_ == b.terms_; }

  /// Equation DSL text (reparseable), e.g. "-a3*x*y^3 + ... + (1/2)*S(y)^2".
  std::string str() const;
  std::string latex() const;

private:
  void add_term(const Key& key, const ParamPoly& c);

  std::map<Key, ParamPoly> terms_;
  std::string var_ = "y";
};

/// Support S(f). Throws Errc::empty_support for the zero sum.
PointSet support(const QPolynomial& f);

/// f(x, c x^r + z): each sigma^l y becomes c q^{lr} x^r + sigma^l z, expanded
/// with exact cancellation. Throws Errc::irrational_power when some q^{lr}
/// needed is irrational.
QPolynomial substitute_shift(const QPolynomial& f, const ParamPoly& c, const Rat& r, const Rat& q,
                             const std::string& new_var = "z");

} // namespace qdulac
