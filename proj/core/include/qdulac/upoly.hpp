#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qdulac/param_poly.hpp"

namespace qdulac {

/// Univariate polynomial with ParamPoly coefficients, lowest degree first.
/// Used for beta_k(t) and theta_k(t) in t = log_q x, and also for the
/// characteristic polynomial in w = q^r and the determining polynomial in c.
/// The zero polynomial has no coefficients and degree 0.
class UPoly {
public:
  UPoly() = default;
  UPoly(ParamPoly constant); // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<ParamPoly> coefficients);

  /// c * var^degree
  static UPoly monomial(ParamPoly c, unsigned degree);

  const std::vector<ParamPoly>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  unsigned degree() const noexcept;
  const ParamPoly& coeff(unsigned i) const;
  const ParamPoly& leading() const;
  bool has_constant_coefficients() const noexcept;
  /// Rational coefficients; throws if any coefficient depends on parameters.
  std::vector<Rat> rational_coefficients() const;

  /// p(var + s)
  UPoly shifted(const Rat& s) const;
  /// p(lambda * var)
  UPoly scaled_argument(const Rat& lambda) const;
  ParamPoly evaluate_at(const ParamPoly& value) const;
  UPoly map_coefficients(const std::function<ParamPoly(const ParamPoly&)>& fn) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const ParamPoly& c);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(const UPoly& a);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const ParamPoly& c) { return a *= c; }
  friend UPoly operator*(const ParamPoly& c, UPoly a) { return a *= c; }
  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// Descending powers, e.g. "2*a3*t + C1"; var names the indeterminate.
  std::string str(std::string_view var = "t") const;
  std::string latex(std::string_view var = "t") const;

private:
  void trim();

  std::vector<ParamPoly> coeffs_;
};

using TPoly = UPoly;

} // namespace qdulac
