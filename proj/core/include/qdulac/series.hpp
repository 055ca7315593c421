#pragma once

#include <map>
#include <optional>
#include <string>

#include "qdulac/qpoly.hpp"
#include "qdulac/upoly.hpp"

namespace qdulac {

/// Leading part c * x^r of a full solution y = c x^r + z.
struct BaseTerm {
  ParamPoly c;
  Rat r;

  friend bool operator==(const BaseTerm&, const BaseTerm&) = default;
};

/// Finite power-logarithmic sum  base + sum_k beta_k(t) x^k  with t = log_q x.
/// Exponents are kept in a map, so they are strictly increasing; zero
/// coefficients are never stored.
class PowerLogSeries {
public:
  PowerLogSeries() = default;
  explicit PowerLogSeries(Rat q, std::optional<BaseTerm> base = std::nullopt);

  const Rat& q() const noexcept { return q_; }
  const std::optional<BaseTerm>& base() const noexcept { return base_; }
  const std::map<Rat, UPoly>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty() && !base_; }
  /// beta at exponent k (zero if absent).
  UPoly coefficient(const Rat& k) const;
  void add(const Rat& k, const UPoly& beta);
  void set_base(std::optional<BaseTerm> base) { base_ = std::move(base); }

  /// All terms including the base, merged into one exponent map.
  std::map<Rat, UPoly> flattened() const;
  std::optional<Rat> min_exponent() const;
  PowerLogSeries map_coefficients(const std::function<ParamPoly(const ParamPoly&)>& fn) const;

  /// "-1 + (2*a3*t + C1)*x", t spelled as `t_name`.
  std::string str(const std::string& t_name = "t") const;

  friend bool operator==(const PowerLogSeries&, const PowerLogSeries&) = default;

private:
  Rat q_{1, 2};
  std::optional<BaseTerm> base_;
  std::map<Rat, UPoly> terms_;
};

/// f(x, s(x)) truncated to exponents <= k_max, computed exactly using
/// sigma(beta(t) x^k) = q^k beta(t + 1) x^k. The result carries s.q() and no
/// base. Throws Errc::irrational_power if some q^{lk} needed is irrational.
PowerLogSeries evaluate_on_series(const QPolynomial& f, const PowerLogSeries& s, const Rat& k_max);

} // namespace qdulac
