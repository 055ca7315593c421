#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdulac/series.hpp"
#include "qdulac/truncate.hpp"

namespace qdulac {

/// Constant-coefficient operator L(sigma) = a_0 + a_1 sigma + ... + a_m sigma^m.
struct LinearPart {
  std::vector<Rat> coeffs;

  unsigned order() const noexcept { return coeffs.empty() ? 0u : static_cast<unsigned>(coeffs.size() - 1); }
  /// L(s) as an ordinary polynomial.
  Rat operator()(const Rat& s) const;

  friend bool operator==(const LinearPart&, const LinearPart&) = default;
};

/// f~ = L(sigma) z + h(x, z) after dividing out the lowest power of x.
struct LinearSplit {
  LinearPart linear;
  QPolynomial h;
  /// f~ multiplied by x^(-x_shift).
  QPolynomial normalized;
  Rat x_shift;
};

/// Splits off the terms at support point (0,1). Throws
/// Errc::hypothesis_vertex when (0,1) is absent or not a hull vertex, and
/// Errc::hypothesis_linear when a coefficient there is not a rational
/// constant.
LinearSplit extract_linear_part(const QPolynomial& f_tilde);

/// nu(k) = x^{-k} L(sigma) x^k = sum_j a_j q^{jk}.
Rat nu(const LinearPart& L, const Rat& q, const Rat& k);

/// m_i = sum_j a_j j^i q^{jk} for i = 0..count-1.
std::vector<Rat> moments(const LinearPart& L, const Rat& q, const Rat& k, unsigned count);

/// Multiplicity of q^k as a root of L(s): index of the first nonzero moment.
unsigned root_multiplicity(const LinearPart& L, const Rat& q, const Rat& k);

struct Eigenvalue {
  Rat k;
  Rat s; // q^k
  unsigned mu = 1;
  bool critical = false;
};

struct CriticalData {
  Rat r;
  std::vector<Eigenvalue> eigen_rational;
  /// Rational roots s of L(s) with no rational log_q s.
  std::vector<Rat> skipped_irrational;
  /// Roots of L(s) that are not rational (counted with multiplicity).
  unsigned unresolved = 0;

  std::vector<Rat> criticals() const;
  /// mu(j) for a rational eigenvalue j, else 0.
  unsigned mu(const Rat& j) const;
};

CriticalData critical_numbers(const LinearPart& L, const Rat& q, const Rat& r);

/// K intersected with (r, k_max], ascending: the least set containing the
/// critical numbers and q1 for each point (q1, 0) of S(h), closed under
/// k = q1 + l_1 + ... + l_{q2} for (q1, q2) in S(h).
std::vector<Rat> k_lattice(const PointSet& h_support, const std::vector<Rat>& criticals, const Rat& r,
                           const Rat& k_max);

/// L(q^k T) beta, with (T beta)(t) = beta(t + 1).
UPoly apply_shifted_operator(const LinearPart& L, const Rat& q, const Rat& k, const UPoly& beta);

struct DifferenceSolution {
  UPoly beta;
  std::vector<std::string> new_constants;
  unsigned mu = 0;
};

using ConstantNamer = std::function<std::string()>;

/// Polynomial solution of L(q^k T) beta + theta = 0. The particular part has
/// zero coefficients on t^0..t^{mu-1}; those kernel slots receive fresh
/// symbolic constants from `namer`.
DifferenceSolution solve_poly_difference(const LinearPart& L, const Rat& q, const Rat& k, const UPoly& theta,
                                         const ConstantNamer& namer);

struct ExpansionStep {
  Rat k;
  UPoly theta;
  UPoly beta;
  unsigned mu = 0;
  bool critical = false;
  std::vector<std::string> constants;
};

struct CompatibilityRecord {
  Rat k;
  unsigned mu = 0;
  /// theta_k vanished identically.
  bool compatible = false;
};

struct ExpansionResult {
  /// y = c x^r + sum beta_k(t) x^k.
  PowerLogSeries series;
  std::vector<std::pair<std::string, Rat>> constants_introduced;
  std::vector<Rat> k_set;
  bool log_free = true;

  LinearPart linear;
  CriticalData critical;
  std::vector<CompatibilityRecord> compatibility;
  std::vector<ExpansionStep> steps;
  /// The shifted equation f(x, c x^r + z), normalized.
  QPolynomial shifted;
  Rat k_max;
};

/// Runs the term-by-term expansion of a truncated solution up to x^{k_max}.
/// Throws the hypothesis errors of extract_linear_part, Errc::irrational_power
/// when q^{1/m} is irrational for the common denominator m of K and r, and
/// Errc::degree_bound / Errc::residual if an internal check fails.
ExpansionResult expand_solution(const QPolynomial& f, const TruncatedSolution& ts, const Rat& q, const Rat& k_max);

/// Smallest exponent <= k_max at which f(x, series) has a nonzero
/// coefficient after substituting `assignment`, or nullopt when the residual
/// vanishes through k_max. Throws Errc::unbound_symbol.
std::optional<Rat> verify_residual(const QPolynomial& f, const PowerLogSeries& series, const Rat& q,
                                   const Assignment& assignment, const Rat& k_max);

/// deg beta_k <= C (k - r) sum_{r<j<=k} mu(j) with C = 1 + 1/(min K - r).
bool degree_bound(const ExpansionResult& result, const LinearPart& L, const Rat& q, const Rat& r);

/// The right-hand side of the degree bound for one exponent.
Rat degree_bound_value(const CriticalData& critical, const std::vector<Rat>& k_set, const Rat& r, const Rat& k);

} // namespace qdulac
