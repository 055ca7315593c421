#pragma once

#include <span>
#include <vector>

#include "qdulac/rational.hpp"

namespace qdulac {

struct RationalRoot {
  Rat value;
  unsigned multiplicity = 1;

  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// All rational roots of sum coeffs[i] s^i with exact multiplicities, in
/// ascending order. Candidates come from the rational root theorem on the
/// integer-normalized polynomial; each is confirmed by exact deflation.
/// Throws Errc::indeterminate_equation for the zero polynomial.
std::vector<RationalRoot> rational_roots(std::span<const Rat> coeffs);

/// Horner evaluation.
Rat evaluate_poly(std::span<const Rat> coeffs, const Rat& s);

/// Quotient of p by (s - root); the remainder must be zero.
std::vector<Rat> deflate(std::span<const Rat> coeffs, const Rat& root);

} // namespace qdulac
