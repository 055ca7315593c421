#include "qdulac/roots.hpp"

#include <algorithm>

#include "qdulac/error.hpp"

namespace qdulac {

Rat evaluate_poly(std::span<const Rat> coeffs, const Rat& s) {
  Rat acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * s + *it;
  return acc;
}

std::vector<Rat> deflate(std::span<const Rat> coeffs, const Rat& root) {
  // Synthetic division, highest degree first.
  if (coeffs.size() <= 1) return {};
  std::vector<Rat> q(coeffs.size() - 1);
  Rat carry;
  for (std::size_t i = coeffs.size(); i-- > 1;) {
    carry = coeffs[i] + carry * root;
    q[i - 1] = carry;
  }
  return q;
}

namespace {

std::vector<Rat> trimmed(std::span<const Rat> coeffs) {
  std::vector<Rat> p(coeffs.begin(), coeffs.end());
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

} // namespace

std::vector<RationalRoot> rational_roots(std::span<const Rat> coeffs) {
  std::vector<Rat> p = trimmed(coeffs);
  if (p.empty()) {
    throw Error(Errc::indeterminate_equation,
                "indeterminate equation: the polynomial vanishes identically");
  }

  std::vector<RationalRoot> roots;
  unsigned zero_mult = 0;
  while (p.size() > 1 && p.front().is_zero()) {
    p.erase(p.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) roots.push_back({Rat(0), zero_mult});
  if (p.size() <= 1) return roots;

  // Integer normalization: scale by the lcm of denominators.
  mpz_class den_lcm = 1;
  for (const auto& c : p) den_lcm = lcm(den_lcm, c.den());
  std::vector<mpz_class> ip;
  ip.reserve(p.size());
  for (const auto& c : p) ip.push_back(c.num() * (den_lcm / c.den()));

  const std::vector<mpz_class> lead_divs = divisors(abs(ip.back()));
  const std::vector<mpz_class> trail_divs = divisors(abs(ip.front()));

  std::vector<Rat> candidates;
  for (const auto& a : trail_divs) {
    for (const auto& b : lead_divs) {
      candidates.emplace_back(a, b);
      candidates.emplace_back(mpz_class(-a), b);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const auto& s : candidates) {
    unsigned mult = 0;
    while (p.size() > 1 && evaluate_poly(p, s).is_zero()) {
      p = deflate(p, s);
      ++mult;
    }
    if (mult > 0) roots.push_back({s, mult});
    if (p.size() <= 1) break;
  }
  std::sort(roots.begin(), roots.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  return roots;
}

} // namespace qdulac
