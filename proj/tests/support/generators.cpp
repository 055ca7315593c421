#include "generators.hpp"

#include <algorithm>

#include "qdulac/roots.hpp"

namespace qdulac::testing {

long Gen::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

bool Gen::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Rat Gen::rational(long num_bound, long den_bound) {
  return Rat(mpz_class(integer(-num_bound, num_bound)), mpz_class(integer(1, den_bound)));
}

Rat Gen::nonzero_rational(long num_bound, long den_bound) {
  for (;;) {
    Rat r = rational(num_bound, den_bound);
    if (!r.is_zero()) return r;
  }
}

PointSet random_points(Gen& g, std::size_t max_size) {
  const auto n = static_cast<std::size_t>(g.integer(1, static_cast<long>(max_size)));
  PointSet out;
  if (g.coin(1.0 / 3)) {
    const Point base{g.rational(4, 2), g.rational(4, 2)};
    const Point dir{Rat(g.integer(-2, 2)), Rat(g.integer(-2, 2))};
    for (std::size_t i = 0; i < n; ++i) {
      const Rat t = g.rational(5, 2);
      out.insert(Point{base.q1 + t * dir.q1, base.q2 + t * dir.q2});
    }
    // A stray point now and then turns the line into a thin triangle.
    if (g.coin(0.3)) out.insert(Point{g.rational(6, 3), g.rational(6, 3)});
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) out.insert(Point{g.rational(6, 3), Rat(g.integer(0, 5))});
  return out;
}

ParamPoly random_param_poly(Gen& g, const std::vector<std::string>& symbols, unsigned max_terms,
                            unsigned max_degree) {
  ParamPoly p;
  const long terms = g.integer(1, max_terms);
  for (long i = 0; i < terms; ++i) {
    std::vector<std::pair<std::string, unsigned>> powers;
    if (!symbols.empty()) {
      const long deg = g.integer(0, max_degree);
      for (long d = 0; d < deg; ++d) powers.emplace_back(g.pick(symbols), 1u);
    }
    p += ParamPoly(Monomial(std::move(powers)), g.rational(9, 5));
  }
  return p;
}

UPoly random_rational_tpoly(Gen& g, unsigned max_degree) {
  std::vector<ParamPoly> cs;
  const long deg = g.integer(0, max_degree);
  for (long d = 0; d <= deg; ++d) cs.emplace_back(g.rational(9, 4));
  return UPoly(std::move(cs));
}

namespace {

SigmaMonomial random_sigma(Gen& g, unsigned degree, unsigned max_level) {
  std::vector<SigmaFactor> fs;
  std::vector<unsigned> counts(max_level + 1, 0);
  for (unsigned i = 0; i < degree; ++i) ++counts[static_cast<std::size_t>(g.integer(0, max_level))];
  for (unsigned l = 0; l <= max_level; ++l)
    if (counts[l]) fs.push_back(SigmaFactor{l, counts[l]});
  return SigmaMonomial(std::move(fs));
}

} // namespace

QPolynomial random_qpoly(Gen& g, const std::vector<std::string>& symbols, unsigned max_terms) {
  std::vector<QTerm> terms;
  const long n = g.integer(1, max_terms);
  for (long i = 0; i < n; ++i) {
    const Rat e = g.coin(0.8) ? Rat(g.integer(0, 3)) : g.rational(6, 2).abs();
    terms.push_back(QTerm{random_param_poly(g, symbols, 2, 1), e,
                          random_sigma(g, static_cast<unsigned>(g.integer(0, 3)), 2)});
  }
  return QPolynomial::from_terms(terms);
}

Rat random_q(Gen& g) {
  static const std::vector<Rat> qs{Rat(1, 2), Rat(1, 4), Rat(1, 3), Rat(2, 3), Rat(4, 9), Rat(1, 8), Rat(3), Rat(4)};
  return g.pick(qs);
}

PlantedEdge planted_edge_equation(Gen& g) {
  for (;;) {
    PlantedEdge pe;
    pe.q = g.pick(std::vector<Rat>{Rat(1, 2), Rat(1, 3), Rat(2, 3), Rat(1, 4)});
    pe.r = Rat(g.integer(-2, 2));
    pe.c = g.nonzero_rational(3, 2);
    const Rat level = Rat(g.integer(-2, 3));

    // Edge terms: q1 + r q2 = level, at least two distinct q2 values.
    std::vector<QTerm> edge;
    const long n_edge = g.integer(2, 4);
    for (long i = 0; i < n_edge; ++i) {
      const auto d = static_cast<unsigned>(g.integer(0, 4));
      edge.push_back(QTerm{ParamPoly(g.nonzero_rational(5, 3)), level - pe.r * Rat(d),
                           random_sigma(g, d, 2)});
    }
    // Choose the coefficient of the last term so that c is a root of the
    // determining polynomial sum coeff q^{r wl} c^deg.
    Rat partial;
    for (std::size_t i = 0; i + 1 < edge.size(); ++i) {
      const auto& t = edge[i];
      partial += t.coeff.constant_value() * q_pow(pe.q, pe.r * Rat(t.sigma.weighted_level())) *
                 pe.c.pow(t.sigma.degree());
    }
    auto& last = edge.back();
    const Rat weight = q_pow(pe.q, pe.r * Rat(last.sigma.weighted_level())) * pe.c.pow(last.sigma.degree());
    if (partial.is_zero()) continue;
    last.coeff = ParamPoly(-partial / weight);

    std::vector<QTerm> terms = edge;
    const long n_far = g.integer(0, 4);
    for (long i = 0; i < n_far; ++i) {
      const auto d = static_cast<unsigned>(g.integer(0, 3));
      const Rat lift = Rat(g.integer(1, 3), g.integer(1, 2));
      terms.push_back(QTerm{random_param_poly(g, {"a", "b"}, 2, 1), level - pe.r * Rat(d) + lift,
                            random_sigma(g, d, 2)});
    }
    pe.f = QPolynomial::from_terms(terms);
    const QPolynomial edge_sum = QPolynomial::from_terms(edge);
    if (edge_sum.is_zero()) continue;
    pe.edge_points = edge_sum.support_points();
    std::set<Rat> q2s;
    for (const auto& p : pe.edge_points) q2s.insert(p.q2);
    if (q2s.size() < 2) continue;
    // Far terms may cancel into edge points only if they share a key, which
    // the lift rules out; still make sure every edge point survived.
    const auto all = pe.f.support_points();
    if (!std::all_of(pe.edge_points.begin(), pe.edge_points.end(), [&](const Point& p) { return all.contains(p); }))
      continue;
    return pe;
  }
}

PlantedOperator planted_operator(Gen& g) {
  PlantedOperator po;
  for (;;) {
    po.q = g.pick(std::vector<Rat>{Rat(1, 2), Rat(1, 3), Rat(2, 3), Rat(1, 4), Rat(3), Rat(1, 9)});
    po.k = g.coin(0.25) && (po.q == Rat(1, 4) || po.q == Rat(1, 9)) ? Rat(g.integer(1, 5), 2) : Rat(g.integer(-2, 4));
    po.mu = static_cast<unsigned>(g.integer(0, 2));
    const Rat s0 = q_pow(po.q, po.k);
    // R(s), lowest degree first, with R(s0) != 0.
    std::vector<Rat> R;
    const long deg_r = g.integer(po.mu == 0 ? 1 : 0, 4 - static_cast<long>(po.mu));
    for (long d = 0; d <= deg_r; ++d) R.push_back(g.rational(6, 3));
    if (R.back().is_zero()) R.back() = Rat(1);
    if (evaluate_poly(R, s0).is_zero()) continue;
    std::vector<Rat> L = R;
    for (unsigned m = 0; m < po.mu; ++m) {
      std::vector<Rat> next(L.size() + 1);
      for (std::size_t i = 0; i < L.size(); ++i) {
        next[i + 1] += L[i];
        next[i] -= s0 * L[i];
      }
      L = std::move(next);
    }
    po.L.coeffs = L;
    return po;
  }
}

} // namespace qdulac::testing
