#include "qdulac/expand.hpp"

#include <algorithm>
#include <set>

#include "qdulac/error.hpp"
#include "qdulac/roots.hpp"

namespace qdulac {

Rat LinearPart::operator()(const Rat& s) const { return evaluate_poly(coeffs, s); }

LinearSplit extract_linear_part(const QPolynomial& f_tilde) {
  if (f_tilde.is_zero()) {
    throw Error(Errc::hypothesis_vertex, "hypothesis 1 violated: the shifted equation vanishes identically");
  }
  LinearSplit split;
  split.x_shift = f_tilde.min_x_exp();
  split.normalized = split.x_shift.is_zero() ? f_tilde : f_tilde.times_x_power(-split.x_shift);

  const Point anchor{Rat(0), Rat(1)};
  const PointSet supp = split.normalized.support_points();
  if (!supp.contains(anchor)) {
    throw Error(Errc::hypothesis_vertex, "hypothesis 1 violated: point (0,1) is not in the support");
  }
  const NewtonPolygon poly = build_polygon(supp);
  if (std::find(poly.hull_vertices.begin(), poly.hull_vertices.end(), anchor) == poly.hull_vertices.end()) {
    throw Error(Errc::hypothesis_vertex, "hypothesis 1 violated: (0,1) is not a vertex of the Newton polygon");
  }

  split.h = QPolynomial(split.normalized.var());
  std::vector<QTerm> rest;
  for (const auto& t : split.normalized.terms()) {
    if (t.exponent() != anchor) {
      rest.push_back(t);
      continue;
    }
    if (!t.coeff.is_constant()) {
      throw Error(Errc::hypothesis_linear, "hypothesis 2 violated: coefficient " + t.coeff.str() +
                                               " at (0,1) is not a constant");
    }
    const unsigned level = t.sigma.factors().front().level;
    if (split.linear.coeffs.size() <= level) split.linear.coeffs.resize(level + 1);
    split.linear.coeffs[level] = t.coeff.constant_value();
  }
  split.h = QPolynomial::from_terms(rest, split.normalized.var());
  return split;
}

Rat nu(const LinearPart& L, const Rat& q, const Rat& k) {
  Rat total;
  for (std::size_t j = 0; j < L.coeffs.size(); ++j) {
    if (L.coeffs[j].is_zero()) continue;
    total += L.coeffs[j] * q_pow(q, Rat(static_cast<long>(j)) * k);
  }
  return total;
}

std::vector<Rat> moments(const LinearPart& L, const Rat& q, const Rat& k, unsigned count) {
  std::vector<Rat> b(L.coeffs.size());
  for (std::size_t j = 0; j < L.coeffs.size(); ++j) {
    if (!L.coeffs[j].is_zero()) b[j] = L.coeffs[j] * q_pow(q, Rat(static_cast<long>(j)) * k);
  }
  std::vector<Rat> m(count);
  for (unsigned i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) m[i] += b[j] * Rat(static_cast<long>(j)).pow(i);
    }
  }
  return m;
}

unsigned root_multiplicity(const LinearPart& L, const Rat& q, const Rat& k) {
  const unsigned cap = L.order() + 1;
  const auto m = moments(L, q, k, cap);
  for (unsigned i = 0; i < cap; ++i) {
    if (!m[i].is_zero()) return i;
  }
  throw Error(Errc::invalid_argument, "linear part vanishes identically");
}

std::vector<Rat> CriticalData::criticals() const {
  std::vector<Rat> out;
  for (const auto& e : eigen_rational) {
    if (e.critical) out.push_back(e.k);
  }
  return out;
}

unsigned CriticalData::mu(const Rat& j) const {
  for (const auto& e : eigen_rational) {
    if (e.k == j) return e.mu;
  }
  return 0;
}

CriticalData critical_numbers(const LinearPart& L, const Rat& q, const Rat& r) {
  check_q(q);
  CriticalData out;
  out.r = r;
  const auto roots = rational_roots(L.coeffs);
  unsigned degree = 0;
  for (std::size_t j = 0; j < L.coeffs.size(); ++j) {
    if (!L.coeffs[j].is_zero()) degree = static_cast<unsigned>(j);
  }
  unsigned found = 0;
  for (const auto& root : roots) {
    found += root.multiplicity;
    const auto k = q_log(q, root.value);
    if (!k) {
      out.skipped_irrational.push_back(root.value);
      continue;
    }
    out.eigen_rational.push_back(Eigenvalue{*k, root.value, root.multiplicity, *k > r});
  }
  std::sort(out.eigen_rational.begin(), out.eigen_rational.end(),
            [](const Eigenvalue& a, const Eigenvalue& b) { return a.k < b.k; });
  out.unresolved = degree - found;
  return out;
}

std::vector<Rat> k_lattice(const PointSet& h_support, const std::vector<Rat>& criticals, const Rat& r,
                           const Rat& k_max) {
  std::set<Rat> K;
  auto in_window = [&](const Rat& k) { return r < k && k <= k_max; };
  for (const auto& k : criticals) {
    if (in_window(k)) K.insert(k);
  }
  std::vector<Point> generators;
  for (const auto& p : h_support) {
    if (p.q2.is_zero()) {
      if (in_window(p.q1)) K.insert(p.q1);
    } else {
      generators.push_back(p);
    }
  }

  // Least fixed point of the generation rule; elements are confined to a
  // lattice (1/D)Z inside a bounded window, so this terminates.
  for (bool changed = true; changed && !K.empty();) {
    changed = false;
    const std::vector<Rat> elems(K.begin(), K.end());
    for (const auto& g : generators) {
      const unsigned count = static_cast<unsigned>(g.q2.num().get_ui());
      std::vector<std::size_t> idx(count, 0);
      // Enumerate nondecreasing index tuples with pruning on the partial sum.
      std::function<void(unsigned, std::size_t, const Rat&)> rec = [&](unsigned depth, std::size_t start,
                                                                       const Rat& partial) {
        if (depth == count) {
          const Rat v = g.q1 + partial;
          if (in_window(v) && K.insert(v).second) changed = true;
          return;
        }
        const unsigned remaining = count - depth;
        for (std::size_t i = start; i < elems.size(); ++i) {
          if (g.q1 + partial + Rat(remaining) * elems[i] > k_max) break;
          rec(depth + 1, i, partial + elems[i]);
        }
      };
      rec(0, 0, Rat(0));
    }
  }
  return {K.begin(), K.end()};
}

UPoly apply_shifted_operator(const LinearPart& L, const Rat& q, const Rat& k, const UPoly& beta) {
  UPoly out;
  for (std::size_t j = 0; j < L.coeffs.size(); ++j) {
    if (L.coeffs[j].is_zero()) continue;
    const Rat b = L.coeffs[j] * q_pow(q, Rat(static_cast<long>(j)) * k);
    out += beta.shifted(Rat(static_cast<long>(j))) * ParamPoly(b);
  }
  return out;
}

DifferenceSolution solve_poly_difference(const LinearPart& L, const Rat& q, const Rat& k, const UPoly& theta,
                                         const ConstantNamer& namer) {
  DifferenceSolution out;
  out.mu = root_multiplicity(L, q, k);
  const unsigned mu = out.mu;

  if (!theta.is_zero()) {
    // L(q^k T) t^d = sum_i m_i C(d, i) t^{d-i}; solve for t^{e+mu}
    // from the t^e coefficient, highest e first.
    const unsigned D = theta.degree();
    const unsigned N = D + mu;
    const auto m = moments(L, q, k, N + 1);
    std::vector<ParamPoly> b(N + 1);
    for (unsigned e = D + 1; e-- > 0;) {
      ParamPoly rhs = -theta.coeff(e);
      for (unsigned i = mu + 1; e + i <= N; ++i) {
        if (m[i].is_zero() || b[e + i].is_zero()) continue;
        rhs -= b[e + i] * (m[i] * Rat(binomial(e + i, i)));
      }
      b[e + mu] = rhs / (m[mu] * Rat(binomial(e + mu, mu)));
    }
    out.beta = UPoly(std::move(b));
  }

  for (unsigned j = 0; j < mu; ++j) {
    std::string name = namer();
    out.beta += UPoly::monomial(ParamPoly::symbol(name), j);
    out.new_constants.push_back(std::move(name));
  }
  return out;
}

namespace {

std::set<std::string> symbols_of(const QPolynomial& f) {
  std::set<std::string> s;
  for (const auto& t : f.terms()) {
    for (const auto& name : t.coeff.symbols()) s.insert(name);
  }
  return s;
}

void check_exactness_gate(const Rat& q, const std::vector<Rat>& K, const Rat& r) {
  mpz_class m = r.den();
  for (const auto& k : K) m = lcm(m, k.den());
  if (!q_pow_is_rational(q, Rat(mpz_class(1), m))) {
    throw Error(Errc::irrational_power, "irrational q-power: exponents need q^(1/" + m.get_str() + "), but (" +
                                            q.str() + ")^(1/" + m.get_str() + ") is not rational");
  }
}

} // namespace

ExpansionResult expand_solution(const QPolynomial& f, const TruncatedSolution& ts, const Rat& q, const Rat& k_max) {
  check_q(q);
  const Rat& r = ts.r();
  if (!(k_max > r)) throw Error(Errc::invalid_argument, "k_max must exceed r = " + r.str());
  if (!verify_truncated(ts, f, q)) {
    throw Error(Errc::truncated_solution, "truncated solution does not solve its truncated equation");
  }

  ExpansionResult res;
  res.k_max = k_max;
  const QPolynomial f_tilde = substitute_shift(f, ts.c(), r, q, "z");
  const LinearSplit split = extract_linear_part(f_tilde);
  res.shifted = split.normalized;
  res.linear = split.linear;
  res.critical = critical_numbers(split.linear, q, r);
  res.k_set = k_lattice(split.h.support_points(), res.critical.criticals(), r, k_max);
  check_exactness_gate(q, res.k_set, r);

  std::set<std::string> taken = symbols_of(f);
  for (const auto& s : ts.c().symbols()) taken.insert(s);
  int counter = 0;
  Rat current_k;
  ConstantNamer namer = [&]() {
    std::string name;
    do {
      name = "C" + std::to_string(++counter);
    } while (taken.contains(name));
    taken.insert(name);
    res.constants_introduced.emplace_back(name, current_k);
    return name;
  };

  PowerLogSeries z(q);
  for (const auto& k : res.k_set) {
    current_k = k;
    const UPoly theta = evaluate_on_series(split.h, z, k).coefficient(k);
    DifferenceSolution sol = solve_poly_difference(split.linear, q, k, theta, namer);
    const bool critical = sol.mu > 0;
    if (critical) res.compatibility.push_back({k, sol.mu, theta.is_zero()});
    res.steps.push_back({k, theta, sol.beta, sol.mu, critical, sol.new_constants});
    z.add(k, sol.beta);
  }

  const PowerLogSeries residual = evaluate_on_series(split.normalized, z, k_max);
  if (!residual.terms().empty()) {
    throw Error(Errc::residual, "expansion leaves a nonzero residual at x^" + residual.terms().begin()->first.str() +
                                    "; the recursion is not triangular for this equation");
  }

  res.series = PowerLogSeries(q, BaseTerm{ts.c(), r});
  for (const auto& [k, beta] : z.terms()) {
    res.series.add(k, beta);
    if (beta.degree() > 0) res.log_free = false;
  }

  if (!degree_bound(res, res.linear, q, r)) {
    throw Error(Errc::degree_bound, "log-degree bound violated; this indicates an implementation bug");
  }
  return res;
}

std::optional<Rat> verify_residual(const QPolynomial& f, const PowerLogSeries& series, const Rat& q,
                                   const Assignment& assignment, const Rat& k_max) {
  if (series.q() != q) {
    throw Error(Errc::invalid_argument, "series was computed for q = " + series.q().str() + ", not " + q.str());
  }
  auto bind = [&](const ParamPoly& p) { return ParamPoly(p.evaluate(assignment)); };
  const QPolynomial f_num = f.map_coefficients(bind);
  const PowerLogSeries s_num = series.map_coefficients(bind);
  const PowerLogSeries residual = evaluate_on_series(f_num, s_num, k_max);
  if (residual.terms().empty()) return std::nullopt;
  return residual.terms().begin()->first;
}

Rat degree_bound_value(const CriticalData& critical, const std::vector<Rat>& k_set, const Rat& r, const Rat& k) {
  if (k_set.empty()) return Rat(0);
  const Rat C = Rat(1) + (k_set.front() - r).inverse();
  Rat mu_sum;
  for (const auto& e : critical.eigen_rational) {
    if (r < e.k && e.k <= k) mu_sum += Rat(e.mu);
  }
  return C * (k - r) * mu_sum;
}

bool degree_bound(const ExpansionResult& result, const LinearPart& L, const Rat& q, const Rat& r) {
  const CriticalData crit = critical_numbers(L, q, r);
  for (const auto& [k, beta] : result.series.terms()) {
    if (Rat(beta.degree()) > degree_bound_value(crit, result.k_set, r, k)) return false;
  }
  return true;
}

} // namespace qdulac
