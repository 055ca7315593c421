#pragma once

// Independent reference implementations used to check the library. They are
// deliberately naive: brute force, dense linear algebra, point evaluation.

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "qdulac/expand.hpp"
#include "qdulac/polygon.hpp"
#include "qdulac/series.hpp"

namespace qdulac::testing {

Rat cross(const Point& o, const Point& a, const Point& b);

/// Brute-force hull: a pair (a,b) is an edge when every point lies on its
/// left or on the segment itself. Vertices are the endpoints of such edges.
struct HullOracle {
  std::set<Point> vertices;
  std::set<std::pair<Point, Point>> edges; // unordered, stored with first < second
};
HullOracle brute_hull(const PointSet& points);

/// p(t + s) computed from Pascal's triangle.
std::vector<Rat> shift_poly(const std::vector<Rat>& p, long s);

/// sum_j a_j s0^j p(t + j), where s0 = q^k.
std::vector<Rat> apply_operator(const std::vector<Rat>& a, const Rat& s0, const std::vector<Rat>& p);

using Matrix = std::vector<std::vector<Rat>>;

/// Gaussian elimination. Returns one solution with free variables set to
/// zero, or nullopt if inconsistent.
std::optional<std::vector<Rat>> solve_linear(Matrix A, std::vector<Rat> b);
std::size_t matrix_rank(Matrix A);

/// Matrix of p -> apply_operator(a, s0, p) on polynomials of degree <= n,
/// with rows for t^0..t^n.
Matrix operator_matrix(const std::vector<Rat>& a, const Rat& s0, unsigned n);

/// f(x, c x^r) grouped by exponent of x, by direct expansion of each term.
std::map<Rat, ParamPoly> evaluate_on_monomial(const QPolynomial& f, const ParamPoly& c, const Rat& r, const Rat& q);

/// y(q^n) for the series (t = log_q x = n), exact.
Rat series_at(const PowerLogSeries& s, const Assignment& a, long n);

/// f(x, y(x), y(qx), ...) at x = q^n, exact.
Rat equation_at(const QPolynomial& f, const PowerLogSeries& s, const Assignment& a, long n);

/// log|F(n)| / log|q^n| for the residual F above: the apparent order of
/// vanishing, which tends to the true residual exponent as n grows.
double apparent_order(const QPolynomial& f, const PowerLogSeries& s, const Assignment& a, long n);

} // namespace qdulac::testing
