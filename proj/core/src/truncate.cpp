#include "qdulac/truncate.hpp"

#include <set>

#include "qdulac/error.hpp"

namespace qdulac {

std::string_view provenance_name(Provenance p) noexcept {
  switch (p) {
  case Provenance::vertex_root: return "vertex-root";
  case Provenance::edge_root: return "edge-root";
  case Provenance::user_supplied: return "user-supplied";
  }
  return "unknown";
}

QPolynomial truncated_sum(const QPolynomial& f, const Face& face) { return f.restricted_to(face.point_set()); }

bool solves_truncated(const QPolynomial& f, const Face& face, const ParamPoly& c, const Rat& r, const Rat& q) {
  const QPolynomial g = truncated_sum(f, face);
  if (g.is_zero()) return true;
  return substitute_shift(g, c, r, q).unknown_free_part().is_zero();
}

TruncatedSolution TruncatedSolution::make(const QPolynomial& f, Face face, ParamPoly c, Rat r, const Rat& q,
                                          Provenance provenance) {
  if (c.is_zero()) throw Error(Errc::invalid_argument, "truncated solution needs c != 0");
  if (!solves_truncated(f, face, c, r, q)) {
    throw Error(Errc::truncated_solution, "y = (" + c.str() + ")*x^(" + r.str() +
                                              ") does not solve the truncated equation of face " + face.str());
  }
  return TruncatedSolution(std::move(c), std::move(r), std::move(face), provenance);
}

bool verify_truncated(const TruncatedSolution& ts, const QPolynomial& f, const Rat& q) {
  return solves_truncated(f, ts.face(), ts.c(), ts.r(), q);
}

UPoly vertex_char_poly(const QPolynomial& g, const Rat& q) {
  check_q(q);
  const PointSet pts = g.support_points();
  if (pts.size() != 1) {
    throw Error(Errc::not_a_vertex, "characteristic polynomial needs terms at a single exponent point");
  }
  // y = c x^r: each sigma^l y contributes c w^l x^r.
  UPoly chi;
  for (const auto& t : g.terms()) chi += UPoly::monomial(t.coeff, t.sigma.weighted_level());
  return chi;
}

UPoly determining_poly(const QPolynomial& g, const Rat& r, const Rat& q) {
  check_q(q);
  UPoly poly;
  std::optional<Rat> x_power;
  for (const auto& t : g.terms()) {
    const Rat e = t.x_exp + r * Rat(t.sigma.degree());
    if (x_power && *x_power != e) {
      throw Error(Errc::inconsistent_edge, "terms do not share one x power at r = " + r.str());
    }
    x_power = e;
    const Rat scale = q_pow(q, r * Rat(t.sigma.weighted_level()));
    poly += UPoly::monomial(t.coeff * scale, t.sigma.degree());
  }
  return poly;
}

std::string free_coefficient_name(const QPolynomial& f) {
  std::set<std::string> used;
  for (const auto& t : f.terms()) {
    for (const auto& s : t.coeff.symbols()) used.insert(s);
  }
  std::string name = "c";
  for (int i = 0; used.contains(name); ++i) name = "c" + std::to_string(i);
  return name;
}

namespace {

void analyze_vertex(const QPolynomial& f, const NewtonPolygon& polygon, const Rat& q, FaceAnalysis& out) {
  out.poly_variable = "w";
  out.poly = vertex_char_poly(out.truncated, q);
  if (out.poly.is_zero()) {
    out.diagnostics.emplace_back("characteristic polynomial vanishes identically; every r in the cone is admissible");
    return;
  }
  if (!out.poly.has_constant_coefficients()) {
    out.needs_c = true;
    out.diagnostics.emplace_back("characteristic polynomial depends on parameters: needs --c and --r");
    return;
  }
  const auto coeffs = out.poly.rational_coefficients();
  out.roots = rational_roots(coeffs);

  const auto cone = vertex_r_interval(out.face.from, polygon.support);
  const std::string cname = free_coefficient_name(f);
  for (const auto& root : out.roots) {
    if (root.value.sign() <= 0) {
      out.diagnostics.push_back("root w = " + root.value.str() + " skipped: q^r must be positive");
      continue;
    }
    const auto r = q_log(q, root.value);
    if (!r) {
      out.diagnostics.push_back("root w = " + root.value.str() + ": non-rational exponent, skipped");
      continue;
    }
    if (!cone || !cone->contains(*r)) {
      out.diagnostics.push_back("root w = " + root.value.str() + " gives r = " + r->str() +
                                " outside the vertex's normal cone");
      continue;
    }
    out.candidates.push_back(TruncatedSolution::make(f, out.face, ParamPoly::symbol(cname), *r, q,
                                                     Provenance::vertex_root));
  }
  if (out.candidates.empty()) out.diagnostics.emplace_back("no admissible roots");
}

void analyze_edge(const QPolynomial& f, const Rat& q, FaceAnalysis& out) {
  out.poly_variable = "c";
  if (!out.face.r) {
    out.diagnostics.emplace_back("edge does not face x -> 0");
    return;
  }
  const Rat r = *out.face.r;
  try {
    out.poly = determining_poly(out.truncated, r, q);
  } catch (const Error& e) {
    if (e.code() != Errc::irrational_power) throw;
    out.diagnostics.push_back("irrational q-power at r = " + r.str() + "; edge skipped");
    return;
  }
  if (out.poly.is_zero()) {
    out.diagnostics.emplace_back("determining polynomial vanishes identically: c is unconstrained");
    return;
  }
  if (!out.poly.has_constant_coefficients()) {
    out.needs_c = true;
    out.diagnostics.emplace_back("determining polynomial depends on parameters: needs --c");
    return;
  }
  out.roots = rational_roots(out.poly.rational_coefficients());
  bool any = false;
  for (const auto& root : out.roots) {
    if (root.value.is_zero()) continue;
    any = true;
    out.candidates.push_back(TruncatedSolution::make(f, out.face, ParamPoly(root.value), r, q, Provenance::edge_root));
  }
  if (!any) out.diagnostics.emplace_back("no admissible roots");
}

} // namespace

FaceAnalysis analyze_face(const QPolynomial& f, const NewtonPolygon& polygon, const Face& face, const Rat& q) {
  check_q(q);
  FaceAnalysis out;
  out.face = face;
  out.truncated = truncated_sum(f, face);
  if (face.dim == 0) {
    analyze_vertex(f, polygon, q, out);
  } else {
    analyze_edge(f, q, out);
  }
  return out;
}

std::vector<FaceAnalysis> solve_truncated(const QPolynomial& f, const Rat& q) {
  const NewtonPolygon polygon = build_polygon(support(f));
  std::vector<FaceAnalysis> out;
  for (const auto& face : faces_for_x_to_zero(polygon)) out.push_back(analyze_face(f, polygon, face, q));
  return out;
}

} // namespace qdulac
