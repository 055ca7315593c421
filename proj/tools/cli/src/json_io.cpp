#include "qdulac/cli/json_io.hpp"

#include "qdulac/error.hpp"

namespace qdulac::cli {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(Errc::invalid_argument, "malformed JSON: " + what);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing '") + key + "'");
  return j.at(key);
}

} // namespace

json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
  if (!j.is_string()) malformed("rational must be a \"p/m\" string");
  return Rat::parse(j.get<std::string>());
}

json to_json(const Point& p) { return json::array({to_json(p.q1), to_json(p.q2)}); }

Point point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) malformed("point must be [q1,q2]");
  return Point{rat_from_json(j[0]), rat_from_json(j[1])};
}

json to_json(const ParamPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::object();
    for (const auto& [name, e] : m.powers()) mono[name] = e;
    out.push_back({{"coef", to_json(c)}, {"monomial", mono}});
  }
  return out;
}

ParamPoly poly_from_json(const json& j) {
  if (!j.is_array()) malformed("polynomial must be an array");
  ParamPoly out;
  for (const auto& term : j) {
    std::vector<std::pair<std::string, unsigned>> powers;
    for (const auto& [name, e] : field(term, "monomial").items()) {
      if (!e.is_number_unsigned() || e.get<unsigned>() == 0) malformed("exponent of '" + name + "'");
      check_symbol_name(name);
      powers.emplace_back(name, e.get<unsigned>());
    }
    out += ParamPoly(Monomial(std::move(powers)), rat_from_json(field(term, "coef")));
  }
  return out;
}

json beta_json(const UPoly& beta) {
  json out = json::array();
  const auto& cs = beta.coefficients();
  for (std::size_t d = cs.size(); d-- > 0;) {
    if (cs[d].is_zero()) continue;
    out.push_back({{"t_power", d}, {"coeff", to_json(cs[d])}});
  }
  return out;
}

UPoly beta_from_json(const json& j) {
  if (!j.is_array()) malformed("beta must be an array");
  UPoly out;
  for (const auto& e : j) {
    const auto& tp = field(e, "t_power");
    if (!tp.is_number_unsigned()) malformed("t_power must be a non-negative integer");
    out += UPoly::monomial(poly_from_json(field(e, "coeff")), tp.get<unsigned>());
  }
  return out;
}

json face_json(const Face& face) {
  json pts = json::array();
  for (const auto& p : face.points) pts.push_back(to_json(p));
  json out = {{"dim", face.dim}, {"label", face.str()}, {"points", pts}};
  if (face.r) out["r"] = to_json(*face.r);
  return out;
}

json polygon_json(const NewtonPolygon& polygon) {
  json support = json::array();
  for (const auto& p : polygon.support) support.push_back(to_json(p));
  json hull = json::array();
  for (const auto& p : polygon.hull_vertices) hull.push_back(to_json(p));
  const auto x0 = faces_for_x_to_zero(polygon);
  json faces = json::array();
  for (const auto& f : polygon.faces) {
    json fj = face_json(f);
    fj["x_to_zero"] = std::find(x0.begin(), x0.end(), f) != x0.end();
    if (f.dim == 0) {
      json cone = nullptr;
      if (auto iv = vertex_r_interval(f.from, polygon.support)) {
        cone = {{"lo", iv->lo ? to_json(*iv->lo) : json(nullptr)}, {"hi", iv->hi ? to_json(*iv->hi) : json(nullptr)}};
      }
      fj["r_interval"] = cone;
    }
    faces.push_back(fj);
  }
  return {{"support", support}, {"hull", hull}, {"faces", faces}};
}

json solution_json(const TruncatedSolution& ts) {
  return {{"c", to_json(ts.c())},
          {"c_text", ts.c().str()},
          {"r", to_json(ts.r())},
          {"face", ts.face().str()},
          {"provenance", std::string(provenance_name(ts.provenance()))}};
}

json analysis_json(const FaceAnalysis& a) {
  json poly = json::array();
  const auto& cs = a.poly.coefficients();
  for (std::size_t d = cs.size(); d-- > 0;) {
    if (cs[d].is_zero()) continue;
    poly.push_back({{"power", d}, {"coeff", to_json(cs[d])}});
  }
  json roots = json::array();
  for (const auto& r : a.roots) roots.push_back({{"value", to_json(r.value)}, {"multiplicity", r.multiplicity}});
  json cands = json::array();
  for (const auto& ts : a.candidates) cands.push_back(solution_json(ts));
  return {{"face", face_json(a.face)},
          {"truncated", a.truncated.str()},
          {"poly_variable", a.poly_variable},
          {"poly", poly},
          {"poly_text", a.poly.str(a.poly_variable)},
          {"roots", roots},
          {"candidates", cands},
          {"diagnostics", a.diagnostics},
          {"needs_c", a.needs_c}};
}

json expansion_json(const ExpansionResult& result, const TruncatedSolution& ts) {
  json terms = json::array();
  for (const auto& [k, beta] : result.series.terms()) terms.push_back({{"k", to_json(k)}, {"beta", beta_json(beta)}});

  json constants = json::array();
  json origins = json::array();
  for (const auto& [name, k] : result.constants_introduced) {
    constants.push_back(name);
    origins.push_back({{"name", name}, {"k", to_json(k)}});
  }

  json critical = json::array();
  for (const auto& e : result.critical.eigen_rational) {
    if (!e.critical) continue;
    json rec = {{"k", to_json(e.k)}, {"mu", e.mu}, {"compatible", nullptr}};
    for (const auto& c : result.compatibility)
      if (c.k == e.k) rec["compatible"] = c.compatible;
    critical.push_back(rec);
  }

  json eigen = json::array();
  for (const auto& e : result.critical.eigen_rational)
    eigen.push_back({{"k", to_json(e.k)}, {"s", to_json(e.s)}, {"mu", e.mu}, {"critical", e.critical}});

  json skipped = json::array();
  for (const auto& s : result.critical.skipped_irrational) skipped.push_back(to_json(s));
  json kset = json::array();
  for (const auto& k : result.k_set) kset.push_back(to_json(k));
  json linear = json::array();
  for (const auto& a : result.linear.coeffs) linear.push_back(to_json(a));

  return {{"q", to_json(result.series.q())},
          {"r", to_json(ts.r())},
          {"c", to_json(ts.c())},
          {"face", ts.face().str()},
          {"provenance", std::string(provenance_name(ts.provenance()))},
          {"k_max", to_json(result.k_max)},
          {"terms", terms},
          {"constants", constants},
          {"constant_origins", origins},
          {"critical", critical},
          {"eigenvalues", eigen},
          {"skipped_irrational", skipped},
          {"unresolved_roots", result.critical.unresolved},
          {"linear_part", linear},
          {"k_set", kset},
          {"log_free", result.log_free}};
}

PowerLogSeries series_from_json(const json& e) {
  const Rat q = rat_from_json(field(e, "q"));
  PowerLogSeries s(q, BaseTerm{poly_from_json(field(e, "c")), rat_from_json(field(e, "r"))});
  const auto& terms = field(e, "terms");
  if (!terms.is_array()) malformed("terms must be an array");
  for (const auto& t : terms) s.add(rat_from_json(field(t, "k")), beta_from_json(field(t, "beta")));
  return s;
}

} // namespace qdulac::cli
