#include "qdulac/cli/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "qdulac/cli/json_io.hpp"
#include "qdulac/error.hpp"
#include "qdulac/expand.hpp"
#include "qdulac/parser.hpp"
#include "qdulac/polygon.hpp"
#include "qdulac/truncate.hpp"

namespace qdulac::cli {

namespace {

template <class Body>
Report guarded(Body&& body) {
  Report rep;
  try {
    body(rep);
  } catch (const ParseError& e) {
    rep.exit_code = error_exit_code(e.code());
    rep.err += "parse error at " + std::string(e.what()) + "\n";
  } catch (const Error& e) {
    rep.exit_code = error_exit_code(e.code());
    rep.err += "error [" + std::string(errc_name(e.code())) + "]: " + e.what() + "\n";
  } catch (const json::exception& e) {
    rep.exit_code = 2;
    rep.err += "error [invalid-json]: " + std::string(e.what()) + "\n";
  }
  return rep;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string points_text(const std::vector<Point>& pts) {
  std::vector<std::string> s;
  for (const auto& p : pts) s.push_back(p.str());
  return join(s, " ");
}

std::string interval_text(const std::optional<RInterval>& iv) {
  if (!iv) return "empty cone";
  return "r in (" + (iv->lo ? iv->lo->str() : "-inf") + ", " + (iv->hi ? iv->hi->str() : "+inf") + ")";
}

/// How t = log_q x is displayed; with --log-base B the betas are rewritten in
/// u = log_B x via t = u / log_B q.
struct LogDisplay {
  std::string text;
  std::string latex;
  Rat scale{1};
};

LogDisplay log_display(const RunConfig& config, const Rat& q) {
  const Rat base = config.log_base.value_or(q);
  LogDisplay d{"log_{" + base.str() + "}(x)", "\\log_{" + base.str() + "} x", Rat(1)};
  if (config.log_base) {
    const auto rho = q_log(base, q);
    if (!rho || rho->is_zero())
      throw Error(Errc::invalid_argument, "q = " + q.str() + " is not a rational power of --log-base " + base.str());
    d.scale = rho->inverse();
  }
  return d;
}

PowerLogSeries rescaled(const PowerLogSeries& s, const Rat& scale) {
  if (scale.is_one()) return s;
  PowerLogSeries out(s.q(), s.base());
  for (const auto& [k, beta] : s.terms()) out.add(k, beta.scaled_argument(scale));
  return out;
}

std::string series_latex(const PowerLogSeries& s, const std::string& log_tex) {
  std::string out;
  for (const auto& [k, beta] : s.flattened()) {
    bool neg = beta.coefficients().size() == 1 && beta.coeff(0).reads_negative();
    const UPoly mag = neg ? -beta : beta;
    const bool compound = mag.coefficients().size() > 1 || mag.coeff(0).is_sum();
    std::string coeff = mag.latex(log_tex);
    std::string xf;
    if (!k.is_zero()) xf = k.is_one() ? "x" : "x^{" + k.str() + "}";
    std::string body;
    if (xf.empty()) body = coeff;
    else if (!compound && coeff == "1") body = xf;
    else body = (compound ? "\\left(" + coeff + "\\right)" : coeff) + " " + xf;
    if (out.empty()) out = (neg ? "-" : "") + body;
    else out += (neg ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

std::string leading_text(const TruncatedSolution& ts, const Rat& q) {
  return PowerLogSeries(q, BaseTerm{ts.c(), ts.r()}).str();
}

// ---------------------------------------------------------------------------
// Face selection shared by truncate / expand / verify.

struct UserCheck {
  Face face;
  std::optional<TruncatedSolution> accepted;
  std::string message;
};

struct Selection {
  NewtonPolygon polygon;
  std::vector<FaceAnalysis> analyses;
  std::vector<UserCheck> user;
  std::vector<TruncatedSolution> candidates;
};

std::vector<Face> selected_faces(const RunConfig& config, const NewtonPolygon& polygon) {
  if (config.face.automatic) return faces_for_x_to_zero(polygon);
  for (const auto& f : polygon.faces)
    if (config.face.matches(f)) return {f};
  std::vector<std::string> names;
  for (const auto& f : polygon.faces) names.push_back(f.str());
  throw Error(Errc::invalid_argument,
              "no face " + config.face.str() + " in the Newton polygon (faces: " + join(names, ", ") + ")");
}

UserCheck check_user_c(const RunConfig& config, const QPolynomial& f, const Face& face, const ParamPoly& c,
                       const Rat& q) {
  UserCheck uc{face, std::nullopt, ""};
  std::optional<Rat> r;
  if (face.dim == 1) {
    if (!face.r) {
      uc.message = "edge has no normal of the form (-1,-r)";
      return uc;
    }
    if (config.r_override && *config.r_override != *face.r) {
      uc.message = "--r " + config.r_override->str() + " differs from the edge slope r = " + face.r->str();
      return uc;
    }
    r = face.r;
  } else {
    r = config.r_override;
    if (!r) {
      uc.message = "a vertex needs --r";
      return uc;
    }
  }
  try {
    uc.accepted = TruncatedSolution::make(f, face, c, *r, q, Provenance::user_supplied);
    uc.message = "accepted: solves the truncated equation";
  } catch (const Error& e) {
    uc.message = std::string("rejected: ") + e.what();
  }
  return uc;
}

Selection select(const RunConfig& config, const QPolynomial& f, const Rat& q) {
  Selection sel;
  sel.polygon = build_polygon(support(f));
  const auto faces = selected_faces(config, sel.polygon);
  for (const auto& face : faces) sel.analyses.push_back(analyze_face(f, sel.polygon, face, q));

  if (config.c_override) {
    const ParamPoly c = parse_param_expr(*config.c_override, config.params);
    for (const auto& face : faces) {
      sel.user.push_back(check_user_c(config, f, face, c, q));
      if (sel.user.back().accepted) sel.candidates.push_back(*sel.user.back().accepted);
    }
  } else {
    for (const auto& a : sel.analyses)
      for (const auto& ts : a.candidates)
        if (!config.r_override || ts.r() == *config.r_override) sel.candidates.push_back(ts);
  }
  return sel;
}

TruncatedSolution single_candidate(const RunConfig& config, const Selection& sel, const Rat& q) {
  if (sel.candidates.size() == 1) return sel.candidates.front();
  if (sel.candidates.empty()) {
    if (config.c_override) {
      std::string why;
      for (const auto& u : sel.user) why += "\n  " + u.face.str() + ": " + u.message;
      throw Error(Errc::truncated_solution, "--c " + *config.c_override + " is not a truncated solution" + why);
    }
    std::vector<std::string> needs;
    for (const auto& a : sel.analyses)
      if (a.needs_c) needs.push_back(a.face.str());
    if (!needs.empty())
      throw Error(Errc::invalid_argument, "the determining equation depends on parameters on " + join(needs, ", ") +
                                              "; needs --c");
    throw Error(Errc::invalid_argument, "no truncated solution with rational data on the selected faces");
  }
  std::vector<std::string> list;
  for (const auto& ts : sel.candidates)
    list.push_back("y = " + leading_text(ts, q) + " (r = " + ts.r().str() + ", face " + ts.face().str() + ")");
  throw Error(Errc::invalid_argument,
              "several truncated solutions; choose one with --face, --c or --r:\n  " + join(list, "\n  "));
}

// ---------------------------------------------------------------------------

std::string polygon_text(const NewtonPolygon& p) {
  std::ostringstream os;
  const std::vector<Point> sup(p.support.begin(), p.support.end());
  os << "support (" << sup.size() << "): " << points_text(sup) << "\n";
  os << "hull (" << p.hull_vertices.size() << "): " << points_text(p.hull_vertices) << "\n";
  const auto x0 = faces_for_x_to_zero(p);
  os << "faces:\n";
  for (const auto& f : p.faces) {
    os << "  " << (f.dim == 0 ? "vertex " : "edge   ") << f.str() << "  points " << points_text(f.points) << "  ";
    if (f.dim == 0) os << interval_text(vertex_r_interval(f.from, p.support));
    else os << (f.r ? "r = " + f.r->str() : "normal not of the form (-1,-r)");
    if (std::find(x0.begin(), x0.end(), f) != x0.end()) os << "  [x->0]";
    os << "\n";
  }
  return os.str();
}

std::string analysis_text(const FaceAnalysis& a, const Rat& q, bool latex) {
  std::ostringstream os;
  os << (a.face.dim == 0 ? "vertex " : "edge ") << a.face.str();
  if (a.face.r) os << "  (r = " << a.face.r->str() << ")";
  os << "\n";
  if (latex) {
    os << "  truncated: " << a.truncated.latex() << " = 0\n";
    os << "  " << (a.face.dim == 0 ? "characteristic" : "determining") << " polynomial: " << a.poly.latex(a.poly_variable)
       << "\n";
  } else {
    os << "  truncated: " << a.truncated.str() << " = 0\n";
    os << "  " << (a.face.dim == 0 ? "characteristic" : "determining") << " polynomial: " << a.poly.str(a.poly_variable)
       << "\n";
  }
  if (a.needs_c) {
    os << "  needs --c (coefficients depend on parameters)\n";
  } else {
    std::vector<std::string> roots;
    for (const auto& r : a.roots)
      roots.push_back(r.value.str() + (r.multiplicity > 1 ? " (x" + std::to_string(r.multiplicity) + ")" : ""));
    os << "  rational roots: " << (roots.empty() ? "none" : join(roots, ", ")) << "\n";
  }
  for (const auto& ts : a.candidates)
    os << "  candidate: y = " << leading_text(ts, q) << "  (r = " << ts.r().str() << ", "
       << provenance_name(ts.provenance()) << ")\n";
  for (const auto& d : a.diagnostics) os << "  note: " << d << "\n";
  return os.str();
}

std::string expansion_text(const RunConfig& config, const QPolynomial& f, const ExpansionResult& res,
                           const TruncatedSolution& ts, const Rat& q) {
  const LogDisplay ld = log_display(config, q);
  const PowerLogSeries shown = rescaled(res.series, ld.scale);
  const bool latex = config.format == Format::latex;
  std::ostringstream os;
  if (latex) {
    os << "y(x) = " << series_latex(shown, ld.latex) << " + \\ldots\n";
    return os.str();
  }
  os << "equation: " << f.str() << " = 0\n";
  os << "q = " << q.str() << "\n";
  os << "truncated solution: y = " << leading_text(ts, q) << "  (r = " << ts.r().str() << ", face " << ts.face().str()
     << ", " << provenance_name(ts.provenance()) << ")\n";
  os << "shifted equation: " << res.shifted.str() << " = 0\n";
  std::vector<ParamPoly> lc(res.linear.coeffs.begin(), res.linear.coeffs.end());
  os << "L(s) = " << UPoly(lc).str("s") << "\n";
  for (const auto& e : res.critical.eigen_rational)
    os << "eigenvalue k = " << e.k.str() << "  (s = " << e.s.str() << ", mu = " << e.mu
       << (e.critical ? ", critical" : "") << ")\n";
  for (const auto& s : res.critical.skipped_irrational)
    os << "skipped root s = " << s.str() << "  (log_q s is irrational)\n";
  if (res.critical.unresolved)
    os << "roots of L(s) outside Q: " << res.critical.unresolved << "\n";
  std::vector<std::string> ks;
  for (const auto& k : res.k_set) ks.push_back(k.str());
  os << "K up to k_max = " << res.k_max.str() << ": {" << join(ks, ", ") << "}\n";
  for (const auto& c : res.compatibility)
    os << "critical k = " << c.k.str() << ": " << (c.compatible ? "compatible" : "log terms appear") << "\n";
  for (const auto& [name, k] : res.constants_introduced) os << "constant " << name << " introduced at k = " << k.str() << "\n";
  os << "log_free: " << (res.log_free ? "true" : "false") << "\n";
  os << "\ny(x) = " << shown.str(ld.text) << " + ...\n";
  return os.str();
}

} // namespace

Report cmd_polygon(const RunConfig& config) {
  return guarded([&](Report& rep) {
    config.validate();
    const QPolynomial f = config.load_equation();
    const NewtonPolygon p = build_polygon(support(f));
    switch (config.format) {
    case Format::json: rep.out = dump(polygon_json(p)); break;
    case Format::latex: rep.out = f.latex() + " = 0\n" + polygon_text(p); break;
    case Format::text: rep.out = "equation: " + f.str() + " = 0\n" + polygon_text(p); break;
    }
  });
}

Report cmd_truncate(const RunConfig& config) {
  return guarded([&](Report& rep) {
    config.validate();
    const Rat& q = config.require_q();
    const QPolynomial f = config.load_equation();
    const Selection sel = select(config, f, q);
    const bool user_failed = config.c_override && sel.candidates.empty();
    if (config.format == Format::json) {
      json faces = json::array();
      for (const auto& a : sel.analyses) faces.push_back(analysis_json(a));
      json out = {{"q", to_json(q)}, {"faces", faces}};
      if (config.c_override) {
        json checks = json::array();
        for (const auto& u : sel.user)
          checks.push_back({{"face", u.face.str()}, {"accepted", u.accepted.has_value()}, {"message", u.message}});
        out["user_c"] = {{"expression", *config.c_override}, {"checks", checks}};
      }
      rep.out = dump(out);
    } else {
      std::string text;
      for (const auto& a : sel.analyses) text += analysis_text(a, q, config.format == Format::latex);
      for (const auto& u : sel.user) text += "--c " + *config.c_override + " on " + u.face.str() + ": " + u.message + "\n";
      rep.out = text;
    }
    if (user_failed) {
      rep.exit_code = 1;
      rep.err += "error [truncated-solution]: --c " + *config.c_override + " was rejected on every selected face\n";
    }
  });
}

Report cmd_expand(const RunConfig& config) {
  return guarded([&](Report& rep) {
    config.validate();
    const Rat& q = config.require_q();
    const QPolynomial f = config.load_equation();
    const Selection sel = select(config, f, q);
    const TruncatedSolution ts = single_candidate(config, sel, q);
    const ExpansionResult res = expand_solution(f, ts, q, config.k_max);
    if (config.format == Format::json) rep.out = dump(expansion_json(res, ts));
    else rep.out = expansion_text(config, f, res, ts, q);
  });
}

Report cmd_verify(const RunConfig& config) {
  return guarded([&](Report& rep) {
    config.validate();
    const QPolynomial f = config.load_equation();
    const Assignment assignment = config.assign ? parse_assignment(*config.assign) : Assignment{};

    std::optional<PowerLogSeries> series;
    Rat k_max = config.k_max;
    if (config.series_path) {
      const json doc = json::parse(read_file(*config.series_path));
      series = series_from_json(doc);
      if (config.q && *config.q != series->q())
        throw Error(Errc::invalid_argument, "--q " + config.q->str() + " differs from the series q = " + series->q().str());
      if (!config.k_max_given && doc.contains("k_max")) k_max = rat_from_json(doc.at("k_max"));
    } else {
      const Rat& q = config.require_q();
      const Selection sel = select(config, f, q);
      const TruncatedSolution ts = single_candidate(config, sel, q);
      series = expand_solution(f, ts, q, config.k_max).series;
    }
    const Rat& q = series->q();
    // One unit of lookahead so the first surviving exponent can be reported.
    const Rat cutoff = k_max + 1;
    const auto first = verify_residual(f, *series, q, assignment, cutoff);
    const bool pass = !first || *first > k_max;

    if (config.format == Format::json) {
      json assign = json::object();
      for (const auto& [k, v] : assignment) assign[k] = to_json(v);
      rep.out = dump({{"q", to_json(q)},
                      {"k_max", to_json(k_max)},
                      {"cutoff", to_json(cutoff)},
                      {"min_exponent", first ? to_json(*first) : json(nullptr)},
                      {"zero_through_cutoff", !first},
                      {"pass", pass},
                      {"assignment", assign}});
    } else {
      std::ostringstream os;
      os << "series: y = " << series->str("log_{" + q.str() + "}(x)") << "\n";
      if (first) os << "residual: min exponent " << first->str();
      else os << "residual: zero through x^" << cutoff.str();
      os << "  (k_max = " << k_max.str() << ")  " << (pass ? "PASS" : "FAIL") << "\n";
      rep.out = os.str();
    }
    if (!pass) rep.exit_code = 1;
  });
}

Report cmd_plot(const RunConfig& config) {
  return guarded([&](Report& rep) {
    config.validate();
    const QPolynomial f = config.load_equation();
    const std::string title =
        config.equation_text ? "" : std::filesystem::path(config.equation_path).filename().string();
    const std::string svg = polygon_svg(build_polygon(support(f)), title);
    if (!config.svg_out) {
      rep.out = svg;
      return;
    }
    std::ofstream out(*config.svg_out, std::ios::binary);
    if (!out) throw Error(Errc::invalid_argument, "cannot write '" + *config.svg_out + "'");
    out << svg;
    rep.out = "wrote " + *config.svg_out + "\n";
  });
}

Report run(const std::vector<std::string>& args) {
  CLI::App app{"Power-logarithmic expansions of algebraic q-difference equations near x = 0", "qdulac"};
  app.require_subcommand(1);

  struct Raw {
    std::string eq, q, params, kmax, face = "auto", c, r, format = "text", assign, svg, log_base, series;
  } raw;

  enum Opt : unsigned { kQ = 1, kK = 2, kFace = 4, kFmt = 8, kAssign = 16, kSvg = 32, kLog = 64, kSeries = 128 };
  std::map<std::string, CLI::App*> subs;
  auto add = [&](const std::string& name, const std::string& help, unsigned opts) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--eq", raw.eq, "equation file")->required();
    s->add_option("--params", raw.params, "comma-separated parameter names");
    if (opts & kQ) s->add_option("--q", raw.q, "q as p/m (q > 0, q != 1)");
    if (opts & kK) s->add_option("--kmax", raw.kmax, "highest exponent to compute (default 5)");
    if (opts & kFace) {
      s->add_option("--face", raw.face, "auto, a vertex \"(q1,q2)\" or an edge \"(q1,q2)-(q1',q2')\"");
      s->add_option("--c", raw.c, "leading coefficient, an expression in the parameters");
      s->add_option("--r", raw.r, "leading exponent (needed with --c on a vertex)");
    }
    if (opts & kFmt) s->add_option("--format", raw.format, "text, json or latex");
    if (opts & kAssign) s->add_option("--assign", raw.assign, "values, e.g. a3=1,C1=-2/3");
    if (opts & kSvg) s->add_option("--svg", raw.svg, "output file");
    if (opts & kLog) s->add_option("--log-base", raw.log_base, "display logarithms in this base");
    if (opts & kSeries) s->add_option("--series", raw.series, "expansion JSON to check instead of expanding");
    subs[name] = s;
  };
  add("polygon", "support, hull and faces of the Newton polygon", kFmt);
  add("truncate", "truncated equations and leading terms y = c x^r", kQ | kFace | kFmt);
  add("expand", "term-by-term expansion up to x^kmax", kQ | kK | kFace | kFmt | kLog);
  add("verify", "substitute an expansion and report the residual order", kQ | kK | kFace | kFmt | kAssign | kSeries);
  add("plot", "SVG drawing of the Newton polygon", kSvg);

  Report rep;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    rep.out = out.str();
    rep.err = err.str();
    rep.exit_code = code == 0 ? 0 : 2;
    return rep;
  }

  RunConfig config;
  rep = guarded([&](Report&) {
    config.equation_path = raw.eq;
    if (!raw.params.empty()) config.params = parse_symbol_list(raw.params);
    if (!raw.q.empty()) config.q = Rat::parse(raw.q);
    if (!raw.kmax.empty()) {
      config.k_max = Rat::parse(raw.kmax);
      config.k_max_given = true;
    }
    config.face = FaceSelector::parse(raw.face);
    if (!raw.c.empty()) config.c_override = raw.c;
    if (!raw.r.empty()) config.r_override = Rat::parse(raw.r);
    config.format = parse_format(raw.format);
    if (!raw.assign.empty()) config.assign = raw.assign;
    if (!raw.svg.empty()) config.svg_out = raw.svg;
    if (!raw.log_base.empty()) config.log_base = Rat::parse(raw.log_base);
    if (!raw.series.empty()) config.series_path = raw.series;
  });
  if (rep.exit_code != 0) return rep;

  if (subs["polygon"]->parsed()) return cmd_polygon(config);
  if (subs["truncate"]->parsed()) return cmd_truncate(config);
  if (subs["expand"]->parsed()) return cmd_expand(config);
  if (subs["verify"]->parsed()) return cmd_verify(config);
  return cmd_plot(config);
}

} // namespace qdulac::cli
