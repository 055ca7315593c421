// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "checks.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "json_schema.hpp"
#include "qdulac/cli/commands.hpp"
#include "qdulac/cli/json_io.hpp"
#include "qdulac/error.hpp"
#include "qdulac/parser.hpp"

using namespace qdulac;
using namespace qdulac::testing;

namespace {

using Outcome = std::optional<std::string>;

ParamPoly sym(const char* s) { return ParamPoly::symbol(s); }

template <class T>
std::string show(const std::vector<T>& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i].str();
  out << '}';
  return out.str();
}

Face left_edge(const QPolynomial& f) { return faces_for_x_to_zero(build_polygon(support(f)))[1]; }

ExpansionResult expand_case(const Rat& q, const Rat& k_max) {
  const auto f = qp5();
  const auto ts = TruncatedSolution::make(f, left_edge(f), ParamPoly(-1), Rat(0), q, Provenance::edge_root);
  return expand_solution(f, ts, q, k_max);
}

std::vector<Rat> steps_of(const Rat& step, const Rat& hi) {
  std::vector<Rat> out;
  for (Rat k = step; k <= hi; k += step) out.push_back(k);
  return out;
}

Outcome golden_case_1() {
  const auto res = expand_case(Rat(1, 2), Rat(1));
  PowerLogSeries want(Rat(1, 2), BaseTerm{ParamPoly(-1), Rat(0)});
  want.add(Rat(1), UPoly(std::vector<ParamPoly>{sym("C1"), Rat(2) * sym("a3")}));
  if (!(res.series == want)) return "got " + res.series.str();
  if (res.series.str() != "-1 + (2*a3*t + C1)*x") return "printed as " + res.series.str();
  return std::nullopt;
}

Outcome golden_case_2() {
  const auto res = expand_case(Rat(1, 4), Rat(1));
  if (res.series.terms().size() != 2) return "expected two terms, got " + res.series.str();
  if (!(res.series.coefficient(Rat(1, 2)) == UPoly(sym("C1")))) return "beta_{1/2} wrong: " + res.series.str();
  const ParamPoly b1 = Rat(-2, 5) * (Rat(8) * sym("a3") + sym("C1").pow(2));
  if (!(res.series.coefficient(Rat(1)) == UPoly(b1))) return "beta_1 wrong: " + res.series.str();
  const auto deep = expand_case(Rat(1, 4), Rat(3));
  if (!deep.log_free) return "log terms through k_max = 3";
  for (const auto& [k, beta] : deep.series.terms())
    if (beta.degree() != 0) return "beta_" + k.str() + " has degree " + std::to_string(beta.degree());
  if (deep.series.terms().size() != 6) return "expected six terms through x^3";
  return std::nullopt;
}

Outcome intermediate_objects() {
  const auto f = qp5();
  if (!(substitute_shift(f, ParamPoly(-1), Rat(0), Rat(1, 2)) == qp5_shifted())) return "shifted equation differs";
  const auto split = extract_linear_part(qp5_shifted().renamed("z"));
  if (!(split.linear == LinearPart{{Rat(3, 2), Rat(-4), Rat(2)}})) return "linear part differs";

  const auto polygon = build_polygon(support(f));
  const auto an = analyze_face(f, polygon, left_edge(f), Rat(1, 2));
  std::vector<Rat> nonzero;
  for (const auto& root : an.roots)
    if (root.value != 0) nonzero.push_back(root.value);
  if (nonzero != std::vector<Rat>{Rat(-1)}) return "determining roots " + show(nonzero);

  struct Expect {
    Rat q;
    std::vector<Rat> criticals;
    std::vector<Rat> k_set;
  };
  for (const auto& e : {Expect{Rat(1, 2), {Rat(1)}, steps_of(Rat(1), Rat(5))},
                        Expect{Rat(1, 4), {Rat(1, 2)}, steps_of(Rat(1, 2), Rat(5))}}) {
    const auto cd = critical_numbers(split.linear, e.q, Rat(0));
    if (cd.criticals() != e.criticals) return "criticals at q = " + e.q.str() + ": " + show(cd.criticals());
    if (cd.skipped_irrational != std::vector<Rat>{Rat(3, 2)}) return "s = 3/2 not reported at q = " + e.q.str();
    const auto res = expand_case(e.q, Rat(5));
    if (res.k_set != e.k_set) return "K at q = " + e.q.str() + ": " + show(res.k_set);
  }
  return std::nullopt;
}

Outcome residual_property() {
  const Assignment a{{"a3", Rat(1)}, {"a4", Rat(1)}, {"C1", Rat(1)}};
  for (const Rat& q : {Rat(1, 2), Rat(1, 4)})
    for (long N = 1; N <= 3; ++N) {
      const auto res = expand_case(q, Rat(N));
      if (auto err = check_residual_order(qp5(), res.series, a, Rat(N)))
        return "q = " + q.str() + ", N = " + std::to_string(N) + ": " + *err;
    }
  return std::nullopt;
}

Outcome difference_oracle() {
  Gen g(0xD1FF);
  int by_mu[3] = {0, 0, 0};
  for (int i = 0; i < 200; ++i) {
    const auto op = planted_operator(g);
    const auto theta = random_rational_tpoly(g, 4);
    if (auto err = check_difference_instance(op, theta, g)) return "instance " + std::to_string(i) + ": " + *err;
    if (op.mu < 3) ++by_mu[op.mu];
  }
  if (by_mu[0] == 0 || by_mu[1] == 0 || by_mu[2] == 0) return "some multiplicity was never planted";
  return std::nullopt;
}

Outcome degree_bound_case_1() {
  const auto res = expand_case(Rat(1, 2), Rat(5));
  if (res.series.terms().size() != 5) return "expected five terms";
  for (const auto& [k, beta] : res.series.terms())
    if (Rat(beta.degree()) > Rat(2) * k) return "deg beta_" + k.str() + " = " + std::to_string(beta.degree());
  if (!degree_bound(res, res.linear, Rat(1, 2), Rat(0))) return "degree_bound reports a violation";
  return std::nullopt;
}

Outcome hull_oracle() {
  Gen g(0x4011);
  for (int i = 0; i < 500; ++i)
    if (auto err = check_hull(random_points(g, 12))) return "set " + std::to_string(i) + ": " + *err;
  const auto hv = build_polygon(support(qp5())).hull_vertices;
  const std::vector<Point> want{{0, 2}, {2, 2}, {2, 3}, {0, 3}};
  if (hv != want) return "hull " + show(hv);
  return std::nullopt;
}

Outcome truncated_solutions_vanish() {
  const auto f = qp5();
  for (const Rat& q : {Rat(1, 2), Rat(1, 4)}) {
    std::size_t n = 0;
    for (const auto& an : solve_truncated(f, q))
      for (const auto& ts : an.candidates) {
        ++n;
        if (!solves_truncated(f, ts.face(), ts.c(), ts.r(), q))
          return "candidate " + ts.c().str() + " x^" + ts.r().str() + " does not vanish";
      }
    if (n == 0) return "no candidates at q = " + q.str();
  }
  Gen g(0x7EE1);
  for (int i = 0; i < 50; ++i)
    if (auto err = check_planted_edge(planted_edge_equation(g))) return "equation " + std::to_string(i) + ": " + *err;
  return std::nullopt;
}

Outcome cli_contract() {
  const std::string eq = data_path("qp5.eq");
  const auto run = [&](std::vector<std::string> args) {
    auto r = cli::run(args);
    if (r.exit_code != 0) throw std::runtime_error("exit " + std::to_string(r.exit_code) + ": " + r.err);
    return r;
  };
  const std::vector<std::string> common{"--eq", eq, "--params", "a3,a4", "--format", "json"};
  const auto with = [&](std::string cmd, std::vector<std::string> extra) {
    std::vector<std::string> args{std::move(cmd)};
    args.insert(args.end(), common.begin(), common.end());
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
  };
  const std::vector<std::pair<std::string, std::vector<std::string>>> docs{
      {"polygon", with("polygon", {})},
      {"truncate", with("truncate", {"--q", "1/2"})},
      {"expand", with("expand", {"--q", "1/2", "--kmax", "3"})},
      {"expand", with("expand", {"--q", "1/4", "--kmax", "3"})},
      {"verify", with("verify", {"--q", "1/4", "--kmax", "2", "--assign", "a3=1,a4=1,C1=1"})},
  };
  for (const auto& [name, args] : docs) {
    const auto schema = cli::json::parse(slurp(schema_path(name)));
    const auto errs = validate_schema(schema, cli::json::parse(run(args).out));
    if (!errs.empty()) return name + " output: " + errs.front();
  }

  const auto f = qp5();
  const auto once = parse_equation(f.str(), kQp5Params);
  if (!(once == f) || once.str() != f.str()) return "print/parse is not a fixpoint: " + f.str();
  const auto from_file = parse_equation(slurp(eq), kQp5Params);
  if (!(from_file == f)) return "data file differs from the worked equation";

  const auto a = run({"plot", "--eq", eq, "--params", "a3,a4"}).out;
  const auto b = run({"plot", "--eq", eq, "--params", "a3,a4"}).out;
  if (a != b || a.empty()) return "plot output differs between runs";
  return std::nullopt;
}

struct Criterion {
  const char* id;
  const char* what;
  std::function<Outcome()> check;
};

} // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1", "golden case q=1/2: y = -1 + (2 a3 t + C1) x", golden_case_1},
      {"AC2", "golden case q=1/4: beta_{1/2}, beta_1 exact; log-free through k_max=3", golden_case_2},
      {"AC3", "shifted equation, linear part, roots, criticals, K", intermediate_objects},
      {"AC4", "residual exponent > N for N=1,2,3 in both cases", residual_property},
      {"AC5", "difference solver matches dense solve on 200 instances", difference_oracle},
      {"AC6", "deg beta_k <= 2k for k <= 5 at q=1/2", degree_bound_case_1},
      {"AC7", "hull matches brute force on 500 sets; worked hull", hull_oracle},
      {"AC8", "truncated solutions annihilate their face sums", truncated_solutions_vanish},
      {"AC9", "JSON schemas, parse/print fixpoint, deterministic plot", cli_contract},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out && secs > 5.0) out = "took " + std::to_string(secs) + " s";
    std::printf("%s %s %s (%.2fs)%s%s\n", c.id, out ? "FAIL" : "PASS", c.what, secs, out ? ": " : "",
                out ? out->c_str() : "");
    if (out) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
