#include <doctest.h>

#include "generators.hpp"
#include "qdulac/error.hpp"
#include "qdulac/parser.hpp"
#include "qdulac/series.hpp"

using namespace qdulac;
using namespace qdulac::testing;

namespace {

PowerLogSeries product(const PowerLogSeries& a, const PowerLogSeries& b, const Rat& k_max) {
  PowerLogSeries out(a.q());
  for (const auto& [ka, ba] : a.flattened())
    for (const auto& [kb, bb] : b.flattened())
      if (ka + kb <= k_max) out.add(ka + kb, ba * bb);
  return out;
}

PowerLogSeries random_series(Gen& g, const Rat& q) {
  PowerLogSeries s(q, BaseTerm{ParamPoly(g.nonzero_rational(3, 2)), Rat(0)});
  const long n = g.integer(0, 3);
  for (long i = 0; i < n; ++i) {
    std::vector<ParamPoly> cs;
    const long deg = g.integer(0, 2);
    for (long d = 0; d <= deg; ++d) cs.push_back(random_param_poly(g, {"a"}, 2, 1));
    s.add(Rat(g.integer(1, 3)), UPoly(cs));
  }
  return s;
}

} // namespace

TEST_CASE("sigma acts on x^k beta(t) by q^k beta(t + 1)") {
  const Rat q(1, 2);
  const UPoly beta(std::vector<ParamPoly>{ParamPoly::symbol("C1"), Rat(2) * ParamPoly::symbol("a3")});
  PowerLogSeries s(q);
  s.add(Rat(1), beta);
  const auto out = evaluate_on_series(parse_equation("S(y)", {}), s, Rat(3));
  CHECK(out.coefficient(Rat(1)) == beta.shifted(Rat(1)) * ParamPoly(Rat(1, 2)));
  const auto out2 = evaluate_on_series(parse_equation("S^2(y)", {}), s, Rat(3));
  CHECK(out2.coefficient(Rat(1)) == beta.shifted(Rat(2)) * ParamPoly(Rat(1, 4)));
}

TEST_CASE("evaluation is multiplicative up to the cutoff") {
  Gen g(61);
  for (int i = 0; i < 60; ++i) {
    const Rat q = g.pick(std::vector<Rat>{Rat(1, 2), Rat(2, 3), Rat(3)});
    const auto s = random_series(g, q);
    auto nonneg = [&](QPolynomial f) {
      if (f.is_zero()) return f;
      // keep x exponents >= 0 so truncation commutes with products
      return f.times_x_power(-min(Rat(0), f.min_x_exp()));
    };
    const auto f = nonneg(random_qpoly(g, {"a"}, 3));
    const auto h = nonneg(random_qpoly(g, {"a"}, 3));
    if (f.is_zero() || h.is_zero()) continue;
    const Rat K(3);
    CHECK(evaluate_on_series(f * h, s, K) == product(evaluate_on_series(f, s, K), evaluate_on_series(h, s, K), K));
    CHECK(evaluate_on_series(f + h, s, K).flattened() ==
          [&] {
            auto a = evaluate_on_series(f, s, K);
            const auto b_part = evaluate_on_series(h, s, K);
            for (const auto& [k, b] : b_part.terms()) a.add(k, b);
            return a.flattened();
          }());
  }
}

TEST_CASE("series printing") {
  PowerLogSeries s(Rat(1, 2), BaseTerm{ParamPoly(-1), Rat(0)});
  s.add(Rat(1), UPoly(std::vector<ParamPoly>{ParamPoly::symbol("C1"), Rat(2) * ParamPoly::symbol("a3")}));
  CHECK(s.str() == "-1 + (2*a3*t + C1)*x");
  CHECK(s.str("log_{1/2}(x)") == "-1 + (2*a3*log_{1/2}(x) + C1)*x");
  PowerLogSeries p(Rat(1, 4), BaseTerm{ParamPoly(-1), Rat(0)});
  p.add(Rat(1, 2), UPoly(ParamPoly::symbol("C1")));
  p.add(Rat(1), UPoly(Rat(-16, 5) * ParamPoly::symbol("a3") - Rat(2, 5) * ParamPoly::symbol("C1").pow(2)));
  CHECK(p.str() == "-1 + C1*x^(1/2) + (-(16/5)*a3 - (2/5)*C1^2)*x");
  PowerLogSeries n(Rat(2));
  n.add(Rat(2), UPoly(ParamPoly(-3)));
  CHECK(n.str() == "-3*x^2");
  CHECK(PowerLogSeries(Rat(2)).str() == "0");
  CHECK(*p.min_exponent() == 0);
}

TEST_CASE("series bookkeeping") {
  CHECK_THROWS_AS(PowerLogSeries(Rat(1)), Error);
  PowerLogSeries s(Rat(1, 2));
  s.add(Rat(1), UPoly(ParamPoly(2)));
  s.add(Rat(1), UPoly(ParamPoly(-2)));
  CHECK(s.is_zero());
  s.set_base(BaseTerm{ParamPoly::symbol("c"), Rat(1, 2)});
  CHECK(s.flattened().size() == 1);
  const auto t = s.map_coefficients([](const ParamPoly& p) { return p.substitute({{"c", Rat(0)}}); });
  CHECK(t.is_zero());
}
