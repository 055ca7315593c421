#include <doctest.h>

#include "generators.hpp"
#include "qdulac/error.hpp"
#include "qdulac/param_poly.hpp"

using namespace qdulac;
using qdulac::testing::Gen;

namespace {
const std::vector<std::string> kSyms{"a", "b", "c1"};
ParamPoly sym(const char* s) { return ParamPoly::symbol(s); }
} // namespace

TEST_CASE("ring axioms on random polynomials") {
  Gen g(21);
  for (int i = 0; i < 200; ++i) {
    const auto p = testing::random_param_poly(g, kSyms, 4, 3);
    const auto q = testing::random_param_poly(g, kSyms, 4, 3);
    const auto r = testing::random_param_poly(g, kSyms, 3, 2);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + ParamPoly() == p);
    CHECK(p * ParamPoly(1) == p);
    CHECK((p - p).is_zero());
    CHECK((p * ParamPoly()).is_zero());
    CHECK(p.pow(3) == p * p * p);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  Gen g(22);
  for (int i = 0; i < 200; ++i) {
    const auto p = testing::random_param_poly(g, kSyms, 4, 3);
    const auto q = testing::random_param_poly(g, kSyms, 4, 3);
    const Assignment a{{"a", g.rational(5, 3)}, {"b", g.rational(5, 3)}, {"c1", g.rational(5, 3)}};
    CHECK((p * q).evaluate(a) == p.evaluate(a) * q.evaluate(a));
    CHECK((p + q).evaluate(a) == p.evaluate(a) + q.evaluate(a));
    // Partial substitution followed by the rest equals full evaluation.
    const auto partial = p.substitute({{"a", a.at("a")}});
    CHECK_FALSE(partial.contains_symbol("a"));
    CHECK(partial.evaluate(a) == p.evaluate(a));
  }
}

TEST_CASE("unbound symbols are reported") {
  try {
    (void)(sym("a3") + 1).evaluate({});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unbound_symbol);
  }
}

TEST_CASE("text and LaTeX rendering") {
  const auto p = Rat(-16, 5) * sym("a3") - Rat(2, 5) * sym("C1").pow(2);
  CHECK(p.str() == "-(16/5)*a3 - (2/5)*C1^2");
  CHECK(p.latex() == "-\\frac{16}{5} a_{3} - \\frac{2}{5} C_{1}^{2}");
  CHECK((Rat(2) * sym("a3")).str() == "2*a3");
  CHECK(ParamPoly(Rat(3, 2)).str() == "(3/2)");
  CHECK(ParamPoly().str() == "0");
  CHECK(ParamPoly(-1).str() == "-1");
  CHECK(latex_symbol("a3") == "a_{3}");
  CHECK(latex_symbol("alpha") == "alpha");
  CHECK(p.reads_negative() == false);
  CHECK((-sym("a")).reads_negative());
  CHECK(p.is_sum());
  CHECK(p.total_degree() == 2);
  CHECK(p.symbols() == std::set<std::string>{"C1", "a3"});
}

TEST_CASE("reserved and malformed symbol names are rejected") {
  for (const char* bad : {"x", "y", "t", "z", "S"}) {
    try {
      check_symbol_name(bad);
      FAIL(bad);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::reserved_symbol);
    }
  }
  CHECK_THROWS_AS(check_symbol_name("1a"), Error);
  CHECK_THROWS_AS(check_symbol_name(""), Error);
  CHECK_NOTHROW(check_symbol_name("a_3"));
}
