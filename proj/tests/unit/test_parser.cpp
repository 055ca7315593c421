#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "qdulac/error.hpp"
#include "qdulac/parser.hpp"

using namespace qdulac;
using namespace qdulac::testing;

namespace {

ParseError parse_failure(const std::string& text, const std::vector<std::string>& params = {}) {
  try {
    (void)parse_equation(text, params);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("parsed: " << text);
  return ParseError("", 0, 0);
}

} // namespace

TEST_CASE("print then parse is a fixpoint on the worked equation") {
  const auto f = qp5();
  const auto again = parse_equation(f.str(), kQp5Params);
  CHECK(again == f);
  CHECK(again.str() == f.str());
}

TEST_CASE("print then parse is a fixpoint on random sums") {
  Gen g(51);
  for (int i = 0; i < 300; ++i) {
    const auto f = random_qpoly(g, {"a", "b"}, 6);
    CAPTURE(f.str());
    CHECK(parse_equation(f.str(), {"a", "b"}) == f);
  }
}

TEST_CASE("the DSL accepts the documented forms") {
  CHECK(parse_equation("S^2(y)*y^2 = 0", {}) == parse_equation("y^2 * S^2(y)", {}));
  CHECK(parse_equation("(y + 1)^2", {}) == parse_equation("y^2 + 2*y + 1", {}));
  CHECK(parse_equation("x^(1/2)*y - 3/4", {}).support_points() == PointSet{{Rat(1, 2), 1}, {0, 0}});
  CHECK(parse_equation("# comment\n  a*x*y  # trailing\n", {"a"}).size() == 1);
  CHECK(parse_equation("-(y - 1)", {}) == parse_equation("1 - y", {}));
  CHECK(parse_equation("S(z) - z", {}, "z").var() == "z");
  CHECK(parse_equation("0", {}).is_zero());
}

TEST_CASE("syntax errors carry line and column") {
  const auto e = parse_failure("y +\n  * y");
  CHECK(e.line() == 2);
  CHECK(e.column() == 3);
  CHECK(parse_failure("(y + 1").code() == Errc::parse);
  CHECK(parse_failure("y + 1)").code() == Errc::parse);
  CHECK(parse_failure("y = 1").code() == Errc::parse);
  CHECK(parse_failure("y^-1").code() == Errc::parse);
  CHECK(parse_failure("y^(1/2)").code() == Errc::parse);
  CHECK(parse_failure("S(y)^(1/2)").code() == Errc::parse);
  CHECK(parse_failure("y $ 2").code() == Errc::parse);
  CHECK(parse_failure("S(S(y))").code() == Errc::parse);
  CHECK(parse_failure("").code() == Errc::parse);
}

TEST_CASE("identifiers must be declared parameters") {
  const auto e = parse_failure("a3*x*y");
  CHECK(std::string(e.what()).find("undeclared") != std::string::npos);
  CHECK(e.column() == 1);
  CHECK_NOTHROW(parse_equation("a3*x*y", {"a3"}));
}

TEST_CASE("parameter expressions, symbol lists and assignments") {
  CHECK(parse_param_expr("-1", {}) == ParamPoly(-1));
  CHECK(parse_param_expr("2*a3 + 1/2", {"a3"}) == Rat(2) * ParamPoly::symbol("a3") + ParamPoly(Rat(1, 2)));
  CHECK_THROWS_AS(parse_param_expr("x", {}), Error);
  CHECK_THROWS_AS(parse_param_expr("y + 1", {}), Error);
  CHECK(parse_symbol_list("a3, a4") == std::vector<std::string>{"a3", "a4"});
  CHECK_THROWS_AS(parse_symbol_list("a3,x"), Error);
  const auto a = parse_assignment("a3=1, C1=-2/3");
  CHECK(a.at("a3") == 1);
  CHECK(a.at("C1") == Rat(-2, 3));
  CHECK_THROWS_AS(parse_assignment("a3"), Error);
  CHECK_THROWS_AS(parse_assignment("a3=q"), Error);
}
