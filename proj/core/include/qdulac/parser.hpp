#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qdulac/param_poly.hpp"
#include "qdulac/qpoly.hpp"

namespace qdulac {

/// Parses one equation in the DSL
///
///   equation := expr ("=" "0")? ;
///   expr     := ["-"] term (("+"|"-") term)* ;
///   term     := factor ("*" factor)* ;
///   factor   := atom ("^" INT)? | "x" "^" "(" RATIONAL ")" ;
///   atom     := RATIONAL | INT | IDENT | "x" | var
///             | "S" ("^" INT)? "(" var ")" | "(" expr ")" ;
///
/// where var is "y" by default. `#` starts a comment running to end of line.
/// Powers are expanded and like terms merged. Throws ParseError (with 1-based
/// line/column) on syntax errors, undeclared identifiers, negative powers and
/// non-integer powers on anything but x.
QPolynomial parse_equation(std::string_view text, const std::vector<std::string>& params,
                           const std::string& var = "y");

/// Parses a parameter expression (no x, no unknown), e.g. "-1" or "2*a3 + 1".
ParamPoly parse_param_expr(std::string_view text, const std::vector<std::string>& params);

/// Splits "a3,a4" into names, validating each.
std::vector<std::string> parse_symbol_list(std::string_view text);

/// Parses "a3=1,C1=-2/3".
Assignment parse_assignment(std::string_view text);

} // namespace qdulac
