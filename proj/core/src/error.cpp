#include "qdulac/error.hpp"

namespace qdulac {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
  case Errc::invalid_argument: return "invalid-argument";
  case Errc::parse: return "syntax-error";
  case Errc::unbound_symbol: return "unbound-symbol";
  case Errc::reserved_symbol: return "reserved-symbol";
  case Errc::invalid_q: return "invalid-q";
  case Errc::irrational_power: return "irrational-q-power";
  case Errc::indeterminate_equation: return "indeterminate-equation";
  case Errc::empty_support: return "empty-support";
  case Errc::not_a_vertex: return "not-a-vertex";
  case Errc::inconsistent_edge: return "inconsistent-edge";
  case Errc::hypothesis_vertex: return "hypothesis-1-violation";
  case Errc::hypothesis_linear: return "hypothesis-2-violation";
  case Errc::truncated_solution: return "not-a-truncated-solution";
  case Errc::degree_bound: return "degree-bound-violation";
  case Errc::residual: return "nonzero-residual";
  }
  return "unknown";
}

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(Errc::parse, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line), column_(column) {}

int error_exit_code(Errc code) noexcept {
  switch (code) {
  case Errc::invalid_argument:
  case Errc::parse:
  case Errc::unbound_symbol:
  case Errc::reserved_symbol:
  case Errc::invalid_q:
  case Errc::indeterminate_equation:
  case Errc::empty_support:
    return 2;
  case Errc::irrational_power:
  case Errc::not_a_vertex:
  case Errc::inconsistent_edge:
  case Errc::hypothesis_vertex:
  case Errc::hypothesis_linear:
    return 3;
  case Errc::truncated_solution:
  case Errc::degree_bound:
  case Errc::residual:
    return 1;
  }
  return 1;
}

} // namespace qdulac
