#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qdulac {

/// Failure categories surfaced by the library. The CLI maps these onto
/// process exit codes (see error_exit_code).
enum class Errc {
  invalid_argument,
  parse,
  unbound_symbol,
  reserved_symbol,
  invalid_q,
  irrational_power,
  indeterminate_equation,
  empty_support,
  not_a_vertex,
  inconsistent_edge,
  hypothesis_vertex,   // (0,1) missing or not a hull vertex after the shift
  hypothesis_linear,   // (0,1) carries more than a constant-coefficient L(sigma)z
  truncated_solution,  // y = c x^r does not solve the truncated equation
  degree_bound,        // log-degree bound violated (implementation bug)
  residual,            // recursion left a nonzero residual (implementation bug)
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
public:
  ParseError(const std::string& message, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

/// 1: verification failure, 2: input error, 3: method hypothesis violated.
int error_exit_code(Errc code) noexcept;

} // namespace qdulac
