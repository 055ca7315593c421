#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qdulac/parser.hpp"

namespace qdulac::testing {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

QPolynomial qp5() { return parse_equation(slurp(data_path("qp5.eq")), kQp5Params); }

QPolynomial qp5_shifted() { return parse_equation(slurp(data_path("qp5_shifted.eq")), kQp5Params); }

} // namespace qdulac::testing
