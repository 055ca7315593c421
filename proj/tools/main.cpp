#include <iostream>
#include <string>
#include <vector>

#include "qdulac/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto report = qdulac::cli::run(args);
  std::cout << report.out;
  std::cerr << report.err;
  return report.exit_code;
}
