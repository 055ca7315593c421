#pragma once

#include <string>
#include <vector>

#include "qdulac/cli/config.hpp"

namespace qdulac::cli {

struct Report {
  int exit_code = 0;
  std::string out;
  std::string err;
};

Report cmd_polygon(const RunConfig& config);
Report cmd_truncate(const RunConfig& config);
Report cmd_expand(const RunConfig& config);
Report cmd_verify(const RunConfig& config);
/// Writes the SVG to config.svg_out, or to Report::out when unset.
Report cmd_plot(const RunConfig& config);

/// Full command line (without argv[0]) to Report.
Report run(const std::vector<std::string>& args);

} // namespace qdulac::cli
