#pragma once

#include <string>
#include <vector>

#include "qdulac/qpoly.hpp"

#ifndef QDULAC_SOURCE_DIR
#error "QDULAC_SOURCE_DIR must be defined by the build"
#endif

namespace qdulac::testing {

inline const std::string kSourceDir = QDULAC_SOURCE_DIR;

inline std::string data_path(const std::string& name) { return kSourceDir + "/data/" + name; }
inline std::string schema_path(const std::string& name) { return kSourceDir + "/docs/schemas/" + name + ".schema.json"; }

inline const std::vector<std::string> kQp5Params{"a3", "a4"};

std::string slurp(const std::string& path);

/// The worked equation and its shift around y = -1.
QPolynomial qp5();
QPolynomial qp5_shifted();

} // namespace qdulac::testing
