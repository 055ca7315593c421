#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdulac/polygon.hpp"
#include "qdulac/qpoly.hpp"
#include "qdulac/rational.hpp"

namespace qdulac::cli {

enum class Format { text, json, latex };

Format parse_format(std::string_view text);

/// "auto", a vertex "(q1,q2)" or an edge "(q1,q2)-(q1',q2')" (either order).
struct FaceSelector {
  bool automatic = true;
  Point from;
  Point to;

  static FaceSelector parse(std::string_view text);
  bool is_vertex() const { return !automatic && from == to; }
  bool matches(const Face& face) const;
  std::string str() const;
};

struct RunConfig {
  std::string equation_path;
  /// Used instead of reading equation_path when set.
  std::optional<std::string> equation_text;
  std::optional<Rat> q;
  std::vector<std::string> params;
  Rat k_max{5};
  bool k_max_given = false;
  FaceSelector face;
  std::optional<std::string> c_override;
  std::optional<Rat> r_override;
  Format format = Format::text;
  std::optional<std::string> assign;
  std::optional<std::string> svg_out;
  std::optional<Rat> log_base;
  std::optional<std::string> series_path;

  /// Throws Errc::invalid_q / Errc::invalid_argument.
  void validate() const;
  /// q, or Errc::invalid_argument when --q was not given.
  const Rat& require_q() const;
  std::string load_equation_text() const;
  QPolynomial load_equation() const;
};

std::string read_file(const std::string& path);

} // namespace qdulac::cli
