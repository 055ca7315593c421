#include "qdulac/cli/config.hpp"

#include <fstream>
#include <sstream>

#include "qdulac/error.hpp"
#include "qdulac/parser.hpp"

namespace qdulac::cli {

Format parse_format(std::string_view text) {
  if (text == "text") return Format::text;
  if (text == "json") return Format::json;
  if (text == "latex") return Format::latex;
  throw Error(Errc::invalid_argument, "unknown format '" + std::string(text) + "' (text|json|latex)");
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (ch != ' ' && ch != '\t') out += ch;
  return out;
}

// "(a,b)" starting at pos; advances pos past ')'.
Point parse_point(const std::string& s, std::size_t& pos) {
  auto bad = [&] { return Error(Errc::invalid_argument, "bad face selector '" + s + "'"); };
  if (pos >= s.size() || s[pos] != '(') throw bad();
  const auto comma = s.find(',', pos);
  const auto close = s.find(')', pos);
  if (comma == std::string::npos || close == std::string::npos || comma > close) throw bad();
  Point p{Rat::parse(s.substr(pos + 1, comma - pos - 1)), Rat::parse(s.substr(comma + 1, close - comma - 1))};
  pos = close + 1;
  return p;
}

} // namespace

FaceSelector FaceSelector::parse(std::string_view text) {
  const std::string s = strip(text);
  FaceSelector sel;
  if (s.empty() || s == "auto") return sel;
  sel.automatic = false;
  std::size_t pos = 0;
  sel.from = parse_point(s, pos);
  sel.to = sel.from;
  if (pos < s.size()) {
    if (s[pos] != '-') throw Error(Errc::invalid_argument, "bad face selector '" + s + "'");
    ++pos;
    sel.to = parse_point(s, pos);
    if (sel.to == sel.from) throw Error(Errc::invalid_argument, "edge endpoints coincide in '" + s + "'");
  }
  if (pos != s.size()) throw Error(Errc::invalid_argument, "trailing text in face selector '" + s + "'");
  return sel;
}

bool FaceSelector::matches(const Face& face) const {
  if (automatic) return true;
  if (is_vertex()) return face.dim == 0 && face.from == from;
  return face.dim == 1 && ((face.from == from && face.to == to) || (face.from == to && face.to == from));
}

std::string FaceSelector::str() const {
  if (automatic) return "auto";
  if (is_vertex()) return from.str();
  return from.str() + "-" + to.str();
}

void RunConfig::validate() const {
  if (q) check_q(*q);
  if (k_max.sign() <= 0) throw Error(Errc::invalid_argument, "--kmax must be positive");
  for (const auto& p : params) check_symbol_name(p);
  if (log_base && (log_base->sign() <= 0 || log_base->is_one()))
    throw Error(Errc::invalid_argument, "--log-base must be positive and different from 1");
}

const Rat& RunConfig::require_q() const {
  if (!q) throw Error(Errc::invalid_argument, "--q is required for this command");
  return *q;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::invalid_argument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string RunConfig::load_equation_text() const {
  if (equation_text) return *equation_text;
  if (equation_path.empty()) throw Error(Errc::invalid_argument, "--eq is required");
  return read_file(equation_path);
}

QPolynomial RunConfig::load_equation() const { return parse_equation(load_equation_text(), params); }

} // namespace qdulac::cli
