#include "qdulac/param_poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "qdulac/error.hpp"

namespace qdulac {

Monomial::Monomial(std::vector<std::pair<std::string, unsigned>> powers) {
  std::sort(powers.begin(), powers.end());
  for (auto& [name, e] : powers) {
    if (e == 0) continue;
    if (!powers_.empty() && powers_.back().first == name) {
      powers_.back().second += e;
    } else {
      powers_.emplace_back(std::move(name), e);
    }
  }
}

Monomial Monomial::symbol(std::string name) {
  check_symbol_name(name);
  return Monomial({{std::move(name), 1u}});
}

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (const auto& p : powers_) d += p.second;
  return d;
}

unsigned Monomial::degree_in(std::string_view name) const noexcept {
  for (const auto& [n, e] : powers_) {
    if (n == name) return e;
  }
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<std::pair<std::string, unsigned>> merged;
  merged.reserve(a.powers_.size() + b.powers_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.powers_.size() || j < b.powers_.size()) {
    if (j == b.powers_.size() || (i < a.powers_.size() && a.powers_[i].first < b.powers_[j].first)) {
      merged.push_back(a.powers_[i++]);
    } else if (i == a.powers_.size() || b.powers_[j].first < a.powers_[i].first) {
      merged.push_back(b.powers_[j++]);
    } else {
      merged.emplace_back(a.powers_[i].first, a.powers_[i].second + b.powers_[j].second);
      ++i;
      ++j;
    }
  }
  Monomial m;
  m.powers_ = std::move(merged);
  return m;
}

bool operator<(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db;
  return a.powers_ < b.powers_;
}

bool is_reserved_symbol(std::string_view name) noexcept {
  return name == "x" || name == "y" || name == "t" || name == "z" || name == "S";
}

void check_symbol_name(std::string_view name) {
  if (name.empty()) throw Error(Errc::invalid_argument, "empty symbol name");
  if (is_reserved_symbol(name)) {
    throw Error(Errc::reserved_symbol, "'" + std::string(name) + "' is reserved and cannot be a parameter");
  }
  const bool ident = (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') &&
                     std::all_of(name.begin(), name.end(), [](char ch) {
                       return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
                     });
  if (!ident) throw Error(Errc::invalid_argument, "invalid symbol name '" + std::string(name) + "'");
}

ParamPoly::ParamPoly(const Rat& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

ParamPoly::ParamPoly(const Monomial& m, const Rat& c) {
  if (!c.is_zero()) terms_.emplace(m, c);
}

ParamPoly ParamPoly::symbol(const std::string& name) { return ParamPoly(Monomial::symbol(name), 1); }

bool ParamPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat ParamPoly::constant_value() const {
  if (!is_constant()) throw Error(Errc::invalid_argument, "expected a constant, got " + str());
  return constant_term();
}

Rat ParamPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rat(0) : it->second;
}

unsigned ParamPoly::total_degree() const noexcept {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::set<std::string> ParamPoly::symbols() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [name, e] : m.powers()) out.insert(name);
  }
  return out;
}

bool ParamPoly::contains_symbol(std::string_view name) const noexcept {
  for (const auto& [m, c] : terms_) {
    if (m.degree_in(name) > 0) return true;
  }
  return false;
}

Rat ParamPoly::evaluate(const Assignment& assignment) const {
  Rat total;
  for (const auto& [m, c] : terms_) {
    Rat v = c;
    for (const auto& [name, e] : m.powers()) {
      auto it = assignment.find(name);
      if (it == assignment.end()) {
        throw Error(Errc::unbound_symbol, "no value assigned to symbol '" + name + "'");
      }
      v *= it->second.pow(e);
    }
    total += v;
  }
  return total;
}

ParamPoly ParamPoly::substitute(const Assignment& assignment) const {
  ParamPoly out;
  for (const auto& [m, c] : terms_) {
    Rat v = c;
    std::vector<std::pair<std::string, unsigned>> kept;
    for (const auto& [name, e] : m.powers()) {
      auto it = assignment.find(name);
      if (it == assignment.end()) {
        kept.emplace_back(name, e);
      } else {
        v *= it->second.pow(e);
      }
    }
    out.add_term(Monomial(std::move(kept)), v);
  }
  return out;
}

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly result(1);
  ParamPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

void ParamPoly::add_term(const Monomial& m, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

ParamPoly& ParamPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

ParamPoly& ParamPoly::operator/=(const Rat& c) { return *this *= c.inverse(); }

ParamPoly operator-(const ParamPoly& a) {
  ParamPoly out = a;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

bool ParamPoly::reads_negative() const noexcept {
  return terms_.size() == 1 && terms_.begin()->second.sign() < 0;
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (const auto& [name, e] : m.powers()) {
    if (!out.empty()) out += '*';
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string monomial_latex(const Monomial& m) {
  std::string out;
  for (const auto& [name, e] : m.powers()) {
    if (!out.empty()) out += ' ';
    out += latex_symbol(name);
    if (e > 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

} // namespace

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const Rat mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
    } else if (mag.is_one()) {
      out += monomial_text(m);
    } else {
      out += (mag.is_integer() ? mag.str() : "(" + mag.str() + ")") + "*" + monomial_text(m);
    }
  }
  return out;
}

std::string ParamPoly::latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const Rat mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += latex_rat(mag);
    } else if (mag.is_one()) {
      out += monomial_latex(m);
    } else {
      out += latex_rat(mag) + " " + monomial_latex(m);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.str(); }

std::string latex_symbol(std::string_view name) {
  std::size_t split = name.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) --split;
  if (split == 0 || split == name.size()) return std::string(name);
  return std::string(name.substr(0, split)) + "_{" + std::string(name.substr(split)) + "}";
}

std::string latex_rat(const Rat& r) {
  if (r.is_integer()) return r.str();
  const std::string sign = r.sign() < 0 ? "-" : "";
  const Rat a = r.abs();
  return sign + "\\frac{" + a.num().get_str() + "}{" + a.den().get_str() + "}";
}

} // namespace qdulac
