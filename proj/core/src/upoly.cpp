#include "qdulac/upoly.hpp"

#include <algorithm>

#include "qdulac/error.hpp"

namespace qdulac {

UPoly::UPoly(ParamPoly constant) {
  coeffs_.push_back(std::move(constant));
  trim();
}

UPoly::UPoly(std::vector<ParamPoly> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UPoly UPoly::monomial(ParamPoly c, unsigned degree) {
  std::vector<ParamPoly> v(degree + 1);
  v[degree] = std::move(c);
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

unsigned UPoly::degree() const noexcept {
  return coeffs_.empty() ? 0u : static_cast<unsigned>(coeffs_.size() - 1);
}

const ParamPoly& UPoly::coeff(unsigned i) const {
  static const ParamPoly zero;
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

const ParamPoly& UPoly::leading() const { return coeff(degree()); }

bool UPoly::has_constant_coefficients() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ParamPoly& c) { return c.is_constant(); });
}

std::vector<Rat> UPoly::rational_coefficients() const {
  std::vector<Rat> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.constant_value());
  return out;
}

UPoly UPoly::shifted(const Rat& s) const {
  if (s.is_zero() || coeffs_.size() <= 1) return *this;
  const std::size_t n = coeffs_.size();
  std::vector<ParamPoly> out(n);
  std::vector<Rat> spow(n, Rat(1));
  for (std::size_t i = 1; i < n; ++i) spow[i] = spow[i - 1] * s;
  for (std::size_t d = 0; d < n; ++d) {
    if (coeffs_[d].is_zero()) continue;
    for (std::size_t i = 0; i <= d; ++i) {
      out[i] += coeffs_[d] * (Rat(binomial(d, i)) * spow[d - i]);
    }
  }
  return UPoly(std::move(out));
}

UPoly UPoly::scaled_argument(const Rat& lambda) const {
  std::vector<ParamPoly> out = coeffs_;
  Rat f = 1;
  for (auto& c : out) {
    c *= f;
    f *= lambda;
  }
  return UPoly(std::move(out));
}

ParamPoly UPoly::evaluate_at(const ParamPoly& value) const {
  ParamPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * value + *it;
  return acc;
}

UPoly UPoly::map_coefficients(const std::function<ParamPoly(const ParamPoly&)>& fn) const {
  std::vector<ParamPoly> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(fn(c));
  return UPoly(std::move(out));
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const ParamPoly& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

UPoly operator-(const UPoly& a) {
  UPoly out = a;
  for (auto& v : out.coeffs_) v = -v;
  return out;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ParamPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(out));
}

namespace {

std::string power_text(std::string_view var, std::size_t d) {
  if (d == 0) return "";
  std::string s(var);
  if (d > 1) s += "^" + std::to_string(d);
  return s;
}

std::string power_latex(std::string_view var, std::size_t d) {
  if (d == 0) return "";
  std::string s(var);
  if (d > 1) s = "(" + s + ")^{" + std::to_string(d) + "}";
  return s;
}

} // namespace

std::string UPoly::str(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t d = coeffs_.size(); d-- > 0;) {
    const ParamPoly& c = coeffs_[d];
    if (c.is_zero()) continue;
    const bool neg = c.reads_negative();
    const ParamPoly mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (d == 0) {
      out += mag.str();
    } else if (mag == ParamPoly(1)) {
      out += power_text(var, d);
    } else {
      out += (mag.is_sum() ? "(" + mag.str() + ")" : mag.str()) + "*" + power_text(var, d);
    }
  }
  return out;
}

std::string UPoly::latex(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t d = coeffs_.size(); d-- > 0;) {
    const ParamPoly& c = coeffs_[d];
    if (c.is_zero()) continue;
    const bool neg = c.reads_negative();
    const ParamPoly mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string coeff_tex = mag.is_sum() ? "\\left(" + mag.latex() + "\\right)" : mag.latex();
    if (d == 0) {
      out += mag.latex();
    } else if (mag == ParamPoly(1)) {
      out += power_latex(var, d);
    } else {
      out += coeff_tex + " " + power_latex(var, d);
    }
  }
  return out;
}

} // namespace qdulac
