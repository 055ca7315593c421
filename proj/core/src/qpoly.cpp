#include "qdulac/qpoly.hpp"

#include <algorithm>

#include "qdulac/error.hpp"

namespace qdulac {

SigmaMonomial::SigmaMonomial(std::vector<SigmaFactor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& f : factors) {
    if (f.power == 0) continue;
    if (!factors_.empty() && factors_.back().level == f.level) {
      factors_.back().power += f.power;
    } else {
      factors_.push_back(f);
    }
  }
}

SigmaMonomial SigmaMonomial::shift(unsigned level, unsigned power) {
  return SigmaMonomial({SigmaFactor{level, power}});
}

unsigned SigmaMonomial::degree() const noexcept {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.power;
  return d;
}

unsigned SigmaMonomial::max_level() const noexcept {
  return factors_.empty() ? 0u : factors_.back().level;
}

unsigned SigmaMonomial::weighted_level() const noexcept {
  unsigned w = 0;
  for (const auto& f : factors_) w += f.level * f.power;
  return w;
}

SigmaMonomial operator*(const SigmaMonomial& a, const SigmaMonomial& b) {
  std::vector<SigmaFactor> all = a.factors_;
  all.insert(all.end(), b.factors_.begin(), b.factors_.end());
  return SigmaMonomial(std::move(all));
}

// Canonical order: ascending x power, then descending total degree, then the
// sigma factors themselves.
bool operator<(const QPolynomial::Key& a, const QPolynomial::Key& b) {
  if (a.x_exp != b.x_exp) return a.x_exp < b.x_exp;
  const unsigned da = a.sigma.degree();
  const unsigned db = b.sigma.degree();
  if (da != db) return da > db;
  return a.sigma > b.sigma;
}

QPolynomial QPolynomial::constant(const ParamPoly& c, std::string var) {
  QPolynomial p(std::move(var));
  p.add_term(Key{Rat(0), {}}, c);
  return p;
}

QPolynomial QPolynomial::x_power(const Rat& e, std::string var) {
  QPolynomial p(std::move(var));
  p.add_term(Key{e, {}}, ParamPoly(1));
  return p;
}

QPolynomial QPolynomial::shift(unsigned level, std::string var) {
  QPolynomial p(std::move(var));
  p.add_term(Key{Rat(0), SigmaMonomial::shift(level)}, ParamPoly(1));
  return p;
}

QPolynomial QPolynomial::from_terms(const std::vector<QTerm>& terms, std::string var) {
  QPolynomial p(std::move(var));
  for (const auto& t : terms) p.add_term(Key{t.x_exp, t.sigma}, t.coeff);
  return p;
}

QPolynomial QPolynomial::renamed(std::string var) const {
  QPolynomial p = *this;
  p.var_ = std::move(var);
  return p;
}

std::vector<QTerm> QPolynomial::terms() const {
  std::vector<QTerm> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.push_back(QTerm{c, k.x_exp, k.sigma});
  return out;
}

unsigned QPolynomial::order() const noexcept {
  unsigned n = 0;
  for (const auto& [k, c] : terms_) n = std::max(n, k.sigma.max_level());
  return n;
}

PointSet QPolynomial::support_points() const {
  PointSet s;
  for (const auto& [k, c] : terms_) s.insert(Point{k.x_exp, Rat(k.sigma.degree())});
  return s;
}

Rat QPolynomial::min_x_exp() const {
  if (terms_.empty()) throw Error(Errc::empty_support, "zero q-difference sum has no terms");
  Rat m = terms_.begin()->first.x_exp;
  for (const auto& [k, c] : terms_) m = min(m, k.x_exp);
  return m;
}

QPolynomial QPolynomial::restricted_to(const PointSet& points) const {
  QPolynomial p(var_);
  for (const auto& [k, c] : terms_) {
    if (points.contains(Point{k.x_exp, Rat(k.sigma.degree())})) p.terms_.emplace(k, c);
  }
  return p;
}

QPolynomial QPolynomial::unknown_free_part() const {
  QPolynomial p(var_);
  for (const auto& [k, c] : terms_) {
    if (k.sigma.is_one()) p.terms_.emplace(k, c);
  }
  return p;
}

QPolynomial QPolynomial::times_x_power(const Rat& e) const {
  QPolynomial p(var_);
  for (const auto& [k, c] : terms_) p.terms_.emplace(Key{k.x_exp + e, k.sigma}, c);
  return p;
}

QPolynomial QPolynomial::pow(unsigned e) const {
  QPolynomial result = constant(ParamPoly(1), var_);
  QPolynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

QPolynomial QPolynomial::map_coefficients(const std::function<ParamPoly(const ParamPoly&)>& fn) const {
  QPolynomial p(var_);
  for (const auto& [k, c] : terms_) p.add_term(k, fn(c));
  return p;
}

void QPolynomial::add_term(const Key& key, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

QPolynomial& QPolynomial::operator*=(const ParamPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

QPolynomial operator-(const QPolynomial& a) {
  QPolynomial p = a;
  for (auto& [k, v] : p.terms_) v = -v;
  return p;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial p(a.var_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      p.add_term(QPolynomial::Key{ka.x_exp + kb.x_exp, ka.sigma * kb.sigma}, ca * cb);
    }
  }
  return p;
}

namespace {

std::string shift_text(const std::string& var, const SigmaFactor& f) {
  std::string base;
  if (f.level == 0) {
    base = var;
  } else if (f.level == 1) {
    base = "S(" + var + ")";
  } else {
    base = "S^" + std::to_string(f.level) + "(" + var + ")";
  }
  if (f.power > 1) base += "^" + std::to_string(f.power);
  return base;
}

std::string shift_latex(const std::string& var, const SigmaFactor& f) {
  std::string base;
  if (f.level == 0) {
    base = var;
  } else if (f.level == 1) {
    base = "(\\sigma " + var + ")";
  } else {
    base = "(\\sigma^{" + std::to_string(f.level) + "} " + var + ")";
  }
  if (f.power > 1) base += "^{" + std::to_string(f.power) + "}";
  return base;
}

std::string x_text(const Rat& e) {
  if (e.is_zero()) return "";
  if (e.is_one()) return "x";
  if (e.is_integer()) return "x^" + e.str();
  return "x^(" + e.str() + ")";
}

} // namespace

std::string QPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    const bool neg = c.reads_negative();
    const ParamPoly mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::vector<std::string> factors;
    if (mag != ParamPoly(1)) factors.push_back(mag.is_sum() ? "(" + mag.str() + ")" : mag.str());
    if (const auto xs = x_text(k.x_exp); !xs.empty()) factors.push_back(xs);
    for (const auto& f : k.sigma.factors()) factors.push_back(shift_text(var_, f));
    if (factors.empty()) factors.emplace_back("1");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out += "*";
      out += factors[i];
    }
  }
  return out;
}

std::string QPolynomial::latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    const bool neg = c.reads_negative();
    const ParamPoly mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::vector<std::string> factors;
    if (mag != ParamPoly(1)) {
      factors.push_back(mag.is_sum() ? "\\left(" + mag.latex() + "\\right)" : mag.latex());
    }
    if (!k.x_exp.is_zero()) {
      factors.push_back(k.x_exp.is_one() ? std::string("x") : "x^{" + latex_rat(k.x_exp) + "}");
    }
    for (const auto& f : k.sigma.factors()) factors.push_back(shift_latex(var_, f));
    if (factors.empty()) factors.emplace_back("1");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out += " ";
      out += factors[i];
    }
  }
  return out;
}

PointSet support(const QPolynomial& f) {
  if (f.is_zero()) throw Error(Errc::empty_support, "the zero q-difference sum has empty support");
  return f.support_points();
}

QPolynomial substitute_shift(const QPolynomial& f, const ParamPoly& c, const Rat& r, const Rat& q,
                             const std::string& new_var) {
  check_q(q);
  const unsigned n = f.order();
  // sigma^l y -> c q^{lr} x^r + sigma^l z
  std::vector<QPolynomial> images;
  images.reserve(n + 1);
  for (unsigned l = 0; l <= n; ++l) {
    QPolynomial img = QPolynomial::shift(l, new_var);
    if (!c.is_zero()) {
      const Rat ql = q_pow(q, Rat(l) * r);
      img += QPolynomial::x_power(r, new_var) * (c * ql);
    }
    images.push_back(std::move(img));
  }

  QPolynomial out(new_var);
  for (const auto& term : f.terms()) {
    QPolynomial prod = QPolynomial::x_power(term.x_exp, new_var) * term.coeff;
    for (const auto& fac : term.sigma.factors()) prod = prod * images[fac.level].pow(fac.power);
    out += prod;
  }
  return out;
}

} // namespace qdulac
