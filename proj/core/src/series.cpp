#include "qdulac/series.hpp"

#include "qdulac/error.hpp"

namespace qdulac {

PowerLogSeries::PowerLogSeries(Rat q, std::optional<BaseTerm> base)
    : q_(std::move(q)), base_(std::move(base)) {
  check_q(q_);
  if (base_ && base_->c.is_zero()) base_.reset();
}

UPoly PowerLogSeries::coefficient(const Rat& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? UPoly{} : it->second;
}

void PowerLogSeries::add(const Rat& k, const UPoly& beta) {
  if (beta.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, beta);
  if (!inserted) {
    it->second += beta;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::map<Rat, UPoly> PowerLogSeries::flattened() const {
  std::map<Rat, UPoly> out = terms_;
  if (base_) {
    UPoly& slot = out[base_->r];
    slot += UPoly(base_->c);
    if (slot.is_zero()) out.erase(base_->r);
  }
  return out;
}

std::optional<Rat> PowerLogSeries::min_exponent() const {
  const auto flat = flattened();
  if (flat.empty()) return std::nullopt;
  return flat.begin()->first;
}

PowerLogSeries PowerLogSeries::map_coefficients(const std::function<ParamPoly(const ParamPoly&)>& fn) const {
  PowerLogSeries out(q_);
  if (base_) out.base_ = BaseTerm{fn(base_->c), base_->r};
  if (out.base_ && out.base_->c.is_zero()) out.base_.reset();
  for (const auto& [k, beta] : terms_) out.add(k, beta.map_coefficients(fn));
  return out;
}

namespace {

std::string x_factor(const Rat& k) {
  if (k.is_zero()) return "";
  if (k.is_one()) return "x";
  if (k.is_integer()) return "x^" + k.str();
  return "x^(" + k.str() + ")";
}

} // namespace

std::string PowerLogSeries::str(const std::string& t_name) const {
  std::string out;
  auto append = [&](const Rat& k, const UPoly& beta) {
    std::string coeff = beta.str(t_name);
    const std::string xf = x_factor(k);
    bool neg = false;
    if (beta.coefficients().size() == 1 && beta.coeff(0).reads_negative()) {
      neg = true;
      coeff = (-beta).str(t_name);
    }
    const bool compound = beta.coefficients().size() > 1 || (neg ? -beta.coeff(0) : beta.coeff(0)).is_sum();
    std::string body;
    if (xf.empty()) {
      body = coeff;
    } else if (!compound && coeff == "1") {
      body = xf;
    } else {
      body = (compound ? "(" + coeff + ")" : coeff) + "*" + xf;
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  };
  for (const auto& [k, beta] : flattened()) append(k, beta);
  return out.empty() ? "0" : out;
}

namespace {

using Terms = std::map<Rat, UPoly>;

Terms mul_truncated(const Terms& a, const Terms& b, const Rat& cutoff) {
  Terms out;
  for (const auto& [ka, pa] : a) {
    for (const auto& [kb, pb] : b) {
      const Rat k = ka + kb;
      if (k > cutoff) break;
      UPoly& slot = out[k];
      slot += pa * pb;
      if (slot.is_zero()) out.erase(k);
    }
  }
  return out;
}

Terms truncate(const Terms& a, const Rat& cutoff) {
  Terms out;
  for (const auto& [k, p] : a) {
    if (k > cutoff) break;
    out.emplace(k, p);
  }
  return out;
}

} // namespace

PowerLogSeries evaluate_on_series(const QPolynomial& f, const PowerLogSeries& s, const Rat& k_max) {
  const Rat& q = s.q();
  const Terms flat = s.flattened();
  PowerLogSeries result(q);

  // sigma^l applied to the series, computed lazily per level.
  std::map<unsigned, Terms> shifted;
  auto shifted_series = [&](unsigned level) -> const Terms& {
    auto it = shifted.find(level);
    if (it != shifted.end()) return it->second;
    Terms t;
    for (const auto& [k, beta] : flat) {
      UPoly img = beta.shifted(Rat(level));
      img *= ParamPoly(q_pow(q, Rat(level) * k));
      t.emplace(k, std::move(img));
    }
    return shifted.emplace(level, std::move(t)).first->second;
  };

  const Rat lowest = flat.empty() ? Rat(0) : flat.begin()->first;

  for (const auto& term : f.terms()) {
    const Rat budget = k_max - term.x_exp;
    unsigned remaining = term.sigma.degree();
    if (remaining > 0 && flat.empty()) continue;
    // Every remaining factor contributes at least `lowest`.
    auto cutoff = [&](unsigned rem) { return budget - Rat(rem) * lowest; };
    if (remaining == 0 && term.x_exp > k_max) continue;

    Terms prod{{Rat(0), UPoly(term.coeff)}};
    for (const auto& fac : term.sigma.factors()) {
      const Terms& base = shifted_series(fac.level);
      for (unsigned i = 0; i < fac.power; ++i) {
        --remaining;
        prod = mul_truncated(prod, truncate(base, cutoff(remaining) - (prod.empty() ? Rat(0) : prod.begin()->first)),
                             cutoff(remaining));
        if (prod.empty()) break;
      }
      if (prod.empty()) break;
    }
    for (const auto& [k, beta] : prod) {
      const Rat e = k + term.x_exp;
      if (e <= k_max) result.add(e, beta);
    }
  }
  return result;
}

} // namespace qdulac
