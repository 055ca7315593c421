#include "qdulac/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "qdulac/error.hpp"

namespace qdulac {

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) {
    throw Error(Errc::invalid_argument, "rational with zero denominator");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool parse_integer(std::string_view s, mpz_class& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

} // namespace

Rat Rat::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  mpz_class num;
  mpz_class den{1};
  const bool ok = slash == std::string_view::npos
                      ? parse_integer(s, num)
                      : parse_integer(trim(s.substr(0, slash)), num) &&
                            parse_integer(trim(s.substr(slash + 1)), den);
  if (!ok) {
    throw Error(Errc::invalid_argument, "not a rational number: '" + std::string(text) + "'");
  }
  return Rat(num, den);
}

Rat Rat::inverse() const {
  if (is_zero()) throw Error(Errc::invalid_argument, "division by zero");
  return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(Errc::invalid_argument, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class n;
  mpz_class d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(n, d);
}

mpz_class Rat::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

mpz_class Rat::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }
Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace {

mpz_class pollard_brent(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2;
    mpz_class x;
    mpz_class ys;
    mpz_class g = 1;
    mpz_class acc = 1;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto step = [&](const mpz_class& v) {
      mpz_class t = v * v + c;
      return mpz_class(t % n);
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          acc = (acc * abs(mpz_class(x - y))) % n;
        }
        mpz_gcd(g.get_mpz_t(), acc.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        mpz_class diff = abs(mpz_class(x - ys));
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(mpz_class n, std::vector<mpz_class>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    primes.push_back(n);
    return;
  }
  const mpz_class d = pollard_brent(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

} // namespace

std::vector<std::pair<mpz_class, unsigned long>> factorize(const mpz_class& n) {
  if (n <= 0) throw Error(Errc::invalid_argument, "factorize expects a positive integer");
  std::vector<mpz_class> primes;
  mpz_class rest = n;
  for (unsigned long p = 2; p < 10000 && rest > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      primes.emplace_back(p);
      rest /= p;
    }
    if (mpz_class(p) * p > rest) {
      if (rest > 1) primes.push_back(rest);
      rest = 1;
    }
  }
  factor_into(rest, primes);
  std::sort(primes.begin(), primes.end());

  std::vector<std::pair<mpz_class, unsigned long>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    mpz_class pk = 1;
    for (unsigned long i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_q(const Rat& q) {
  if (q.sign() <= 0 || q.is_one()) {
    throw Error(Errc::invalid_q, "q must be a positive rational different from 1, got " + q.str());
  }
}

namespace {

// Exact m-th root of a nonnegative integer, if it exists.
std::optional<mpz_class> exact_root(const mpz_class& n, unsigned long m) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), m) == 0) return std::nullopt;
  return r;
}

std::optional<Rat> try_q_pow(const Rat& q, const Rat& k) {
  if (q.sign() <= 0) throw Error(Errc::invalid_q, "q must be positive, got " + q.str());
  if (k.is_zero()) return Rat(1);
  const mpz_class m = k.den();
  if (!m.fits_ulong_p()) return std::nullopt;
  auto num_root = exact_root(q.num(), m.get_ui());
  auto den_root = exact_root(q.den(), m.get_ui());
  if (!num_root || !den_root) return std::nullopt;
  const mpz_class p = k.num();
  if (!p.fits_slong_p()) {
    throw Error(Errc::invalid_argument, "exponent too large: " + k.str());
  }
  return Rat(*num_root, *den_root).pow(p.get_si());
}

} // namespace

Rat q_pow(const Rat& q, const Rat& k) {
  auto v = try_q_pow(q, k);
  if (!v) {
    throw Error(Errc::irrational_power,
                "irrational q-power: (" + q.str() + ")^(" + k.str() + ") is not rational");
  }
  return *v;
}

bool q_pow_is_rational(const Rat& q, const Rat& k) { return try_q_pow(q, k).has_value(); }

std::optional<Rat> q_log(const Rat& q, const Rat& w) {
  check_q(q);
  if (w.sign() <= 0) return std::nullopt;
  if (w.is_one()) return Rat(0);

  // Signed prime exponent vectors of q and w.
  auto exponents = [](const Rat& v) {
    std::vector<std::pair<mpz_class, long>> out;
    for (const auto& [p, e] : factorize(v.num())) out.emplace_back(p, static_cast<long>(e));
    for (const auto& [p, e] : factorize(v.den())) out.emplace_back(p, -static_cast<long>(e));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  };
  const auto eq = exponents(q);
  const auto ew = exponents(w);
  if (eq.size() != ew.size()) return std::nullopt;

  std::optional<Rat> ratio;
  for (std::size_t i = 0; i < eq.size(); ++i) {
    if (eq[i].first != ew[i].first) return std::nullopt;
    const Rat k(mpz_class(ew[i].second), mpz_class(eq[i].second));
    if (ratio && *ratio != k) return std::nullopt;
    ratio = k;
  }
  return ratio;
}

} // namespace qdulac
