#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qdulac {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
public:
  Rat() = default;

  template <std::integral I>
  Rat(I value) : v_(static_cast<long>(value)) {} // NOLINT(google-explicit-constructor)

  explicit Rat(const mpz_class& integer) : v_(integer) {}
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(const mpq_class& value) : v_(value) { v_.canonicalize(); }

  /// Accepts "p", "-p" or "p/m" (m != 0). Surrounding whitespace is ignored.
  static Rat parse(std::string_view text);

  const mpq_class& value() const noexcept { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const noexcept { return sgn(v_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const noexcept { return v_.get_den() == 1; }
  bool is_one() const noexcept { return v_ == 1; }

  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  Rat inverse() const;
  Rat pow(long exponent) const;
  mpz_class floor() const;
  mpz_class ceil() const;
  double to_double() const { return v_.get_d(); }

  /// Reduced "p/m", or "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat max(const Rat& a, const Rat& b);
Rat min(const Rat& a, const Rat& b);

mpz_class lcm(const mpz_class& a, const mpz_class& b);
mpz_class binomial(unsigned long n, unsigned long k);

/// Prime factorization of n > 0 as ascending (prime, exponent) pairs; 1 has
/// no factors. Trial division, then Pollard-Brent on the cofactor.
std::vector<std::pair<mpz_class, unsigned long>> factorize(const mpz_class& n);

/// All positive divisors of n > 0, ascending.
std::vector<mpz_class> divisors(const mpz_class& n);

/// Throws Errc::invalid_q unless q > 0 and q != 1.
void check_q(const Rat& q);

/// Exact q^k. Throws Errc::irrational_power when q^k is not rational.
Rat q_pow(const Rat& q, const Rat& k);

/// True when q^k is rational.
bool q_pow_is_rational(const Rat& q, const Rat& k);

/// The unique rational k with q^k == w, if there is one.
std::optional<Rat> q_log(const Rat& q, const Rat& w);

} // namespace qdulac

