#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace rtd {

// Exact fraction, always kept in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long value) : v_(value) {}
  Rational(int value) : v_(static_cast<long>(value)) {}
  Rational(long num, long den);
  explicit Rational(const mpz_class &value) : v_(value) {}
  Rational(const mpz_class &num, const mpz_class &den);
  explicit Rational(mpq_class value);

  // Accepts "p", "p/q" and "-p/q". Throws std::invalid_argument on bad input
  // or a zero denominator.
  static Rational parse(std::string_view text);

  // Exact value of a finite double (every double is a dyadic rational).
  static Rational from_double(double value);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class &raw() const { return v_; }

  double to_double() const { return v_.get_d(); }
  long double to_long_double() const;
  std::string str() const { return v_.get_str(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }

  Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
  Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
  Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class v_;
};

Rational pow(const Rational &base, unsigned exponent);
Rational abs(const Rational &x);
mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);

// Largest-denominator-bounded best approximation of x (Stern-Brocot walk).
Rational best_rational_approximation(long double x, std::uint64_t max_denominator);

// Continued-fraction convergents of x with denominator <= max_denominator,
// in order of increasing denominator.
std::vector<Rational> convergents(long double x, std::uint64_t max_denominator);

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace rtd
