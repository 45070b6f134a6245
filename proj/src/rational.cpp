#include "rtd/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace rtd {

Rational::Rational(long num, long den) {
  if (den == 0)
    throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class &num, const mpz_class &den) {
  if (den == 0)
    throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
      s.remove_prefix(1);
    if (s.empty())
      return false;
    for (char c : s)
      if (c < '0' || c > '9')
        return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n.front() == '+')
    n.erase(0, 1);
  const mpz_class zn(n, 10);
  const mpz_class zd(std::string(den), 10);
  if (zd == 0)
    throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(zn, zd);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value))
    throw std::invalid_argument("non-finite double has no rational value");
  return Rational(mpq_class(value));
}

long double Rational::to_long_double() const {
  // Split into integer and fractional parts so that huge numerators and
  // denominators do not overflow a long double.
  mpz_class q = v_.get_num() / v_.get_den();
  mpq_class frac = v_ - mpq_class(q);
  mpz_class scaled = (frac.get_num() << 80) / frac.get_den();
  return static_cast<long double>(q.get_d()) + std::ldexp(static_cast<long double>(scaled.get_d()), -80);
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw std::domain_error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational pow(const Rational &base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

Rational abs(const Rational &x) { return x.sign() < 0 ? -x : x; }

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned n, unsigned k) {
  if (k > n)
    return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational best_rational_approximation(long double x, std::uint64_t max_denominator) {
  if (!std::isfinite(static_cast<double>(x)))
    throw std::invalid_argument("cannot approximate a non-finite value");
  const bool negative = x < 0;
  if (negative)
    x = -x;

  // Convergents h/k of the continued fraction, plus the best semiconvergent
  // once the denominator bound is reached.
  mpz_class h_prev = 1, k_prev = 0, h = static_cast<unsigned long>(std::floor(x)), k = 1;
  long double frac = x - std::floor(x);
  while (frac > 0) {
    const long double inv = 1.0L / frac;
    const long double a_ld = std::floor(inv);
    if (a_ld > 1e18L)
      break;
    const mpz_class a = static_cast<unsigned long>(a_ld);
    const mpz_class k_next = a * k + k_prev;
    if (k_next > max_denominator) {
      // Largest j with j*k + k_prev <= bound; accept it only if it is closer.
      const mpz_class j = (mpz_class(static_cast<unsigned long>(max_denominator)) - k_prev) / k;
      if (j > 0) {
        const mpz_class hs = j * h + h_prev, ks = j * k + k_prev;
        const long double semi = static_cast<long double>(mpq_class(hs, ks).get_d());
        const long double conv = static_cast<long double>(mpq_class(h, k).get_d());
        if (std::fabs(semi - x) < std::fabs(conv - x)) {
          h = hs;
          k = ks;
        }
      }
      break;
    }
    const mpz_class h_next = a * h + h_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    frac = inv - a_ld;
  }
  Rational r(h, k);
  return negative ? -r : r;
}

std::vector<Rational> convergents(long double x, std::uint64_t max_denominator) {
  std::vector<Rational> out;
  const bool negative = x < 0;
  if (negative)
    x = -x;
  mpz_class h_prev = 1, k_prev = 0, h = static_cast<unsigned long>(std::floor(x)), k = 1;
  out.emplace_back(h, k);
  long double frac = x - std::floor(x);
  while (frac > 0) {
    const long double inv = 1.0L / frac;
    const long double a_ld = std::floor(inv);
    if (a_ld > 1e18L)
      break;
    const mpz_class a = static_cast<unsigned long>(a_ld);
    const mpz_class k_next = a * k + k_prev;
    if (k_next > max_denominator)
      break;
    const mpz_class h_next = a * h + h_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    out.emplace_back(h, k);
    frac = inv - a_ld;
  }
  if (negative)
    for (auto &r : out)
      r = -r;
  return out;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

} // namespace rtd
