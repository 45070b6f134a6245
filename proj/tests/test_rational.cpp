#include <doctest.h>

#include <sstream>

#include "rtd/rational.hpp"

using rtd::Rational;

TEST_CASE("rationals stay in lowest terms") {
  const Rational r(6, -8);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 4);
  CHECK(r.str() == "-3/4");
  CHECK(Rational(4, 2).str() == "2");
}

TEST_CASE("rational arithmetic is exact") {
  const Rational third(1, 3), sixth(1, 6);
  CHECK(third + sixth == Rational(1, 2));
  CHECK(third - sixth == sixth);
  CHECK(third * sixth == Rational(1, 18));
  CHECK(third / sixth == Rational(2));
  CHECK(Rational(1, 3) > Rational(3, 10));
  CHECK(-third == Rational(-1, 3));
  CHECK_THROWS_AS(third / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parsing") {
  CHECK(Rational::parse("5/6") == Rational(5, 6));
  CHECK(Rational::parse("-2/4") == Rational(-1, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  std::ostringstream os;
  os << Rational(9, 50);
  CHECK(os.str() == "9/50");
}

TEST_CASE("combinatorial helpers") {
  CHECK(rtd::factorial(0) == 1);
  CHECK(rtd::factorial(5) == 120);
  CHECK(rtd::binomial(5, 2) == 10);
  CHECK(rtd::binomial(3, 5) == 0);
  CHECK(rtd::pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(rtd::pow(Rational(0), 0) == Rational(1));
  CHECK(rtd::abs(Rational(-3, 7)) == Rational(3, 7));
}

TEST_CASE("doubles convert exactly and back") {
  CHECK(Rational::from_double(0.375) == Rational(3, 8));
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3));
  CHECK(Rational(2, 7).to_long_double() == doctest::Approx(2.0L / 7));
}

TEST_CASE("rational approximation") {
  CHECK(rtd::best_rational_approximation(2.0L / 7, 1000) == Rational(2, 7));
  CHECK(rtd::best_rational_approximation(3.14159265358979L, 100) == Rational(311, 99));
  const auto c = rtd::convergents(3.14159265358979L, 1000);
  REQUIRE(c.size() >= 3);
  CHECK(c[0] == Rational(3));
  CHECK(c[1] == Rational(22, 7));
  CHECK(c[2] == Rational(333, 106));
  for (const auto &x : c)
    CHECK(x.denominator() <= 1000);
}
