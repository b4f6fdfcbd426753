#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "charlab/rational.hpp"

using charlab::Rational;

TEST_CASE("construction and canonical rendering") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-6, 4).str() == "-3/2");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(7).str() == "7");
  CHECK_THROWS_AS(Rational(1, 0), charlab::Error);
}

TEST_CASE("parse round-trips and rejects garbage") {
  for (const char* s : {"0", "1", "-1", "3/2", "-3/2", "123456789012345678901/7"}) {
    CHECK(Rational::parse(s).str() == s);
  }
  CHECK(Rational::parse("4/8").str() == "1/2");
  CHECK_THROWS_AS(Rational::parse("1/"), charlab::ParseError);
  CHECK_THROWS_AS(Rational::parse("a"), charlab::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), charlab::ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), charlab::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/2x"), charlab::ParseError);
}

TEST_CASE("field arithmetic agrees with machine arithmetic on small values") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  for (int i = 0; i < 2000; ++i) {
    long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    Rational x(a, b), y(c, d);
    // cross-check via common denominator
    CHECK(x + y == Rational(a * d + c * b, b * d));
    CHECK(x - y == Rational(a * d - c * b, b * d));
    CHECK(x * y == Rational(a * c, b * d));
    if (c != 0) CHECK(x / y == Rational(a * d, b * c));
    CHECK((x < y) == (a * d < c * b));
  }
}

TEST_CASE("integer detection") {
  CHECK(Rational(4, 2).is_integer());
  CHECK(Rational(4, 2).to_long() == 2);
  CHECK(!Rational(1, 2).is_integer());
  CHECK_THROWS_AS(Rational(1, 2).to_long(), charlab::Error);
}
