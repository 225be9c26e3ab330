#include <doctest.h>

#include "tough/error.hpp"
#include "tough/rational.hpp"

using tough::Error;
using tough::Rational;

TEST_CASE("rationals normalise and print as p/q") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(4).str() == "4/1");
  CHECK(Rational(0, 7).str() == "0/1");
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("parse accepts p/q and integers, rejects floats") {
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("2") == Rational(2));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("a/b"), Error);
}

TEST_CASE("arithmetic and ordering are exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(b < a);
  CHECK(Rational(2, 3) > Rational(3, 5));
  CHECK(Rational(4, 3) == Rational(8, 6));
}

TEST_CASE("floor and ceil round toward the right infinity") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(6, 3).ceil() == 2);
}

TEST_CASE("overflow is reported, not wrapped") {
  Rational big(INT64_MAX);
  CHECK_THROWS_AS(big * Rational(2), Error);
}
