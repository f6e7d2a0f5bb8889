#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stabforge/rational.hpp"

using namespace stabforge;

TEST_CASE("make_rational reduces and fixes the sign of the denominator") {
  Rational q = make_rational(4, -6);
  CHECK(q.get_num() == -2);
  CHECK(q.get_den() == 3);
  CHECK(make_rational(0, 5) == 0);
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("rational round-trips through the string form") {
  for (const char* s : {"0", "1", "-1", "3/8", "-5/3", "22/7", "123456789/2"}) {
    Rational q = rational_from_string(s);
    CHECK(to_string(q) == s);
  }
  CHECK(rational_from_string("4/6") == make_rational(2, 3));
  CHECK_THROWS_AS(rational_from_string("1/"), ParseError);
  CHECK_THROWS_AS(rational_from_string("a"), ParseError);
  CHECK_THROWS_AS(rational_from_string("1/2 "), ParseError);
  CHECK_THROWS_AS(rational_from_string("1/-2"), ParseError);
}

TEST_CASE("arithmetic stays reduced") {
  Rational a = make_rational(1, 6);
  Rational b = make_rational(1, 3);
  Rational s = a + b;
  CHECK(s == make_rational(1, 2));
  CHECK(s.get_den() == 2);
  CHECK((a - a) == 0);
  CHECK(a * b == make_rational(1, 18));
  CHECK(a / b == make_rational(1, 2));
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK_THROWS_AS(factorial(-1), DomainError);
}
