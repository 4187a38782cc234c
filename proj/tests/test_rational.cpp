#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fracbound/errors.hpp"
#include "fracbound/rational.hpp"

using namespace fracbound;

TEST_CASE("parse_rational accepts fractions, integers, decimals") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("  7 ") == Rational(7));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5") == Rational(-3, 2));
  CHECK(parse_rational("2.") == Rational(2));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), parse_error);
  CHECK_THROWS_AS(parse_rational("abc"), parse_error);
  CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), parse_error);
  CHECK_THROWS_AS(parse_rational("1.2.3"), parse_error);
}

TEST_CASE("rational_to_string cancels and omits unit denominators") {
  CHECK(rational_to_string(Rational(6, 8)) == "3/4");
  CHECK(rational_to_string(Rational(8, 4)) == "2");
  CHECK(rational_to_string(Rational(0)) == "0");
  CHECK(rational_to_string(Rational(-5, 10)) == "-1/2");
}

TEST_CASE("binomial matches Pascal identities") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(4, 7) == 0);
  for (int n = 1; n < 12; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("to_double is exact on dyadics") {
  CHECK(to_double(Rational(3, 8)) == 0.375);
  CHECK(to_double(Rational(-7, 2)) == -3.5);
}

TEST_CASE("rational_sum adds exactly") {
  std::vector<Rational> v{Rational(1, 3), Rational(1, 6), Rational(1, 2)};
  CHECK(rational_sum(v) == Rational(1));
}
