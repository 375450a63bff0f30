#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <edcs/rational.hpp>

using namespace edcs;

TEST_CASE("basic arithmetic is exact") {
  Rational a = make_rational(1, 3);
  Rational b = make_rational(1, 6);
  CHECK(a + b == make_rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == make_rational(1, 18));
  CHECK(a / b == Rational(2));
}

TEST_CASE("parse and print round-trip") {
  CHECK(parse_rational("31/21") == make_rational(31, 21));
  CHECK(parse_rational("-5") == Rational(-5));
  CHECK(rational_to_string(make_rational(6, 4)) == "3/2");
  CHECK(rational_to_string(Rational(7)) == "7");
  CHECK(parse_rational(rational_to_string(make_rational(-91, 61))) ==
        make_rational(-91, 61));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("finite decimal detection") {
  CHECK(has_finite_decimal(make_rational(1, 2)));
  CHECK(has_finite_decimal(make_rational(3, 40)));
  CHECK(has_finite_decimal(Rational(5)));
  CHECK(!has_finite_decimal(make_rational(1, 3)));
  CHECK(!has_finite_decimal(make_rational(31, 21)));
}

TEST_CASE("decimal_string rounds half to even") {
  CHECK(decimal_string(make_rational(1, 2), 4) == "0.5000");
  CHECK(decimal_string(make_rational(2, 3), 4) == "0.6667");
  CHECK(decimal_string(make_rational(21, 31), 4) == "0.6774");
  CHECK(decimal_string(make_rational(61, 91), 4) == "0.6703");
  // ties: 0.00005 -> even digit 0, 0.00015 -> even digit 2
  CHECK(decimal_string(make_rational(5, 100000), 4) == "0.0000");
  CHECK(decimal_string(make_rational(15, 100000), 4) == "0.0002");
  CHECK(decimal_string(make_rational(-5, 100000), 4) == "0.0000");
}

TEST_CASE("decimal_string handles integers and negatives") {
  CHECK(decimal_string(Rational(2), 4) == "2.0000");
  CHECK(decimal_string(make_rational(-31, 21), 2) == "-1.48");
  CHECK(decimal_string(make_rational(1, 3), 0) == "0");
}

TEST_CASE("rational_to_double") {
  CHECK(rational_to_double(make_rational(1, 2)) == doctest::Approx(0.5));
  CHECK(rational_to_double(make_rational(21, 31)) ==
        doctest::Approx(0.677419354838));
}
