#include "doctest.h"
#include "eulersum/rational.hpp"

using eulersum::Rational;

TEST_CASE("rationals are stored reduced with a positive denominator") {
    const Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(-3, 2).str() == "-3/2");
    CHECK(Rational(10, 5).str() == "2");
}

TEST_CASE("parse accepts integers and fractions") {
    CHECK(Rational::parse("-4/9") == Rational(-4, 9));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("arithmetic and ordering") {
    const Rational a(1, 6);
    const Rational b(-1, 2);
    CHECK(a + b == Rational(-1, 3));
    CHECK(a * b == Rational(-1, 12));
    CHECK(a / b == Rational(-1, 3));
    CHECK(b < a);
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK_THROWS(a / Rational(0));
    CHECK(Rational(-5, 3).abs() == Rational(5, 3));
}

TEST_CASE("binomial with negative upper argument") {
    CHECK(eulersum::binomial(5, 2) == Rational(10));
    CHECK(eulersum::binomial(-2, 3) == Rational(-4));  // (-2)(-3)(-4)/6
    CHECK(eulersum::binomial(-1, 4) == Rational(1));
    CHECK(eulersum::binomial(3, 0) == Rational(1));
}
