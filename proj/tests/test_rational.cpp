#include <doctest.h>

#include "lappell/errors.hpp"
#include "lappell/rational.hpp"

using namespace lappell;

TEST_SUITE_BEGIN("exactmath");

TEST_CASE("rationals are always reduced with positive denominator") {
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(-3, -9).str() == "1/3");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(0).numerator() == 0);
    CHECK(Rational(0).denominator() == 1);
    CHECK(Rational(5).str() == "5");
    CHECK_THROWS_AS(Rational(1, 0), domain_error);
}

TEST_CASE("string round trip uses the canonical p/q form") {
    for (const char* s : {"0", "5", "-7/2", "1/3", "-12345678901234567890/7"}) {
        CHECK(Rational::from_string(s).str() == s);
    }
    CHECK(Rational::from_string("4/6").str() == "2/3");
    CHECK_THROWS_AS(Rational::from_string("1/0"), parse_error);
    CHECK_THROWS_AS(Rational::from_string("1.5"), parse_error);
    CHECK_THROWS_AS(Rational::from_string("abc"), parse_error);
    CHECK_THROWS_AS(Rational::from_string("--2"), parse_error);
    CHECK_THROWS_AS(Rational::from_string("2/-3"), parse_error);
    CHECK_THROWS_AS(Rational::from_string(""), parse_error);
}

TEST_CASE("field arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), domain_error);
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(abs(Rational(-7, 2)) == Rational(7, 2));
    CHECK(Rational(-4).is_negative_integer());
    CHECK_FALSE(Rational(-4, 3).is_negative_integer());
    CHECK_FALSE(Rational(0).is_negative_integer());
}

TEST_SUITE_END();
