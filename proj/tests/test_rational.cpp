#include <doctest.h>

#include "cva/rational.hpp"

using namespace cva;

TEST_CASE("make_rational reduces to lowest terms") {
    CHECK(make_rational(2, 4).str() == "1/2");
    CHECK(make_rational(0, 5).str() == "0");
    CHECK(make_rational(0, 5).den() == 1);
    CHECK(make_rational(-3, -6).str() == "1/2");
    CHECK(make_rational(3, -6).str() == "-1/2");
    CHECK(make_rational(3, -6).den() == 2);
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(5).inverse() * Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("exact arithmetic") {
    Rational a(1, 3), b(1, 6);
    CHECK((a + b).str() == "1/2");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/18");
    CHECK((a / b).str() == "2");
    CHECK((-a).str() == "-1/3");
    CHECK(a.pow(3).str() == "1/27");
    CHECK(Rational(-2, 3).abs().str() == "2/3");
    CHECK(Rational(7, 2) > Rational(3));
}

TEST_CASE("parsing round trip") {
    for (const char* s : {"0", "7", "-3", "1/2", "-22/7"}) {
        CHECK(Rational::parse(s).str() == s);
    }
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
}
