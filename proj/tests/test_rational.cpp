#include <doctest.h>

#include "cfl/error.hpp"
#include "cfl/rational.hpp"

using cfl::Rational;

TEST_CASE("decimals and fractions parse exactly") {
    CHECK(cfl::parse_rational("0.4") == Rational(2, 5));
    CHECK(cfl::parse_rational("1") == Rational(1));
    CHECK(cfl::parse_rational(".25") == Rational(1, 4));
    CHECK(cfl::parse_rational("1.") == Rational(1));
    CHECK(cfl::parse_rational("2/6") == Rational(1, 3));
    CHECK(cfl::parse_rational("-0.1") == Rational(-1, 10));
    CHECK(cfl::parse_rational("0.000001") == Rational(1, 1000000));
}

TEST_CASE("malformed numbers are syntax errors") {
    for (const char* bad : {"", ".", "1/0", "a", "1.2.3", "1/", "/2", "0x1", "1e3", "1 / 2"})
        CHECK_THROWS_AS(cfl::parse_rational(bad), cfl::SyntaxError);
}

TEST_CASE("exact formatting prints terminating decimals, else fractions") {
    CHECK(cfl::format_exact(Rational(19, 25)) == "0.76");
    CHECK(cfl::format_exact(Rational(1)) == "1");
    CHECK(cfl::format_exact(Rational(0)) == "0");
    CHECK(cfl::format_exact(Rational(1, 6)) == "1/6");
    CHECK(cfl::format_exact(Rational(1, 3)) == "1/3");
    CHECK(cfl::format_exact(Rational(1, 8)) == "0.125");
    CHECK(cfl::format_exact(Rational(3, 2)) == "1.5");
    CHECK(cfl::format_exact(Rational(-6, 25)) == "-0.24");
    CHECK(cfl::format_exact(Rational(-2)) == "-2");
    CHECK(cfl::format_exact(Rational(1, 1024)) == "0.0009765625");
}

TEST_CASE("weights live in [0, 1]") {
    CHECK_NOTHROW(cfl::Weight(Rational(0)));
    CHECK_NOTHROW(cfl::Weight(Rational(1)));
    CHECK_THROWS_AS(cfl::Weight(Rational(11, 10)), cfl::RangeError);
    CHECK_THROWS_AS(cfl::Weight(Rational(-1, 100)), cfl::RangeError);
    CHECK_THROWS_AS(cfl::Weight::parse("1.0001"), cfl::RangeError);
    CHECK(cfl::Weight::parse("0.4").complement() == cfl::Weight::parse("3/5"));
    CHECK(cfl::Weight::parse("0.3") < cfl::Weight::parse("1/3"));
}
