#include <doctest.h>

#include "oscount/error.hpp"
#include "oscount/rational.hpp"

using namespace oscount;

TEST_CASE("rational strings")
{
    CHECK(to_string(Rational(27)) == "27");
    CHECK(to_string(Rational(1, 4)) == "1/4");
    Rational half(-3, 6);
    half.canonicalize();
    CHECK(to_string(half * 2) == "-1");
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK(to_string(parse_rational("6/8")) == "3/4");
    CHECK(parse_rational("-12") == Rational(-12));
    CHECK(parse_rational("0/5") == 0);
}

TEST_CASE("malformed rationals are rejected")
{
    for (const char* bad : {"", "/", "1/", "/2", "1/0", "1.5", "a", "1/-2", "--1", "1 /2"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_rational(bad), Error);
    }
}

TEST_CASE("factorial and bit length")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(bit_length(Rational(0)) == 1);  // denominator 1
    CHECK(bit_length(Rational(1, 256)) == 9);
    CHECK(bit_length(Rational(255)) == 8);
}
