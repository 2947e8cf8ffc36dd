#include <doctest.h>

#include "tangokv/rational.hpp"

using namespace tangokv;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rat(6, 3) == Rat(2));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(-4, -6) == Rat(2, 3));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(2, 3).str() == "2/3");
    CHECK(Rat(-5).str() == "-5");
}

TEST_CASE("rational arithmetic and comparisons") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
    CHECK(Rat(7, 3) / Rat(7, 3) == Rat(1));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(0));
    CHECK_THROWS_AS(Rat(1) / Rat(0), ArithmeticOverflow);
    CHECK_THROWS_AS(Rat(1, 0), ArithmeticOverflow);
}

TEST_CASE("floor is toward negative infinity") {
    CHECK(Rat(7, 3).floor() == 2);
    CHECK(Rat(-1, 2).floor() == -1);
    CHECK(Rat(-2, 2).floor() == -1);
    CHECK(Rat(-2, 5).floor() == -1);
    CHECK(Rat(6, 3).floor() == 2);
    CHECK(Rat(5, 6).ceil() == 1);
    CHECK(Rat(-5, 6).frac() == Rat(1, 6));
}

TEST_CASE("overflow is an error, never a wrap") {
    Rat big(1LL << 62);
    CHECK_THROWS_AS(big * big, ArithmeticOverflow);
}

TEST_CASE("parsing") {
    CHECK(Rat::parse("2/3") == Rat(2, 3));
    CHECK(Rat::parse("-7") == Rat(-7));
    CHECK_THROWS_AS(Rat::parse("abc"), ParseError);
}
