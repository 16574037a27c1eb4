#include <catch2/catch_amalgamated.hpp>

#include "segrehilb/rational.hpp"

using namespace segrehilb;

TEST_CASE("rational normalization and arithmetic") {
    Rational r(Int(6), Int(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(Int(0), Int(7)) == Rational(0));
    CHECK(Rational(Int(1), Int(3)) + Rational(Int(1), Int(6)) == Rational(Int(1), Int(2)));
    CHECK(Rational(Int(2), Int(3)) * Rational(Int(3), Int(4)) == Rational(Int(1), Int(2)));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("rational serialization round trip") {
    CHECK(Rational(Int(-3), Int(7)).str() == "-3/7");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational::parse("-3/7") == Rational(Int(-3), Int(7)));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse(Rational(Int(22), Int(-8)).str()) == Rational(Int(-11), Int(4)));
}

TEST_CASE("binom_int conventions") {
    CHECK(binom_int(0, 0) == 1);
    CHECK(binom_int(3, 5) == 0);        // 0 <= a < b
    CHECK(binom_int(7, -2) == 0);       // b < 0
    CHECK(binom_int(-2, 3) == -4);      // (-2)(-3)(-4)/3!
    CHECK(binom_int(5, 2) == 10);
    CHECK(binom_int(5, 0) == 1);
    CHECK(binom_int(-1, 4) == 1);       // (-1)^b pattern
}

TEST_CASE("binom_int Pascal identity on the extended domain") {
    for (long a = -15; a <= 15; ++a)
        for (long b = 1; b <= 12; ++b)
            CHECK(binom_int(a, b) == binom_int(a - 1, b) + binom_int(a - 1, b - 1));
}

TEST_CASE("binom_int sign rule for negative upper index") {
    for (long a = -12; a < 0; ++a)
        for (long b = 0; b <= 10; ++b) {
            Int expect = binom_int(-a + b - 1, b);
            if (b % 2 == 1) expect = -expect;
            CHECK(binom_int(a, b) == expect);
        }
    // The specialization binom(-j, 2k-j) = (-1)^j binom(2k-1, j-1).
    for (long j = 1; j <= 8; ++j)
        for (long k = 1; k <= 8; ++k) {
            Int rhs = binom_int(2 * k - 1, j - 1);
            if (j % 2 == 1) rhs = -rhs;
            CHECK(binom_int(-j, 2 * k - j) == rhs);
        }
}

TEST_CASE("binom_rat values and agreement with binom_int") {
    CHECK(binom_rat(Rational(Int(1), Int(2)), 2) == Rational(Int(-1), Int(8)));
    CHECK(binom_rat(Rational(Int(123), Int(7)), 0) == Rational(1));
    CHECK(binom_rat(Rational(5), 2) == Rational(10));
    for (long a = -10; a <= 10; ++a)
        for (long b = -2; b <= 8; ++b)
            CHECK(binom_rat(Rational(a), b) == Rational(binom_int(a, b)));
}
