#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "equichroma/rational.hpp"

using equichroma::BigInt;
using equichroma::Rational;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(BigInt(6), BigInt(4)).num() == 3);
    CHECK(Rational(BigInt(6), BigInt(4)).den() == 2);
    CHECK(Rational(BigInt(-6), BigInt(4)).to_string() == "-3/2");
    CHECK(Rational(BigInt(6), BigInt(-4)).to_string() == "-3/2");
    CHECK(Rational(BigInt(-6), BigInt(-4)).to_string() == "3/2");
    CHECK(Rational(BigInt(0), BigInt(7)).den() == 1);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("arithmetic identities on pseudorandom fractions") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long long> num(-60, 60);
    std::uniform_int_distribution<long long> den(1, 60);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational a(BigInt(num(rng)), BigInt(den(rng)));
        const Rational b(BigInt(num(rng)), BigInt(den(rng)));
        CHECK(a + b == b + a);
        CHECK((a + b) - b == a);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        // reduced invariant
        const Rational s = a + b;
        CHECK(boost::multiprecision::gcd(s.num() < 0 ? BigInt(-s.num()) : s.num(), s.den()) <= 1);
        CHECK(s.den() >= 1);
        // ordering agrees with the sign of the difference
        CHECK((a < b) == (a - b).is_negative());
    }
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(2, 1) > Rational(7, 4));
    CHECK(Rational(5, 10) == Rational(1, 2));
}

TEST_CASE("string rendering") {
    CHECK(Rational(7, 3).to_string() == "7/3");
    CHECK(Rational(2).to_string() == "2");
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational(-3, 2).to_string() == "-3/2");
}

TEST_CASE("decimal rendering, six significant digits") {
    CHECK(Rational(25, 9).to_decimal() == "2.77778");
    CHECK(Rational(2).to_decimal() == "2.00000");
    CHECK(Rational(2, 3).to_decimal() == "0.666667");
    CHECK(Rational(140, 81).to_decimal() == "1.72840");
    CHECK(Rational(93, 40).to_decimal() == "2.32500");
    CHECK(Rational(-1, 8).to_decimal() == "-0.125000");
    CHECK(Rational(0).to_decimal() == "0");
    CHECK(Rational(1000000).to_decimal() == "1000000");
    CHECK(Rational(1, 100000).to_decimal() == "0.0000100000");
}

TEST_CASE("decimal rendering falls back to exponent form far from 1") {
    CHECK(Rational(BigInt("1000000000000000"), BigInt(1)).to_decimal() == "1.00000e15");
    CHECK(Rational(BigInt(1), BigInt(1000000)).to_decimal() == "1.00000e-6");
}

TEST_CASE("huge values stay exact") {
    const BigInt huge("123456789012345678901234567890");
    const Rational r(huge * 2, BigInt(4));
    CHECK(r == Rational(huge, BigInt(2)));
    CHECK((r - r).is_zero());
    CHECK((r * Rational(0)).to_string() == "0");
}
