#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <stdexcept>

#include "harmonic/rational.hpp"

using harmonic::Rational;

TEST_CASE("construction and canonical form") {
    CHECK(Rational().is_zero());
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(2, 1).str() == "2");
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(-3, -6).str() == "1/2");
    CHECK(Rational(0, 7).is_zero());
    CHECK(Rational("7/3") == Rational(7, 3));
    CHECK(Rational("-7/3") == Rational(-7, 3));
    CHECK(Rational("5") == Rational(5));
    CHECK(Rational(12345678901234567LL).str() == "12345678901234567");
    CHECK(Rational(18446744073709551615ULL).str() == "18446744073709551615");
    CHECK_THROWS_AS(Rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational("1/0"), std::invalid_argument);
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(3, 4) / Rational(3, 4) == Rational(1));
    CHECK(-Rational(2, 5) == Rational(-2, 5));
    Rational a(1, 7);
    a += Rational(2, 7);
    a *= Rational(7, 3);
    CHECK(a == Rational(1));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(5, 3) > Rational(3, 2));
    CHECK(Rational(1, 3) <= Rational(1, 3));
    CHECK(Rational(1, 3) >= Rational(1, 3));
    CHECK(Rational(1, 3) != Rational(1, 4));
}

TEST_CASE("powers and binomials") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-2).pow(3) == Rational(-8));
    CHECK(Rational::pow2(4) == Rational(16));
    CHECK(Rational::pow2(-3) == Rational(1, 8));
    CHECK(Rational::binomial(10, 3) == Rational(120));
    CHECK(Rational::binomial(0, 0) == Rational(1));
    CHECK(Rational::binomial(5, 7) == Rational(0));
}

TEST_CASE("helpers") {
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
    CHECK(Rational(-3, 4).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(9, 3).is_integer());
    CHECK(!Rational(1, 3).is_integer());
    CHECK(Rational(2, 5).reciprocal() == Rational(5, 2));
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
    CHECK(Rational(22, 7).numerator_str() == "22");
    CHECK(Rational(22, 7).denominator_str() == "7");
    std::ostringstream os;
    os << Rational(-5, 9);
    CHECK(os.str() == "-5/9");
}

TEST_CASE("ceil_log2_abs gives the smallest s with |x| <= 2^s") {
    CHECK(Rational(8).ceil_log2_abs() == 3);
    CHECK(Rational(9).ceil_log2_abs() == 4);
    CHECK(Rational(1).ceil_log2_abs() == 0);
    CHECK(Rational(1, 8).ceil_log2_abs() == -3);
    CHECK(Rational(3, 8).ceil_log2_abs() == -1);
    CHECK(Rational(-5, 2).ceil_log2_abs() == 2);
    CHECK(Rational(1, 3).ceil_log2_abs() == -1);
}
