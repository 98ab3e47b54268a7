#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "harmonic/bernoulli.hpp"
#include "harmonic/rational.hpp"

using harmonic::bernoulli_at_half;
using harmonic::bernoulli_number;
using harmonic::Rational;

TEST_CASE("small Bernoulli numbers") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(3) == Rational(0));
    CHECK(bernoulli_number(4) == Rational(-1, 30));
    CHECK(bernoulli_number(5) == Rational(0));
    CHECK(bernoulli_number(6) == Rational(1, 42));
    CHECK(bernoulli_number(8) == Rational(-1, 30));
    CHECK(bernoulli_number(10) == Rational(5, 66));
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
}

TEST_CASE("larger Bernoulli numbers") {
    CHECK(bernoulli_number(14) == Rational(7, 6));
    CHECK(bernoulli_number(16) == Rational(-3617, 510));
    CHECK(bernoulli_number(18) == Rational(43867, 798));
    CHECK(bernoulli_number(20) == Rational(-174611, 330));
    CHECK(bernoulli_number(30) == Rational("8615841276005/14322"));
}

TEST_CASE("values at one half") {
    CHECK(bernoulli_at_half(0) == Rational(1));
    CHECK(bernoulli_at_half(2) == Rational(-1, 12));
    CHECK(bernoulli_at_half(4) == Rational(7, 240));
    CHECK(bernoulli_at_half(6) == Rational(-31, 1344));
    // B_k(1/2) = (2^(1-k) - 1) B_k, replayed against the plain numbers.
    for (unsigned k = 2; k <= 16; k += 2) {
        CHECK(bernoulli_at_half(k) == (Rational::pow2(1 - static_cast<long>(k)) - Rational(1)) *
                                          bernoulli_number(k));
    }
    CHECK_THROWS_AS(bernoulli_at_half(3), std::domain_error);
}

TEST_CASE("tangent-number sanity: signs alternate from k = 2") {
    for (unsigned k = 2; k <= 40; k += 2) {
        const int want = (k % 4 == 2) ? 1 : -1;
        CHECK(bernoulli_number(k).sign() == want);
    }
}
