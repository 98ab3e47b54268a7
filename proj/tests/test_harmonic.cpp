#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "harmonic/harmonic_number.hpp"
#include "harmonic/rational.hpp"

using harmonic::harmonic_number;
using harmonic::Rational;
using harmonic::reciprocal_shift_sum;
using harmonic::reciprocal_square_shift_sum;

TEST_CASE("small harmonic numbers") {
    CHECK(harmonic_number(0) == Rational(0));
    CHECK(harmonic_number(1) == Rational(1));
    CHECK(harmonic_number(2) == Rational(3, 2));
    CHECK(harmonic_number(4) == Rational(25, 12));
    CHECK(harmonic_number(8) == Rational(761, 280));
    CHECK(harmonic_number(10) == Rational(7381, 2520));
}

TEST_CASE("divide-and-conquer sum matches the naive loop") {
    Rational h;
    for (unsigned long long j = 1; j <= 100; ++j) h += Rational(j).reciprocal();
    CHECK(harmonic_number(100) == h);
}

TEST_CASE("shifted reciprocal sums") {
    CHECK(reciprocal_shift_sum(Rational(), 1, 10) == harmonic_number(10));
    CHECK(reciprocal_shift_sum(Rational(1, 2), 1, 2) == Rational(16, 15));
    CHECK(reciprocal_shift_sum(Rational(5), 3, 2) == Rational(0));
    CHECK(reciprocal_square_shift_sum(Rational(), 1, 3) == Rational(49, 36));
    CHECK(reciprocal_square_shift_sum(Rational(1, 2), 1, 1) == Rational(4, 9));
    CHECK(harmonic_number(16) ==
          harmonic_number(8) + reciprocal_shift_sum(Rational(), 9, 16));
}
