#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <string>

#include "harmonic/bigfloat.hpp"
#include "harmonic/enclosure.hpp"
#include "harmonic/rational.hpp"

using harmonic::BigFloat;
using harmonic::Enclosure;
using harmonic::Rational;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    return Rational(num(rng), den(rng));
}

Rational random_nonzero(std::mt19937_64& rng) {
    Rational q;
    do {
        q = random_rational(rng);
    } while (q.is_zero());
    return q;
}

}  // namespace

TEST_CASE("construction from rationals") {
    // Dyadic rationals are exactly representable: zero width.
    CHECK(Enclosure::from_rational(Rational(3, 4), 64).width().is_zero());
    CHECK(Enclosure::from_rational(Rational(-5), 64).width().is_zero());
    const Enclosure third = Enclosure::from_rational(Rational(1, 3), 64);
    CHECK(third.contains(Rational(1, 3)));
    CHECK(third.width().sign() == 1);
    CHECK(third.width() < Rational::pow2(-60));

    const Enclosure box = Enclosure::from_rational_bounds(Rational(1, 3), Rational(1, 2), 64);
    CHECK(box.contains(Rational(1, 3)));
    CHECK(box.contains(Rational(5, 12)));
    CHECK(box.contains(Rational(1, 2)));
    CHECK(!box.contains(Rational(2, 3)));
    CHECK_THROWS_AS(Enclosure::from_rational_bounds(Rational(1), Rational(0), 64),
                    std::invalid_argument);
    CHECK_THROWS_AS(Enclosure(BigFloat(64), BigFloat(128)), std::logic_error);
}

TEST_CASE("sum product difference quotient stay outward") {
    std::mt19937_64 rng(20240817u);
    for (int i = 0; i < 50; ++i) {
        const Rational qa = random_rational(rng);
        const Rational qb = random_nonzero(rng);
        const Enclosure a = Enclosure::from_rational(qa, 64);
        const Enclosure b = Enclosure::from_rational(qb, 64);
        CHECK((a + b).contains(qa + qb));
        CHECK((a - b).contains(qa - qb));
        CHECK((a * b).contains(qa * qb));
        CHECK((a / b).contains(qa / qb));
    }
}

TEST_CASE("coarse intervals contain their refinements") {
    std::mt19937_64 rng(777u);
    for (int i = 0; i < 50; ++i) {
        const Rational qa = random_rational(rng);
        const Rational qb = random_nonzero(rng);
        const Enclosure a128 = Enclosure::from_rational(qa, 128);
        const Enclosure b128 = Enclosure::from_rational(qb, 128);
        const Enclosure a256 = Enclosure::from_rational(qa, 256);
        const Enclosure b256 = Enclosure::from_rational(qb, 256);
        CHECK((a128 + b128).contains(a256 + b256));
        CHECK((a128 - b128).contains(a256 - b256));
        CHECK((a128 * b128).contains(a256 * b256));
        CHECK((a128 / b128).contains(a256 / b256));
    }
}

TEST_CASE("reciprocal, absolute value, hulls") {
    const Enclosure two_thirds = Enclosure::from_rational(Rational(2, 3), 96);
    CHECK(two_thirds.reciprocal().contains(Rational(3, 2)));

    const Enclosure straddle = Enclosure::from_rational_bounds(Rational(-1, 4), Rational(1, 8), 64);
    const Enclosure mag = straddle.abs();
    CHECK(mag.lo_rational().is_zero());
    CHECK(mag.hi_rational() == Rational(1, 4));

    const Enclosure pos = Enclosure::from_rational_bounds(Rational(1, 2), Rational(3, 4), 64);
    const Enclosure hull = pos.hull_with_zero();
    CHECK(hull.contains_zero());
    CHECK(hull.hi_rational() == Rational(3, 4));
    CHECK(hull.lo_rational().is_zero());

    CHECK_THROWS_AS(straddle.reciprocal(), std::domain_error);
    CHECK_THROWS_AS(pos / straddle, std::domain_error);
    CHECK_THROWS_AS(pos.div(Rational(0)), std::domain_error);
}

TEST_CASE("predicates answer only when provable") {
    const Enclosure pos = Enclosure::from_rational_bounds(Rational(1, 2), Rational(3, 4), 64);
    const Enclosure neg = Enclosure::from_rational_bounds(Rational(-2), Rational(-1), 64);
    const Enclosure wide = Enclosure::from_rational_bounds(Rational(0), Rational(1), 64);
    CHECK(pos.is_positive());
    CHECK(!pos.is_negative());
    CHECK(neg.is_negative());
    CHECK(!wide.is_positive());  // touches zero, not provably positive
    CHECK(pos.strictly_below(Rational(1)));
    CHECK(!pos.strictly_below(Rational(3, 4)));
    CHECK(pos.strictly_above(Rational(1, 4)));
    CHECK(pos.strictly_inside(Rational(0), Rational(1)));
    CHECK(!pos.strictly_inside(Rational(1, 2), Rational(1)));
    CHECK(neg.provably_less(pos));
    CHECK(!pos.provably_less(pos));
    CHECK(wide.contains(pos));
    CHECK(!pos.contains(wide));
}

TEST_CASE("re-rounding to lower precision keeps the target inside") {
    const Enclosure fine = Enclosure::from_rational(Rational(1, 7), 256);
    const Enclosure coarse = fine.at_precision(64);
    CHECK(coarse.bits() == 64);
    CHECK(coarse.contains(fine));
    CHECK(coarse.contains(Rational(1, 7)));
}

TEST_CASE("mixed rational arithmetic is exact on dyadic data") {
    const Enclosure half = Enclosure::from_rational(Rational(1, 2), 64);
    CHECK(half.add(Rational(1, 4)).hi_rational() == Rational(3, 4));
    CHECK(half.add(Rational(1, 4)).width().is_zero());
    CHECK(half.sub(Rational(1, 4)).lo_rational() == Rational(1, 4));
    CHECK(half.rsub(Rational(1)).lo_rational() == Rational(1, 2));
    CHECK(half.mul(Rational(-2)).lo_rational() == Rational(-1));
    CHECK(half.div(Rational(4)).hi_rational() == Rational(1, 8));
}

TEST_CASE("decimal bounds carry enough digits") {
    const Enclosure third = Enclosure::from_rational(Rational(1, 3), 64);
    const auto [lo, hi] = third.decimal_bounds();
    CHECK(lo.substr(0, 6) == "3.3333");
    CHECK(hi.substr(0, 6) == "3.3333");
    CHECK(lo.find("e-01") != std::string::npos);
    CHECK(lo != hi);  // directed rounding must separate the endpoints
    const std::string j = third.json();
    CHECK(j.find("\"lo\":\"3.3333") != std::string::npos);
    CHECK(j.find("\"bits\":64") != std::string::npos);
}
