#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "harmonic/polynomial.hpp"
#include "harmonic/rational.hpp"

using harmonic::poly_divmod_linear;
using harmonic::Polynomial;
using harmonic::Rational;

TEST_CASE("shape and trimming") {
    CHECK(Polynomial().degree() == -1);
    CHECK(Polynomial().is_zero());
    CHECK(Polynomial({Rational(1), Rational(2), Rational(0)}).degree() == 1);
    CHECK(Polynomial::constant(Rational(5)).degree() == 0);
    CHECK(Polynomial::monomial(Rational(3), 4).degree() == 4);
    CHECK(Polynomial::monomial(Rational(3), 4).coeff(4) == Rational(3));
    CHECK(Polynomial::monomial(Rational(3), 4).coeff(2) == Rational(0));
    CHECK(Polynomial::monomial(Rational(3), 4).coeff(9) == Rational(0));
}

TEST_CASE("evaluation") {
    const Polynomial p({Rational(1), Rational(2), Rational(3)});  // 1 + 2x + 3x^2
    CHECK(p.eval(Rational(2)) == Rational(17));
    CHECK(p.eval(Rational(-1, 2)) == Rational(3, 4));
    CHECK(p.eval(Rational(0)) == Rational(1));
}

TEST_CASE("ring operations") {
    const Polynomial one_plus_x({Rational(1), Rational(1)});
    CHECK(one_plus_x * one_plus_x == Polynomial({Rational(1), Rational(2), Rational(1)}));
    CHECK(one_plus_x - one_plus_x == Polynomial());
    CHECK(one_plus_x + (-one_plus_x) == Polynomial());
    CHECK(one_plus_x.scaled(Rational(3)) == Polynomial({Rational(3), Rational(3)}));
    const Polynomial p({Rational(0), Rational(1)});
    CHECK((p * p * p).degree() == 3);
}

TEST_CASE("synthetic division reconstructs the product") {
    const Polynomial q({Rational(7, 2), Rational(0), Rational(1), Rational(5)});
    const Rational root(5);
    const Rational remainder(7);
    // p = q * (x - 5) + 7
    const Polynomial x_minus_root({-root, Rational(1)});
    const Polynomial p = q * x_minus_root + Polynomial::constant(remainder);
    const auto [got_q, got_r] = poly_divmod_linear(p, root);
    CHECK(got_q == q);
    CHECK(got_r == remainder);
}

TEST_CASE("division by x - 28 of the monotonicity quintic") {
    const Polynomial quintic({Rational(-2500), Rational(1300), Rational(231), Rational(-3654),
                              Rational(-21693), Rational(798)});
    const auto [q, r] = poly_divmod_linear(quintic, Rational(28));
    CHECK(q == Polynomial({Rational(11433784), Rational(408303), Rational(14574), Rational(651),
                           Rational(798)}));
    CHECK(r == Rational(320143452L));
    CHECK(quintic.eval(Rational(28)) == r);
}

TEST_CASE("division by x - 4 of the degree-10 polynomial") {
    const Polynomial big({Rational(-9018009LL), Rational(-31747716LL), Rational(-14007876LL),
                          Rational(59313792LL), Rational(11454272LL), Rational(-129239296LL),
                          Rational(119566592LL), Rational(65630208LL), Rational(-701008896LL),
                          Rational(-534417408LL), Rational(178139136LL)});
    const auto [q, r] = poly_divmod_linear(big, Rational(4));
    CHECK(q == Polynomial({Rational(548963242092LL), Rational(137248747452LL),
                           Rational(34315688832LL), Rational(8564093760LL),
                           Rational(2138159872LL), Rational(566849792LL), Rational(111820800LL),
                           Rational(11547648LL), Rational(178139136LL), Rational(178139136LL)}));
    CHECK(r == Rational(2195843950359LL));
    CHECK(big.eval(Rational(4)) == r);
}
