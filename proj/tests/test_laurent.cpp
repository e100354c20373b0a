#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wklr/errors.hpp"
#include "wklr/laurent.hpp"

using namespace wklr;

namespace {

LaurentPoly randomPoly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nTerms(0, 5), expo(-6, 6), coef(-9, 9);
    LaurentPoly f;
    int n = nTerms(rng);
    for (int i = 0; i < n; ++i) f += LaurentPoly::monomial(expo(rng), Integer(coef(rng)));
    return f;
}

}  // namespace

TEST_CASE("bar negates exponents and is an involution") {
    LaurentPoly f = LaurentPoly::monomial(2) + LaurentPoly(3);
    LaurentPoly expect = LaurentPoly::monomial(-2) + LaurentPoly(3);
    CHECK(bar(f) == expect);
    CHECK(bar(LaurentPoly::zero()) == LaurentPoly::zero());

    LaurentPoly g = LaurentPoly::monomial(-1, Integer(5)) - LaurentPoly::monomial(3);
    CHECK(bar(bar(g)) == g);
}

TEST_CASE("bar is a ring involution on random pairs") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly f = randomPoly(rng), g = randomPoly(rng);
        CHECK(bar(f * g) == bar(f) * bar(g));
        CHECK(bar(f + g) == bar(f) + bar(g));
        CHECK(bar(bar(f)) == f);
    }
}

TEST_CASE("quantum integers") {
    CHECK(qInt(1) == LaurentPoly::one());
    CHECK(qInt(2) == LaurentPoly::monomial(1) + LaurentPoly::monomial(-1));
    CHECK(qInt(0).isZero());
    CHECK(qInt(-3) == -qInt(3));
}

TEST_CASE("balanced q-binomial") {
    LaurentPoly b = qBinomial(4, 2);
    LaurentPoly expect = LaurentPoly::monomial(4) + LaurentPoly::monomial(2) + LaurentPoly(2) +
                         LaurentPoly::monomial(-2) + LaurentPoly::monomial(-4);
    CHECK(b == expect);
    CHECK(qBinomial(5, 0) == LaurentPoly::one());
    CHECK(qBinomial(3, 5).isZero());
    CHECK_THROWS_AS(qFactorial(-1), InvalidInput);
}

TEST_CASE("binomial times factorials recovers the factorial") {
    for (long a = 0; a <= 6; ++a)
        for (long b = 0; b <= 6; ++b)
            CHECK(qBinomial(a + b, a) * qFactorial(a) * qFactorial(b) == qFactorial(a + b));
}

TEST_CASE("barSymmetrizeHead examples") {
    // q^2 + 2 + q^-1 -> q^2 + 2 + q^-2
    LaurentPoly f = LaurentPoly::monomial(2) + LaurentPoly(2) + LaurentPoly::monomial(-1);
    LaurentPoly expect = LaurentPoly::monomial(2) + LaurentPoly(2) + LaurentPoly::monomial(-2);
    CHECK(barSymmetrizeHead(f) == expect);
    CHECK(barSymmetrizeHead(LaurentPoly::monomial(-3)).isZero());
    CHECK(barSymmetrizeHead(LaurentPoly(3)) == LaurentPoly(3));
}

TEST_CASE("barSymmetrizeHead output is bar-fixed with negative residual") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        LaurentPoly f = randomPoly(rng);
        LaurentPoly g = barSymmetrizeHead(f);
        CHECK(bar(g) == g);
        LaurentPoly r = f - g;
        if (!r.isZero()) CHECK(r.maxExponent() < 0);
    }
}

TEST_CASE("exact division") {
    LaurentPoly a = qFactorial(5);
    LaurentPoly b = qFactorial(3);
    CHECK(divideExact(a, b) * b == a);
    CHECK_THROWS_AS(divideExact(LaurentPoly::one(), qInt(2)), DivisionFailure);
    CHECK_THROWS_AS(divideExact(LaurentPoly::one(), LaurentPoly::zero()), DivisionFailure);
}

TEST_CASE("rendering is deterministic and ascending") {
    LaurentPoly f = LaurentPoly::monomial(1, Integer(3)) + LaurentPoly::monomial(-2) +
                    LaurentPoly(2);
    CHECK(f.toString() == "q^-2+2+3q");
    CHECK(LaurentPoly::zero().toString() == "0");
    CHECK((-qInt(1)).toString() == "-1");
}
