#include <doctest.h>

#include "lappell/combinatorics.hpp"
#include "lappell/errors.hpp"
#include "test_support.hpp"

using namespace lappell;

TEST_SUITE_BEGIN("exactmath");

TEST_CASE("pochhammer rising products") {
    CHECK(pochhammer(Rational(7, 3), 0) == Rational(1));
    // (5/3)_2 = (5/3)(8/3)
    CHECK(pochhammer(Rational(5, 3), 2) == Rational(5, 3) * Rational(8, 3));
    CHECK(pochhammer(Rational(5, 3), 2) == Rational(40, 9));
    for (int n = 0; n <= 12; ++n) CHECK(pochhammer(Rational(1), n) == factorial(n));

    testing::Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational a = rng.rational();
        const int n = static_cast<int>(rng.integer(0, 30));
        CHECK(pochhammer(a, n + 1) == pochhammer(a, n) * (a + Rational(n)));
    }
}

TEST_CASE("stirling numbers of both kinds") {
    CHECK(stirling(StirlingKind::Second, 3, 2) == Rational(3));
    CHECK(stirling(StirlingKind::Second, 2, 1) == Rational(1));
    CHECK(stirling(StirlingKind::Second, 4, 2) == Rational(7));
    CHECK(stirling(StirlingKind::FirstSigned, 3, 1) == Rational(2));
    CHECK(stirling(StirlingKind::FirstSigned, 3, 2) == Rational(-3));
    CHECK(stirling(StirlingKind::FirstSigned, 4, 2) == Rational(11));
    for (int n = 0; n <= 20; ++n) {
        CHECK(stirling(StirlingKind::Second, n, n) == Rational(1));
        CHECK(stirling(StirlingKind::FirstSigned, n, n) == Rational(1));
    }
}

TEST_CASE("stirling orthogonality sum_k S(n,k) s(k,m) = delta") {
    for (int n = 0; n <= 20; ++n) {
        for (int m = 0; m <= n; ++m) {
            Rational sum(0);
            for (int k = m; k <= n; ++k)
                sum += stirling(StirlingKind::Second, n, k) *
                       stirling(StirlingKind::FirstSigned, k, m);
            CHECK(sum == (n == m ? Rational(1) : Rational(0)));
        }
    }
    // the n=4, m=2 instance spelled out
    Rational s42(0);
    for (int k = 2; k <= 4; ++k)
        s42 += stirling(StirlingKind::Second, 4, k) * stirling(StirlingKind::FirstSigned, k, 2);
    CHECK(s42 == Rational(0));
}

TEST_CASE("stirling bounds errors") {
    CHECK_THROWS_AS(stirling(StirlingKind::Second, 3, 4), domain_error);
    CHECK_THROWS_AS(stirling(StirlingKind::Second, -1, 0), domain_error);
    CHECK_THROWS_AS(stirling(StirlingKind::FirstSigned, 2, -1), domain_error);

    StirlingTable t(StirlingKind::Second, 8);
    CHECK(t.bound() == 8);
    CHECK(t.at(8, 1) == Rational(1));
    CHECK_THROWS_AS(t.at(9, 0), domain_error);
    t.extend(12);
    CHECK(t.at(12, 12) == Rational(1));
}

TEST_CASE("generalized binomial") {
    CHECK(binomial(Rational(5), 2) == Rational(10));
    CHECK(binomial(Rational(7, 2), 2) == Rational(35, 8));
    CHECK(binomial(Rational(4), 0) == Rational(1));
    CHECK(factorial(6) == Rational(720));
}

TEST_SUITE_END();
