#include <doctest.h>

#include "lappell/errors.hpp"
#include "lappell/polynomial.hpp"
#include "test_support.hpp"

using namespace lappell;

namespace {
Polynomial from_ints(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial(std::move(v));
}
} // namespace

TEST_SUITE_BEGIN("exactmath");

TEST_CASE("polynomial arithmetic basics") {
    const Polynomial x = Polynomial::variable();
    const Polynomial one = Polynomial::constant(Rational(1));
    CHECK((x + one) * (x - one) == from_ints({-1, 0, 1}));
    const Polynomial p = from_ints({3, 0, 2});
    CHECK(p + Polynomial() == p);
    CHECK(Polynomial::monomial(1, Rational(2)) * Polynomial::monomial(2, Rational(3)) ==
          Polynomial::monomial(3, Rational(6)));
}

TEST_CASE("degree bookkeeping uses a true sentinel for zero") {
    CHECK_FALSE(Polynomial().degree().has_value());
    CHECK(Polynomial().is_zero());
    // cancellation trims trailing zeros
    const Polynomial p = from_ints({1, 2, 1});
    const Polynomial q = from_ints({0, 0, 1});
    CHECK((p - q).degree() == 1);
    CHECK((p - p).is_zero());
    CHECK(Polynomial(std::vector<Rational>{Rational(0), Rational(0)}).is_zero());
    CHECK(from_ints({0, 0, 5}).leading() == Rational(5));
}

TEST_CASE("derivatives") {
    CHECK(derivative(Polynomial::monomial(3)) == Polynomial::monomial(2, Rational(3)));
    CHECK(derivative(from_ints({1, 1}), 2).is_zero());
    CHECK(derivative(from_ints({-1, 0, 1})) == from_ints({0, 2}));
    CHECK(derivative(Polynomial::constant(Rational(4))).is_zero());
    CHECK(derivative(Polynomial(), 5).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
    testing::Rng rng(1);
    for (int trial = 0; trial < 30; ++trial) {
        const Polynomial p = rng.polynomial(12);
        const Polynomial q = rng.polynomial(12);
        const Polynomial r = rng.polynomial(12);
        CHECK((p + q) * r == p * r + q * r);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        CHECK(p + q == q + p);
    }
}

TEST_CASE("composition and evaluation agree") {
    testing::Rng rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial p = rng.polynomial(6);
        const Polynomial inner = rng.polynomial(3);
        const Rational x0 = rng.rational();
        CHECK(compose(p, inner)(x0) == p(inner(x0)));
    }
    CHECK(pow(from_ints({1, 1}), 3) == from_ints({1, 3, 3, 1}));
    CHECK(pow(from_ints({2, 1}), 0) == Polynomial::constant(Rational(1)));
}

TEST_SUITE_END();
