#pragma once

#include <random>
#include <vector>

#include "lappell/lambda.hpp"
#include "lappell/moment_functional.hpp"
#include "lappell/polynomial.hpp"
#include "lappell/rational.hpp"

namespace lappell::testing {

class Rng {
public:
    explicit Rng(unsigned long seed = 0x5eed2024) : gen_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen_);
    }

    Rational rational(long num_mag = 9, long den_mag = 9) {
        return Rational(integer(-num_mag, num_mag), integer(1, den_mag));
    }

    Rational nonzero_rational(long num_mag = 9, long den_mag = 9) {
        while (true) {
            Rational r = rational(num_mag, den_mag);
            if (!r.is_zero()) return r;
        }
    }

    Polynomial polynomial(int max_deg, bool allow_zero = true) {
        const int deg = static_cast<int>(integer(allow_zero ? -1 : 0, max_deg));
        if (deg < 0) return Polynomial();
        std::vector<Rational> c(static_cast<size_t>(deg) + 1);
        for (auto& x : c) x = rational();
        c.back() = nonzero_rational();
        return Polynomial(std::move(c));
    }

    Polynomial monic_polynomial(int deg) {
        std::vector<Rational> c(static_cast<size_t>(deg) + 1);
        for (auto& x : c) x = rational();
        c.back() = Rational(1);
        return Polynomial(std::move(c));
    }

    /// Random lowering operator coefficients with exact degree k.
    LambdaCoeffs lowering_coeffs(int k) {
        while (true) {
            std::vector<Rational> a(static_cast<size_t>(k) + 1);
            for (auto& x : a) x = rational(6, 4);
            a.back() = nonzero_rational(6, 4);
            LambdaCoeffs cand(std::move(a));
            if (cand.is_zero()) continue;
            if (is_lowering(cand).lowering) return cand;
        }
    }

    MomentFunctional functional(int bound) {
        std::vector<Rational> m(static_cast<size_t>(bound) + 1);
        for (auto& x : m) x = rational();
        return MomentFunctional(std::move(m), bound);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace lappell::testing
