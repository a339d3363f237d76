#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lappell/rational.hpp"

namespace lappell {

/// Dense univariate polynomial over Rational, coefficient index = power.
/// The zero polynomial has an empty coefficient vector; its degree is the
/// empty optional (a distinct "minus infinity" sentinel, never -1).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    /// c * x^power
    static Polynomial monomial(int power, const Rational& c = Rational(1));
    /// The variable x.
    static Polynomial variable() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const;
    /// Coefficient of x^power (zero beyond the stored range).
    const Rational& coeff(int power) const;
    /// Leading coefficient; zero for the zero polynomial.
    Rational leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_monic() const { return !is_zero() && leading() == Rational(1); }

    /// Horner evaluation.
    Rational operator()(const Rational& x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Exact k-th derivative; the derivative of a constant is zero.
Polynomial derivative(const Polynomial& p, int order = 1);

/// p(inner(x)).
Polynomial compose(const Polynomial& p, const Polynomial& inner);

/// p^n for n >= 0.
Polynomial pow(const Polynomial& p, int n);

/// Human-readable form like "x^2 - 1/2 x + 3" (diagnostics only).
std::string to_string(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace lappell
