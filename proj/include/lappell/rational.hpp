#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace lappell {

/// Exact rational scalar. Always reduced to lowest terms, denominator > 0,
/// zero is 0/1. Immutable-friendly value type; safe to share across threads.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}   // NOLINT: implicit for integer literals
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den);
    explicit Rational(mpq_class v);
    explicit Rational(const mpz_class& n) : v_(n) {}

    /// Strict parse of the canonical form "p" or "p/q" (q > 0 after reduction).
    static Rational from_string(std::string_view s);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_negative_integer() const { return is_integer() && sgn(v_) < 0; }
    int sign() const { return sgn(v_); }

    /// Canonical "p/q" string, "q" omitted when 1.
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

Rational abs(const Rational& x);

/// x^n for integer n (n < 0 requires x != 0).
Rational pow(const Rational& x, int n);

std::ostream& operator<<(std::ostream& os, const Rational& x);

} // namespace lappell
