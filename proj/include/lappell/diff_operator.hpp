#pragma once

#include <map>
#include <utility>

#include "lappell/polynomial.hpp"
#include "lappell/rational.hpp"

namespace lappell {

/// Normal-ordered element of the Weyl algebra: a finite sum of terms
/// c x^m D^n with every x-power to the left of every derivative. The empty
/// sum is the zero operator; the identity is the single term x^0 D^0.
///
/// Terms are keyed by (n, m) = (derivative order, x-power) so iteration
/// matches the serialized order.
class DiffOperator {
public:
    using Key = std::pair<int, int>; ///< (d_order, x_power)

    DiffOperator() = default;

    static DiffOperator identity();
    /// D^order
    static DiffOperator derivative(int order = 1);
    /// Multiplication operator p(x)·, as the terms p_m x^m D^0.
    static DiffOperator multiplication(const Polynomial& p);
    /// c x^m D^n
    static DiffOperator term(int x_power, int d_order, const Rational& c);
    /// p(x) D^order
    static DiffOperator poly_times_d(const Polynomial& p, int d_order);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rational>& terms() const { return terms_; }
    const Rational& coeff(int x_power, int d_order) const;

    /// Adds c x^m D^n, merging and dropping cancelled terms.
    void add_term(int x_power, int d_order, const Rational& c);

    /// Largest x-power gain m - n over all terms (degree shift of the image
    /// of a monomial); 0 for the zero operator. Drives truncation accounting.
    int max_power_gain() const;

    DiffOperator operator-() const;
    DiffOperator& operator+=(const DiffOperator& o);
    DiffOperator& operator-=(const DiffOperator& o);

    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
    friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
    friend DiffOperator operator*(const Rational& c, const DiffOperator& t);
    friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<Key, Rational> terms_;
};

/// Image T(p) = sum c x^m p^(n).
Polynomial apply(const DiffOperator& T, const Polynomial& p);

/// Normal-ordered composition a∘b via the reordering rule
/// D^n x^m = sum_k C(n,k) m!/(m-k)! x^(m-k) D^(n-k).
DiffOperator compose(const DiffOperator& a, const DiffOperator& b);

} // namespace lappell
