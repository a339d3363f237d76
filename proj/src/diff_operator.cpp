#include "lappell/diff_operator.hpp"

#include <algorithm>

#include "lappell/combinatorics.hpp"
#include "lappell/errors.hpp"

namespace lappell {

namespace {
const Rational kZero(0);
}

DiffOperator DiffOperator::identity() {
    return term(0, 0, Rational(1));
}

DiffOperator DiffOperator::derivative(int order) {
    return term(0, order, Rational(1));
}

DiffOperator DiffOperator::multiplication(const Polynomial& p) {
    return poly_times_d(p, 0);
}

DiffOperator DiffOperator::term(int x_power, int d_order, const Rational& c) {
    DiffOperator t;
    t.add_term(x_power, d_order, c);
    return t;
}

DiffOperator DiffOperator::poly_times_d(const Polynomial& p, int d_order) {
    DiffOperator t;
    for (size_t m = 0; m < p.coeffs().size(); ++m)
        t.add_term(static_cast<int>(m), d_order, p.coeffs()[m]);
    return t;
}

const Rational& DiffOperator::coeff(int x_power, int d_order) const {
    auto it = terms_.find({d_order, x_power});
    return it == terms_.end() ? kZero : it->second;
}

void DiffOperator::add_term(int x_power, int d_order, const Rational& c) {
    if (x_power < 0 || d_order < 0)
        throw domain_error("operator term with negative power");
    if (c.is_zero()) return;
    const Key key{d_order, x_power};
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int DiffOperator::max_power_gain() const {
    int g = 0;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        const int gain = key.second - key.first;
        if (first || gain > g) g = gain;
        first = false;
    }
    return g;
}

DiffOperator DiffOperator::operator-() const {
    DiffOperator r(*this);
    for (auto& [key, c] : r.terms_) c = -c;
    return r;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.second, key.first, c);
    return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.second, key.first, -c);
    return *this;
}

DiffOperator operator*(const Rational& c, const DiffOperator& t) {
    DiffOperator r;
    if (c.is_zero()) return r;
    for (const auto& [key, v] : t.terms()) r.add_term(key.second, key.first, c * v);
    return r;
}

Polynomial apply(const DiffOperator& T, const Polynomial& p) {
    Polynomial result;
    Polynomial dp = p;
    int cur_order = 0;
    // Terms are keyed by ascending derivative order, so p^(n) is built once.
    for (const auto& [key, c] : T.terms()) {
        const auto [d_order, x_power] = key;
        if (d_order > cur_order) {
            dp = derivative(dp, d_order - cur_order);
            cur_order = d_order;
        }
        result += Polynomial::monomial(x_power, c) * dp;
    }
    return result;
}

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
    DiffOperator r;
    for (const auto& [ka, ca] : a.terms()) {
        const auto [n1, m1] = ka;
        for (const auto& [kb, cb] : b.terms()) {
            const auto [n2, m2] = kb;
            // D^n1 x^m2 = sum_k C(n1,k) (m2 falling k) x^(m2-k) D^(n1-k)
            const int kmax = std::min(n1, m2);
            Rational falling(1);
            for (int k = 0; k <= kmax; ++k) {
                const Rational w = binomial(Rational(n1), k) * falling;
                r.add_term(m1 + m2 - k, n1 + n2 - k, ca * cb * w);
                falling *= Rational(m2 - k);
            }
        }
    }
    return r;
}

} // namespace lappell
