#include "lappell/polynomial.hpp"

#include <ostream>
#include <sstream>

#include "lappell/errors.hpp"

namespace lappell {

namespace {
const Rational kZero(0);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(int power, const Rational& c) {
    if (power < 0) throw domain_error("monomial with negative power");
    std::vector<Rational> v(static_cast<size_t>(power) + 1, Rational(0));
    v.back() = c;
    return Polynomial(std::move(v));
}

std::optional<int> Polynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& Polynomial::coeff(int power) const {
    if (power < 0 || static_cast<size_t>(power) >= coeffs_.size()) return kZero;
    return coeffs_[static_cast<size_t>(power)];
}

Rational Polynomial::leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c.is_zero()) return Polynomial();
    std::vector<Rational> v(p.coeffs());
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
}

Polynomial derivative(const Polynomial& p, int order) {
    if (order < 0) throw domain_error("derivative of negative order");
    Polynomial cur = p;
    for (int k = 0; k < order; ++k) {
        const auto& c = cur.coeffs();
        if (c.size() <= 1) return Polynomial();
        std::vector<Rational> v(c.size() - 1, Rational(0));
        for (size_t i = 1; i < c.size(); ++i)
            v[i - 1] = Rational(static_cast<long>(i)) * c[i];
        cur = Polynomial(std::move(v));
    }
    return cur;
}

Polynomial compose(const Polynomial& p, const Polynomial& inner) {
    Polynomial acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * inner + Polynomial::constant(*it);
    return acc;
}

Polynomial pow(const Polynomial& p, int n) {
    if (n < 0) throw domain_error("polynomial to a negative power");
    Polynomial r = Polynomial::constant(Rational(1));
    Polynomial base = p;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = *p.degree(); i >= 0; --i) {
        const Rational& c = p.coeff(i);
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const Rational a = abs(c);
        if (i == 0 || a != Rational(1)) os << a.str();
        if (i > 0) {
            if (a != Rational(1)) os << " ";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << to_string(p);
}

} // namespace lappell
