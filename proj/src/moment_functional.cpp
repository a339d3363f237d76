#include "lappell/moment_functional.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "lappell/errors.hpp"

namespace lappell {

MomentFunctional::MomentFunctional(std::vector<Rational> moments, int trusted_to)
    : moments_(std::move(moments)), trusted_to_(trusted_to) {
    if (moments_.empty()) throw domain_error("moment functional needs at least one moment");
    if (trusted_to_ > bound()) trusted_to_ = bound();
}

MomentFunctional::MomentFunctional(std::vector<Rational> moments)
    : MomentFunctional(std::move(moments), std::numeric_limits<int>::max()) {}

MomentFunctional MomentFunctional::zero(int bound) {
    if (bound < 0) throw domain_error("negative truncation bound");
    return MomentFunctional(std::vector<Rational>(static_cast<size_t>(bound) + 1, Rational(0)),
                            bound);
}

const Rational& MomentFunctional::moment(int n) const {
    if (n < 0 || n > bound())
        throw truncation_error("moment index " + std::to_string(n) + " beyond bound " +
                               std::to_string(bound()));
    return moments_[static_cast<size_t>(n)];
}

MomentFunctional MomentFunctional::with_trust(int trusted_to) const {
    return MomentFunctional(moments_, std::min(trusted_to, bound()));
}

MomentFunctional MomentFunctional::operator-() const {
    std::vector<Rational> m(moments_);
    for (auto& x : m) x = -x;
    return MomentFunctional(std::move(m), trusted_to_);
}

MomentFunctional operator+(const MomentFunctional& a, const MomentFunctional& b) {
    if (a.bound() != b.bound()) throw domain_error("moment bounds disagree");
    std::vector<Rational> m(a.moments_);
    for (size_t i = 0; i < m.size(); ++i) m[i] += b.moments_[i];
    return MomentFunctional(std::move(m), std::min(a.trusted_to_, b.trusted_to_));
}

MomentFunctional operator-(const MomentFunctional& a, const MomentFunctional& b) {
    return a + (-b);
}

MomentFunctional operator*(const Rational& c, const MomentFunctional& u) {
    std::vector<Rational> m(u.moments_);
    for (auto& x : m) x *= c;
    return MomentFunctional(std::move(m), u.trusted_to_);
}

Rational pair(const MomentFunctional& u, const Polynomial& p) {
    if (p.is_zero()) return Rational(0);
    if (*p.degree() > u.trusted_to())
        throw truncation_error("pairing with degree " + std::to_string(*p.degree()) +
                               " exceeds trusted moments " + std::to_string(u.trusted_to()));
    Rational s(0);
    for (int j = 0; j <= *p.degree(); ++j) s += p.coeff(j) * u.moment(j);
    return s;
}

MomentFunctional derivative_form(const MomentFunctional& u, int order) {
    if (order < 0) throw domain_error("derivative of negative order");
    MomentFunctional cur = u;
    for (int k = 0; k < order; ++k) {
        std::vector<Rational> m(static_cast<size_t>(cur.bound()) + 1, Rational(0));
        for (int n = 1; n <= cur.bound(); ++n)
            m[static_cast<size_t>(n)] = Rational(-n) * cur.moment(n - 1);
        cur = MomentFunctional(std::move(m), std::min(cur.bound(), cur.trusted_to() + 1));
    }
    return cur;
}

MomentFunctional left_multiply(const Polynomial& p, const MomentFunctional& u) {
    if (p.is_zero()) return MomentFunctional::zero(u.bound());
    const int d = *p.degree();
    std::vector<Rational> m(static_cast<size_t>(u.bound()) + 1, Rational(0));
    for (int n = 0; n + d <= u.bound(); ++n) {
        Rational s(0);
        for (int j = 0; j <= d; ++j) s += p.coeff(j) * u.moment(n + j);
        m[static_cast<size_t>(n)] = s;
    }
    return MomentFunctional(std::move(m), u.trusted_to() - d);
}

MomentFunctional apply_transpose(const DiffOperator& T, const MomentFunctional& u) {
    const int g = T.max_power_gain();
    std::vector<Rational> m(static_cast<size_t>(u.bound()) + 1, Rational(0));
    for (int n = 0; n + g <= u.bound() && n <= u.bound(); ++n) {
        // <u, T(x^n)> with T(x^n) = sum c n!/(n-k)! x^(n-k+m).
        Rational s(0);
        for (const auto& [key, c] : T.terms()) {
            const auto [k, xp] = key;
            if (k > n) continue;
            Rational falling(1);
            for (int i = 0; i < k; ++i) falling *= Rational(n - i);
            const int idx = n - k + xp;
            if (idx > u.bound())
                throw domain_error("transpose action overruns the moment bound");
            s += c * falling * u.moment(idx);
        }
        m[static_cast<size_t>(n)] = s;
    }
    return MomentFunctional(std::move(m), std::min(u.bound(), u.trusted_to() - g));
}

MomentFunctional apply_to_form(const DiffOperator& T, const MomentFunctional& u) {
    MomentFunctional acc = MomentFunctional::zero(u.bound());
    for (const auto& [key, c] : T.terms()) {
        const auto [k, xp] = key;
        MomentFunctional t = derivative_form(u, k);
        t = left_multiply(Polynomial::monomial(xp, c), t);
        acc = acc + t;
    }
    return acc;
}

FunctionalEquation classical_equation(const Polynomial& phi, const Polynomial& psi) {
    // D(phi u) + psi u = phi u' + (phi' + psi) u.
    return FunctionalEquation{{{phi, 1}, {derivative(phi) + psi, 0}}};
}

std::vector<Rational> residual(const FunctionalEquation& eq, const MomentFunctional& u,
                               int up_to) {
    if (eq.terms.empty()) throw domain_error("functional equation without terms");
    std::set<int> orders;
    for (const auto& [p, i] : eq.terms) {
        if (i < 0) throw domain_error("negative derivative order in functional equation");
        if (!orders.insert(i).second) throw domain_error("duplicate derivative order");
    }
    MomentFunctional acc = MomentFunctional::zero(u.bound());
    for (const auto& [p, i] : eq.terms)
        acc = acc + left_multiply(p, derivative_form(u, i));
    if (up_to > acc.trusted_to())
        throw truncation_error("residual order " + std::to_string(up_to) +
                               " exceeds trusted moments " + std::to_string(acc.trusted_to()));
    std::vector<Rational> r;
    r.reserve(static_cast<size_t>(up_to) + 1);
    for (int n = 0; n <= up_to; ++n) r.push_back(acc.moment(n));
    return r;
}

std::vector<MomentFunctional> dual_sequence(std::span<const Polynomial> basis, int count) {
    const int N = static_cast<int>(basis.size()) - 1;
    if (N < 0) throw domain_error("empty basis");
    if (count > N + 1)
        throw domain_error("dual sequence of " + std::to_string(count) +
                           " functionals needs at least as many basis polynomials");
    for (int j = 0; j <= N; ++j) {
        if (basis[static_cast<size_t>(j)].degree() != j ||
            !basis[static_cast<size_t>(j)].is_monic())
            throw domain_error("basis polynomial " + std::to_string(j) + " is not monic of degree " +
                               std::to_string(j));
    }
    // x^m = sum_j coeffs[m][j] B_j, solved by unitriangular elimination.
    std::vector<std::vector<Rational>> coeffs(static_cast<size_t>(N) + 1);
    for (int m = 0; m <= N; ++m) {
        coeffs[static_cast<size_t>(m)].assign(static_cast<size_t>(N) + 1, Rational(0));
        Polynomial r = Polynomial::monomial(m);
        for (int j = m; j >= 0; --j) {
            const Rational c = r.coeff(j);
            if (c.is_zero()) continue;
            coeffs[static_cast<size_t>(m)][static_cast<size_t>(j)] = c;
            r -= c * basis[static_cast<size_t>(j)];
        }
        if (!r.is_zero()) throw domain_error("basis expansion failed"); // unreachable for monic bases
    }
    std::vector<MomentFunctional> dual;
    dual.reserve(static_cast<size_t>(count));
    for (int n = 0; n < count; ++n) {
        std::vector<Rational> m(static_cast<size_t>(N) + 1, Rational(0));
        for (int j = 0; j <= N; ++j) m[static_cast<size_t>(j)] = coeffs[static_cast<size_t>(j)][static_cast<size_t>(n)];
        dual.emplace_back(std::move(m), N);
    }
    return dual;
}

Lemma41Result lambda_product_check(const LambdaCoeffs& a, const Polynomial& f,
                                   const Polynomial& p, const MomentFunctional& u) {
    if (a.k() > 2) throw domain_error("lambda_product_check requires k <= 2");
    const Rational a1 = a.at(1), a2 = a.at(2);
    const DiffOperator lambda = to_normal_ordered(a);
    const Polynomial x = Polynomial::variable();
    const Polynomial x2 = Polynomial::monomial(2);
    const Polynomial fd = derivative(f), fdd = derivative(f, 2);

    Lemma41Result result;

    const Polynomial lhs_poly = apply(lambda, f * p);
    const Polynomial rhs_poly = f * apply(lambda, p) + p * apply(lambda, f) +
                                (Rational(2) * (a1 + Rational(3) * a2)) * (x * fd * derivative(p)) +
                                (Rational(3) * a2) * (x2 * fdd * derivative(p)) +
                                (Rational(3) * a2) * (x2 * fd * derivative(p, 2));
    result.product_identity = lhs_poly == rhs_poly;

    const MomentFunctional lhs = apply_transpose(lambda, left_multiply(f, u));
    MomentFunctional rhs = left_multiply(f, apply_transpose(lambda, u)) -
                           left_multiply(apply(lambda, f), u) +
                           left_multiply((Rational(2) * a1) * (fd + x * fdd), u);
    rhs = rhs + left_multiply((Rational(2) * (a1 - Rational(3) * a2)) * (x * fd) -
                                  (Rational(3) * a2) * (x2 * fdd),
                              derivative_form(u));
    rhs = rhs - left_multiply((Rational(3) * a2) * (x2 * fd), derivative_form(u, 2));

    const int common = std::min(lhs.trusted_to(), rhs.trusted_to());
    result.checked_moments = common + 1;
    result.transpose_identity = common >= 0;
    for (int n = 0; n <= common; ++n) {
        if (lhs.moment(n) != rhs.moment(n)) {
            result.transpose_identity = false;
            break;
        }
    }
    return result;
}

} // namespace lappell
