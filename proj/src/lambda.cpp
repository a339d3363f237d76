#include "lappell/lambda.hpp"

#include <algorithm>

#include "lappell/combinatorics.hpp"
#include "lappell/errors.hpp"

namespace lappell {

LambdaCoeffs::LambdaCoeffs(std::vector<Rational> a) : a_(std::move(a)) {
    while (a_.size() > 1 && a_.back().is_zero()) a_.pop_back();
    if (a_.empty()) a_.push_back(Rational(0));
}

const Rational& LambdaCoeffs::at(int i) const {
    static const Rational kZero(0);
    if (i < 0 || static_cast<size_t>(i) >= a_.size()) return kZero;
    return a_[static_cast<size_t>(i)];
}

Polynomial LambdaCoeffs::symbol() const {
    return Polynomial(a_);
}

Rational LambdaCoeffs::rho(int n) const {
    return Rational(n + 1) * symbol()(Rational(n + 1));
}

DiffOperator dx_power_d(int i) {
    if (i < 0) throw domain_error("negative (Dx) power");
    const DiffOperator dx =
        compose(DiffOperator::derivative(), DiffOperator::multiplication(Polynomial::variable()));
    DiffOperator r = DiffOperator::derivative();
    for (int j = 0; j < i; ++j) r = compose(dx, r);
    return r;
}

std::vector<Rational> to_xd_coeffs(const LambdaCoeffs& a) {
    const int k = a.k();
    std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
    for (int m = 0; m <= k; ++m)
        for (int i = m; i <= k; ++i)
            c[static_cast<size_t>(m)] += a.at(i) * stirling(StirlingKind::Second, i + 1, m + 1);
    return c;
}

DiffOperator to_normal_ordered(const LambdaCoeffs& a) {
    DiffOperator t;
    const auto c = to_xd_coeffs(a);
    for (size_t m = 0; m < c.size(); ++m)
        t.add_term(static_cast<int>(m), static_cast<int>(m) + 1, c[m]);
    return t;
}

LambdaCoeffs from_xd_coeffs(const std::vector<Rational>& c) {
    const int k = static_cast<int>(c.size()) - 1;
    if (k < 0) return LambdaCoeffs({Rational(0)});
    std::vector<Rational> a(static_cast<size_t>(k) + 1, Rational(0));
    for (int m = 0; m <= k; ++m)
        for (int i = m; i <= k; ++i)
            a[static_cast<size_t>(m)] +=
                c[static_cast<size_t>(i)] * stirling(StirlingKind::FirstSigned, i + 1, m + 1);
    return LambdaCoeffs(std::move(a));
}

LambdaCoeffs from_factored(const FactoredForm& s) {
    // S_{0,0} = D.
    std::vector<Rational> a{Rational(1)};
    // S_{l,t+1} = S_{l,t} (A I + B xD): a~_0 = A a_0, a~_i = A a_i + B a_{i-1},
    // a~_{top} = B a_{top-1}.
    for (const auto& [A, B] : s.right) {
        std::vector<Rational> next(a.size() + 1, Rational(0));
        for (size_t i = 0; i < a.size(); ++i) {
            next[i] += A * a[i];
            next[i + 1] += B * a[i];
        }
        a = std::move(next);
    }
    // S_{l+1,t} = (A I + B xD) S_{l,t}: a~_0 = (A-B) a_0,
    // a~_i = B a_{i-1} + (A-B) a_i, a~_{top} = B a_{top-1}.
    // Factors attach outward, so consume `left` innermost (i = -1) first.
    for (auto it = s.left.rbegin(); it != s.left.rend(); ++it) {
        const auto& [A, B] = *it;
        std::vector<Rational> next(a.size() + 1, Rational(0));
        for (size_t i = 0; i < a.size(); ++i) {
            next[i] += (A - B) * a[i];
            next[i + 1] += B * a[i];
        }
        a = std::move(next);
    }
    return LambdaCoeffs(std::move(a));
}

namespace {

/// Positive divisors of |z| in ascending order (trial division).
std::vector<mpz_class> positive_divisors(mpz_class z) {
    z = ::abs(z);
    std::vector<mpz_class> lo, hi;
    for (mpz_class i = 1; i * i <= z; ++i) {
        if (z % i == 0) {
            lo.push_back(i);
            if (i * i != z) hi.push_back(z / i);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

/// p scaled to integer coefficients (content not removed).
std::vector<mpz_class> cleared_coeffs(const Polynomial& p) {
    mpz_class l(1);
    for (const auto& c : p.coeffs()) {
        mpz_class den = c.denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        l = l / g * den;
    }
    std::vector<mpz_class> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        out.push_back(c.numerator() * (l / c.denominator()));
    return out;
}

/// Divides p by (x - r); remainder must be zero (r is a known root).
Polynomial deflate(const Polynomial& p, const Rational& r) {
    const auto& c = p.coeffs();
    std::vector<Rational> q(c.size() - 1, Rational(0));
    Rational carry(0);
    for (size_t i = c.size(); i-- > 1;) {
        carry = c[i] + r * carry;
        q[i - 1] = carry;
    }
    return Polynomial(std::move(q));
}

} // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw domain_error("rational roots of the zero polynomial");
    std::vector<Rational> roots;
    Polynomial cur = p;
    // Strip x^v.
    while (!cur.is_zero() && cur.coeff(0).is_zero() && *cur.degree() >= 1) {
        roots.push_back(Rational(0));
        std::vector<Rational> shifted(cur.coeffs().begin() + 1, cur.coeffs().end());
        cur = Polynomial(std::move(shifted));
    }
    if (*cur.degree() == 0) return roots;

    // Candidates p/q from the integer-cleared polynomial: p | constant,
    // q | leading. Roots of any deflated quotient are roots of the original,
    // so one candidate set serves the whole extraction.
    const auto ic = cleared_coeffs(cur);
    const auto nums = positive_divisors(ic.front());
    const auto dens = positive_divisors(ic.back());
    std::vector<Rational> candidates;
    for (const auto& n : nums)
        for (const auto& d : dens) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
            if (g != 1) continue; // keep reduced forms only
            mpq_class q(n, d);
            q.canonicalize();
            candidates.push_back(Rational(q));
            candidates.push_back(Rational(mpq_class(-q)));
        }

    for (const auto& cand : candidates) {
        while (!cur.is_zero() && *cur.degree() >= 1 && cur(cand).is_zero()) {
            roots.push_back(cand);
            cur = deflate(cur, cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

FactoredForm factor_lambda(const LambdaCoeffs& a) {
    if (a.is_zero()) throw domain_error("cannot factor the zero operator");
    const Polynomial f = a.symbol();
    const int k = a.k();
    FactoredForm form;
    if (k == 0) {
        if (a.at(0) != Rational(1))
            form.right.emplace_back(a.at(0), Rational(0));
        return form;
    }
    const auto roots = rational_roots(f);
    if (static_cast<int>(roots.size()) < k)
        throw domain_error("symbol polynomial not factorable over rationals: " + to_string(f));

    // Primitive factor (q x - p) per root p/q; residual scalar folded into the
    // first factor after the lexicographic sort.
    std::vector<std::pair<Rational, Rational>> factors;
    Rational lead_product(1);
    for (const auto& r : roots) {
        const Rational A(mpq_class(-r.numerator()));
        const Rational B(mpq_class(r.denominator()));
        factors.emplace_back(A, B);
        lead_product *= B;
    }
    std::sort(factors.begin(), factors.end());
    const Rational s = f.leading() / lead_product;
    if (s != Rational(1)) {
        factors.front().first *= s;
        factors.front().second *= s;
    }
    form.right = std::move(factors);
    return form;
}

LoweringCheck is_lowering(const LambdaCoeffs& a) {
    if (a.is_zero()) throw domain_error("zero operator");
    const Polynomial f = a.symbol();
    LoweringCheck result;
    result.lowering = true;
    if (a.k() == 0) return result;

    Polynomial g = f;
    while (g.coeff(0).is_zero() && *g.degree() >= 1) {
        std::vector<Rational> shifted(g.coeffs().begin() + 1, g.coeffs().end());
        g = Polynomial(std::move(shifted));
    }
    if (*g.degree() == 0) return result; // f = a_k x^k, no positive root

    // A positive integer root of f divides the constant of the cleared g.
    const auto ic = cleared_coeffs(g);
    for (const auto& d : positive_divisors(ic.front())) {
        if (f(Rational(d)).is_zero()) {
            result.lowering = false;
            result.witness = d.get_si();
            return result;
        }
    }
    return result;
}

DiffOperator transpose(const LambdaCoeffs& a) {
    std::vector<Rational> b(a.coeffs());
    for (size_t i = 0; i < b.size(); ++i)
        if (i % 2 == 0) b[i] = -b[i]; // (-1)^(i+1)
    return to_normal_ordered(LambdaCoeffs(std::move(b)));
}

MonomialImage on_monomial(const LambdaCoeffs& a, int n) {
    if (n < 1) throw domain_error("on_monomial requires n >= 1");
    return {Rational(n) * a.symbol()(Rational(n)), n - 1};
}

} // namespace lappell
