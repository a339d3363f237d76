#include "lappell/cubic.hpp"

#include <string>

#include "lappell/combinatorics.hpp"
#include "lappell/errors.hpp"

namespace lappell {

namespace {

const Polynomial kZeroPoly;

DiffOperator op_i_3xd() {
    DiffOperator t = DiffOperator::identity();
    t.add_term(1, 1, Rational(3));
    return t;
}

DiffOperator op_2i_3xd() {
    DiffOperator t = DiffOperator::term(0, 0, Rational(2));
    t.add_term(1, 1, Rational(3));
    return t;
}

DiffOperator op_3d() {
    return DiffOperator::term(0, 1, Rational(3));
}

} // namespace

const Polynomial& CubicDecomposition::a1_at(int n) const {
    if (n < 0) return kZeroPoly;
    return a1.at(static_cast<size_t>(n));
}

const Polynomial& CubicDecomposition::a2_at(int n) const {
    if (n < 0) return kZeroPoly;
    return a2.at(static_cast<size_t>(n));
}

const Polynomial& CubicDecomposition::b2_at(int n) const {
    if (n < 0) return kZeroPoly;
    return b2.at(static_cast<size_t>(n));
}

std::array<std::array<Polynomial, 3>, 3> CubicDecomposition::matrix(int n) const {
    return {{{P.at(static_cast<size_t>(n)), a1_at(n - 1), a2_at(n - 1)},
             {b1.at(static_cast<size_t>(n)), Q.at(static_cast<size_t>(n)), b2_at(n - 1)},
             {c1.at(static_cast<size_t>(n)), c2.at(static_cast<size_t>(n)),
              R.at(static_cast<size_t>(n))}}};
}

std::array<Polynomial, 3> split3(const Polynomial& w) {
    std::array<std::vector<Rational>, 3> parts;
    for (size_t i = 0; i < w.coeffs().size(); ++i) {
        auto& dst = parts[i % 3];
        const size_t j = i / 3;
        if (dst.size() <= j) dst.resize(j + 1, Rational(0));
        dst[j] = w.coeffs()[i];
    }
    return {Polynomial(std::move(parts[0])), Polynomial(std::move(parts[1])),
            Polynomial(std::move(parts[2]))};
}

Polynomial interleave3(const Polynomial& p, const Polynomial& q, const Polynomial& r) {
    const Polynomial cube = Polynomial::monomial(3);
    return compose(p, cube) + Polynomial::variable() * compose(q, cube) +
           Polynomial::monomial(2) * compose(r, cube);
}

CubicDecomposition decompose(const MonicPolySequence& W, int up_to) {
    if (up_to < 0) throw domain_error("negative decomposition order");
    CubicDecomposition d;
    for (int n = 0; n <= up_to; ++n) {
        auto s0 = split3(W.at(3 * n));
        d.P.push_back(std::move(s0[0]));
        if (n >= 1) {
            d.a1.push_back(std::move(s0[1]));
            d.a2.push_back(std::move(s0[2]));
        } else if (!s0[1].is_zero() || !s0[2].is_zero()) {
            throw domain_error("W_0 is not constant");
        }

        auto s1 = split3(W.at(3 * n + 1));
        d.b1.push_back(std::move(s1[0]));
        d.Q.push_back(std::move(s1[1]));
        if (n >= 1) d.b2.push_back(std::move(s1[2]));

        auto s2 = split3(W.at(3 * n + 2));
        d.c1.push_back(std::move(s2[0]));
        d.c2.push_back(std::move(s2[1]));
        d.R.push_back(std::move(s2[2]));
    }
    return d;
}

MonicPolySequence recompose(const CubicDecomposition& d) {
    const int m = d.order();
    auto check_deg = [](const Polynomial& p, int bound, const char* name, int n) {
        if (!p.is_zero() && *p.degree() > bound)
            throw domain_error(std::string("degree bound violated by ") + name + "_" +
                               std::to_string(n));
    };
    std::vector<Polynomial> w;
    w.reserve(3 * static_cast<size_t>(m) + 3);
    for (int n = 0; n <= m; ++n) {
        check_deg(d.a1_at(n - 1), n - 1, "a1", n - 1);
        check_deg(d.a2_at(n - 1), n - 1, "a2", n - 1);
        check_deg(d.b2_at(n - 1), n - 1, "b2", n - 1);
        check_deg(d.b1.at(static_cast<size_t>(n)), n, "b1", n);
        check_deg(d.c1.at(static_cast<size_t>(n)), n, "c1", n);
        check_deg(d.c2.at(static_cast<size_t>(n)), n, "c2", n);
        w.push_back(interleave3(d.P.at(static_cast<size_t>(n)), d.a1_at(n - 1), d.a2_at(n - 1)));
        w.push_back(interleave3(d.b1.at(static_cast<size_t>(n)), d.Q.at(static_cast<size_t>(n)),
                                d.b2_at(n - 1)));
        w.push_back(interleave3(d.c1.at(static_cast<size_t>(n)), d.c2.at(static_cast<size_t>(n)),
                                d.R.at(static_cast<size_t>(n))));
    }
    return from_polys(std::move(w));
}

std::vector<RelationResidual> verify_nine_relations(const CubicDecomposition& d, int up_to) {
    if (up_to > d.order() - 1)
        throw domain_error("nine-relation check to order " + std::to_string(up_to) +
                           " needs a decomposition of order " + std::to_string(up_to + 1));
    const DiffOperator i3 = op_i_3xd();
    const DiffOperator i23 = op_2i_3xd();
    const DiffOperator d3 = op_3d();
    std::vector<RelationResidual> out;
    for (int n = 0; n <= up_to; ++n) {
        const Rational f1(3 * n + 1), f2(3 * n + 2), f3(3 * n + 3);
        const auto& P = d.P;
        const auto& Q = d.Q;
        const auto& R = d.R;
        out.push_back({1, n, apply(i3, Q.at(static_cast<size_t>(n))) - f1 * P.at(static_cast<size_t>(n))});
        out.push_back({2, n, apply(i23, d.b2_at(n - 1)) - f1 * d.a1_at(n - 1)});
        out.push_back({3, n, apply(d3, d.b1.at(static_cast<size_t>(n))) - f1 * d.a2_at(n - 1)});
        out.push_back({4, n, apply(i3, d.c2.at(static_cast<size_t>(n))) - f2 * d.b1.at(static_cast<size_t>(n))});
        out.push_back({5, n, apply(i23, R.at(static_cast<size_t>(n))) - f2 * Q.at(static_cast<size_t>(n))});
        out.push_back({6, n, apply(d3, d.c1.at(static_cast<size_t>(n))) - f2 * d.b2_at(n - 1)});
        out.push_back({7, n, apply(i3, d.a1_at(n)) - f3 * d.c1.at(static_cast<size_t>(n))});
        out.push_back({8, n, apply(i23, d.a2_at(n)) - f3 * d.c2.at(static_cast<size_t>(n))});
        out.push_back({9, n, apply(d3, P.at(static_cast<size_t>(n + 1))) - f3 * R.at(static_cast<size_t>(n))});
    }
    return out;
}

bool all_zero(const std::vector<RelationResidual>& residuals) {
    for (const auto& r : residuals)
        if (!r.residual.is_zero()) return false;
    return true;
}

LambdaCoeffs lambda_from_normal_ordered(const DiffOperator& T) {
    std::vector<Rational> c;
    for (const auto& [key, v] : T.terms()) {
        const auto [d_order, x_power] = key;
        if (d_order != x_power + 1)
            throw domain_error("operator is not of the sum-of-x^m D^(m+1) shape");
        if (static_cast<int>(c.size()) <= x_power) c.resize(static_cast<size_t>(x_power) + 1, Rational(0));
        c[static_cast<size_t>(x_power)] = v;
    }
    return from_xd_coeffs(c);
}

PrincipalOperators principal_operators() {
    const DiffOperator i3 = op_i_3xd();
    const DiffOperator i23 = op_2i_3xd();
    const DiffOperator d1 = DiffOperator::derivative();
    const LambdaCoeffs o012 = lambda_from_normal_ordered(compose(d1, compose(i3, i23)));
    const LambdaCoeffs o201 = lambda_from_normal_ordered(compose(i23, compose(d1, i3)));
    const LambdaCoeffs o120 = lambda_from_normal_ordered(compose(i3, compose(i23, d1)));
    const LambdaCoeffs e012({Rational(2), Rational(9), Rational(9)});
    const LambdaCoeffs e201({Rational(-1), Rational(0), Rational(9)});
    const LambdaCoeffs e120({Rational(2), Rational(-9), Rational(9)});
    if (!(o012 == e012 && o201 == e201 && o120 == e120))
        throw domain_error("principal operator expansion mismatch");
    return {o012, o201, o120};
}

PrincipalAppellVerdict verify_principal_appell(const CubicDecomposition& d, int up_to) {
    if (up_to > d.order() - 1)
        throw domain_error("principal Appell check needs a decomposition of order " +
                           std::to_string(up_to + 1));
    const PrincipalOperators ops = principal_operators();
    PrincipalAppellVerdict v;
    v.P = is_lambda_appell(from_polys(d.P), ops.o120, up_to).appell;
    v.Q = is_lambda_appell(from_polys(d.Q), ops.o201, up_to).appell;
    v.R = is_lambda_appell(from_polys(d.R), ops.o012, up_to).appell;
    return v;
}

std::vector<RelationResidual> verify_component_relations(const CubicDecomposition& d, int up_to) {
    if (up_to > d.order() - 1)
        throw domain_error("component relation check needs a decomposition of order " +
                           std::to_string(up_to + 1));
    const PrincipalOperators ops = principal_operators();
    const DiffOperator o012 = to_normal_ordered(ops.o012);
    const DiffOperator o201 = to_normal_ordered(ops.o201);
    const DiffOperator o120 = to_normal_ordered(ops.o120);
    auto norm = [](long x, long y, long z) { return Rational(x) * Rational(y) * Rational(z); };
    std::vector<RelationResidual> out;
    for (int n = 1; n <= up_to; ++n) {
        out.push_back({1, n, apply(o012, d.a2_at(n)) - norm(n + 1, 3 * n + 1, 3 * n + 2) * d.a2_at(n - 1)});
        out.push_back({2, n, apply(o012, d.b2_at(n)) - norm(n + 1, 3 * n + 2, 3 * n + 4) * d.b2_at(n - 1)});
        out.push_back({3, n, apply(o012, d.R.at(static_cast<size_t>(n + 1))) - norm(n + 1, 3 * n + 4, 3 * n + 5) * d.R.at(static_cast<size_t>(n))});
        out.push_back({4, n, apply(o201, d.a1_at(n)) - norm(n + 1, 3 * n + 1, 3 * n + 2) * d.a1_at(n - 1)});
        out.push_back({5, n, apply(o201, d.Q.at(static_cast<size_t>(n + 1))) - norm(n + 1, 3 * n + 2, 3 * n + 4) * d.Q.at(static_cast<size_t>(n))});
        out.push_back({6, n, apply(o201, d.c2.at(static_cast<size_t>(n))) - norm(n, 3 * n + 1, 3 * n + 2) * d.c2.at(static_cast<size_t>(n - 1))});
        out.push_back({7, n, apply(o120, d.P.at(static_cast<size_t>(n + 1))) - norm(n + 1, 3 * n + 1, 3 * n + 2) * d.P.at(static_cast<size_t>(n))});
        out.push_back({8, n, apply(o120, d.b1.at(static_cast<size_t>(n))) - norm(n, 3 * n - 1, 3 * n + 1) * d.b1.at(static_cast<size_t>(n - 1))});
        out.push_back({9, n, apply(o120, d.c1.at(static_cast<size_t>(n))) - norm(n, 3 * n + 1, 3 * n + 2) * d.c1.at(static_cast<size_t>(n - 1))});
    }
    return out;
}

namespace {

/// Closed forms of Theorem-style coefficient sequences. `family` 0 is the
/// (b2, a1, c1) set with kappa, 1 is the (a2, c2, b1) set with tau.
Rational closed_coefficient(int family, int member, int threshold, const Rational& seed, int n) {
    const Rational t(threshold);
    if (family == 0) {
        const Rational k73 = t + Rational(7, 3), k53 = t + Rational(5, 3);
        switch (member) {
            case 0: // mu_1, n >= 0
                return pochhammer(k73, n) * pochhammer(k53, n) /
                       (pochhammer(Rational(4, 3), n) * pochhammer(Rational(5, 3), n)) *
                       binomial(Rational(n + threshold + 1), n) * seed;
            case 1: // mu_2
                if (n == 0) return Rational(2) * seed / (Rational(3) * (t + Rational(4, 3)));
                return pochhammer(k73, n - 1) * pochhammer(k53, n) /
                       (pochhammer(Rational(4, 3), n) * pochhammer(Rational(5, 3), n - 1)) *
                       binomial(Rational(n + threshold + 1), n) * seed;
            default: // mu_3
                if (n == 0)
                    return Rational(2) * seed /
                           (Rational(9) * (t + Rational(1)) * (t + Rational(4, 3)));
                return pochhammer(k73, n - 1) * pochhammer(k53, n) /
                       (pochhammer(Rational(4, 3), n - 1) * pochhammer(Rational(5, 3), n - 1)) *
                       binomial(Rational(n + threshold), n) * seed / (t + Rational(1));
        }
    }
    const Rational t53 = t + Rational(5, 3), t43 = t + Rational(4, 3);
    switch (member) {
        case 0: // alpha_1, n >= 0
            return pochhammer(t53, n) * pochhammer(t43, n) /
                   (pochhammer(Rational(4, 3), n) * pochhammer(Rational(5, 3), n)) *
                   binomial(Rational(n + threshold + 1), n) * seed;
        case 1: // alpha_2
            if (n == 0) return Rational(2) * seed / (Rational(3) * (t + Rational(1)));
            return pochhammer(t53, n) * pochhammer(t43, n) /
                   (pochhammer(Rational(4, 3), n) * pochhammer(Rational(5, 3), n - 1)) *
                   binomial(Rational(n + threshold), n) * seed / (t + Rational(1));
        default: // alpha_3
            if (n == 0)
                return Rational(2) * seed /
                       (Rational(9) * (t + Rational(1)) * (t + Rational(2, 3)));
            return pochhammer(t53, n - 1) * pochhammer(t43, n) /
                   (pochhammer(Rational(4, 3), n - 1) * pochhammer(Rational(5, 3), n - 1)) *
                   binomial(Rational(n + threshold), n) * seed / (t + Rational(1));
    }
}

SecondaryFamilyProfile profile_family(const std::array<const std::vector<Polynomial>*, 3>& members,
                                      int family, int up_to) {
    SecondaryFamilyProfile p;
    const auto& lead_member = *members[0]; // b2 or a2, the seed carrier
    int threshold = -1;
    for (size_t i = 0; i < lead_member.size(); ++i) {
        if (!lead_member[i].is_zero()) {
            threshold = static_cast<int>(i);
            break;
        }
    }
    if (threshold < 0) {
        // All-zero verdict requires the companions to vanish as well.
        p.thresholds_aligned = true;
        for (const auto* seq : members)
            for (const auto& poly : *seq)
                if (!poly.is_zero()) p.thresholds_aligned = false;
        p.all_zero = true;
        p.degrees_ok = true;
        p.consistent = p.thresholds_aligned;
        return p;
    }

    p.all_zero = false;
    p.threshold = threshold;
    p.seed = lead_member[static_cast<size_t>(threshold)].coeff(0);
    p.thresholds_aligned = true;
    p.degrees_ok = true;
    p.consistent = true;
    for (int member = 0; member < 3; ++member) {
        const auto& seq = *members[member];
        for (int i = 0; i < threshold && i < static_cast<int>(seq.size()); ++i)
            if (!seq[static_cast<size_t>(i)].is_zero()) p.thresholds_aligned = false;
        if (threshold < static_cast<int>(seq.size()) &&
            seq[static_cast<size_t>(threshold)].is_zero())
            p.thresholds_aligned = false;
        for (int n = 0; threshold + n < static_cast<int>(seq.size()) && n <= up_to; ++n) {
            const Polynomial& poly = seq[static_cast<size_t>(threshold + n)];
            if (poly.degree() != n) {
                p.degrees_ok = false;
                break;
            }
            const Rational measured = poly.leading();
            const Rational closed = closed_coefficient(family, member, threshold, p.seed, n);
            p.measured[static_cast<size_t>(member)].push_back(measured);
            p.closed[static_cast<size_t>(member)].push_back(closed);
            if (measured != closed) p.consistent = false;
        }
    }
    if (!p.thresholds_aligned || !p.degrees_ok) p.consistent = false;
    return p;
}

} // namespace

SecondaryProfile secondary_profile(const CubicDecomposition& d, int up_to) {
    SecondaryProfile out;
    out.first = profile_family({&d.b2, &d.a1, &d.c1}, 0, up_to);
    out.second = profile_family({&d.a2, &d.c2, &d.b1}, 1, up_to);
    return out;
}

} // namespace lappell
