#include "lappell/sequences.hpp"

#include <string>
#include <utility>

#include "lappell/combinatorics.hpp"
#include "lappell/errors.hpp"

namespace lappell {

MonicPolySequence::MonicPolySequence(Generator gen, SeqProvenance provenance)
    : gen_(std::move(gen)),
      provenance_(provenance),
      cache_(std::make_shared<std::vector<Polynomial>>()) {}

const Polynomial& MonicPolySequence::at(int n) const {
    if (n < 0) throw domain_error("sequence index must be non-negative");
    auto& cache = *cache_;
    while (static_cast<int>(cache.size()) <= n) {
        const int idx = static_cast<int>(cache.size());
        Polynomial p = gen_(idx, cache);
        if (p.degree() != idx || !p.is_monic())
            throw domain_error("generator produced a non-monic polynomial at index " +
                               std::to_string(idx));
        cache.push_back(std::move(p));
    }
    return cache[static_cast<size_t>(n)];
}

RecurrencePair RecurrencePair::from_vectors(std::vector<Rational> beta,
                                            std::vector<Rational> gamma) {
    auto betas = std::make_shared<std::vector<Rational>>(std::move(beta));
    auto gammas = std::make_shared<std::vector<Rational>>(std::move(gamma));
    RecurrencePair r;
    r.beta = [betas](int n) {
        if (n < 0 || static_cast<size_t>(n) >= betas->size())
            throw domain_error("beta_" + std::to_string(n) + " not provided");
        return (*betas)[static_cast<size_t>(n)];
    };
    r.gamma = [gammas](int n) {
        if (n < 0 || static_cast<size_t>(n) >= gammas->size())
            throw domain_error("gamma_" + std::to_string(n + 1) + " not provided");
        return (*gammas)[static_cast<size_t>(n)];
    };
    return r;
}

MonicPolySequence from_recurrence(RecurrencePair r) {
    return MonicPolySequence(
        [r = std::move(r)](int n, const std::vector<Polynomial>& prev) -> Polynomial {
            if (n == 0) return Polynomial::constant(Rational(1));
            if (n == 1) return Polynomial::variable() - Polynomial::constant(r.beta(0));
            const Rational g = r.gamma(n - 2);
            if (g.is_zero())
                throw domain_error("gamma_" + std::to_string(n - 1) + " is zero (form not regular)");
            const Polynomial x_shift =
                Polynomial::variable() - Polynomial::constant(r.beta(n - 1));
            return x_shift * prev[static_cast<size_t>(n - 1)] -
                   g * prev[static_cast<size_t>(n - 2)];
        },
        SeqProvenance::Recurrence);
}

MonicPolySequence monomials() {
    return MonicPolySequence(
        [](int n, const std::vector<Polynomial>&) { return Polynomial::monomial(n); },
        SeqProvenance::Explicit);
}

MonicPolySequence shifted_monomials(const Rational& c) {
    return MonicPolySequence(
        [c](int n, const std::vector<Polynomial>&) {
            return pow(Polynomial::variable() + Polynomial::constant(c), n);
        },
        SeqProvenance::Explicit);
}

MonicPolySequence hermite() {
    RecurrencePair r;
    r.beta = [](int) { return Rational(0); };
    r.gamma = [](int n) { return Rational(n + 1); };
    return from_recurrence(std::move(r));
}

MonicPolySequence laguerre(const Rational& alpha) {
    if (alpha.is_negative_integer())
        throw domain_error("laguerre parameter must not be a negative integer");
    RecurrencePair r;
    r.beta = [alpha](int n) { return Rational(2 * n + 1) + alpha; };
    r.gamma = [alpha](int n) { return Rational(n + 1) * (Rational(n + 1) + alpha); };
    return from_recurrence(std::move(r));
}

MonicPolySequence from_polys(std::vector<Polynomial> polys) {
    auto data = std::make_shared<std::vector<Polynomial>>(std::move(polys));
    return MonicPolySequence(
        [data](int n, const std::vector<Polynomial>&) -> Polynomial {
            if (static_cast<size_t>(n) >= data->size())
                throw domain_error("explicit sequence has only " + std::to_string(data->size()) +
                                   " polynomials");
            return (*data)[static_cast<size_t>(n)];
        },
        SeqProvenance::Explicit);
}

StructureCoefficients structure_coefficients(const MonicPolySequence& B, int up_to) {
    if (up_to < 0) throw domain_error("negative order");
    StructureCoefficients sc;
    sc.beta.reserve(static_cast<size_t>(up_to) + 1);
    // Expanding x B_m over the basis yields beta_m and, for m >= 1, the chi
    // row chi_{m-1, 0..m-1}.
    for (int m = 0; m <= up_to; ++m) {
        Polynomial r = Polynomial::variable() * B.at(m);
        std::vector<Rational> expansion(static_cast<size_t>(m) + 2, Rational(0));
        for (int j = m + 1; j >= 0; --j) {
            const Rational c = r.coeff(j);
            if (c.is_zero()) continue;
            expansion[static_cast<size_t>(j)] = c;
            r -= c * B.at(j);
        }
        sc.beta.push_back(expansion[static_cast<size_t>(m)]);
        if (m >= 1) {
            expansion.resize(static_cast<size_t>(m)); // keep chi_{m-1,0..m-1}
            sc.chi.push_back(std::move(expansion));
        }
    }
    return sc;
}

OrthogonalityVerdict is_orthogonal(const MonicPolySequence& B, int up_to) {
    if (up_to < 2) throw domain_error("orthogonality check needs order >= 2");
    const StructureCoefficients sc = structure_coefficients(B, up_to);
    OrthogonalityVerdict v;
    v.order = up_to;
    for (size_t n = 0; n < sc.chi.size(); ++n) {
        const auto& row = sc.chi[n];
        for (size_t nu = 0; nu + 1 < row.size(); ++nu) {
            if (!row[nu].is_zero()) {
                v.witness = OrthogonalityVerdict::Violation{static_cast<int>(n),
                                                            static_cast<int>(nu), row[nu]};
                return v;
            }
        }
        if (row.back().is_zero()) {
            v.witness = OrthogonalityVerdict::Violation{static_cast<int>(n),
                                                        static_cast<int>(n), Rational(0)};
            return v;
        }
    }
    v.orthogonal = true;
    return v;
}

std::vector<Rational> gamma_view(const StructureCoefficients& sc) {
    std::vector<Rational> g;
    g.reserve(sc.chi.size());
    for (const auto& row : sc.chi) g.push_back(row.back());
    return g;
}

MonicPolySequence lowered_sequence(const MonicPolySequence& B, const LambdaCoeffs& a) {
    const auto check = is_lowering(a);
    if (!check.lowering)
        throw domain_error("not a lowering operator (positive integer root " +
                           std::to_string(check.witness.value()) + ")");
    const DiffOperator lambda = to_normal_ordered(a);
    return MonicPolySequence(
        [B, a, lambda](int n, const std::vector<Polynomial>&) {
            return (Rational(1) / a.rho(n)) * apply(lambda, B.at(n + 1));
        },
        SeqProvenance::Transformed);
}

AppellVerdict is_lambda_appell(const MonicPolySequence& B, const LambdaCoeffs& a, int up_to) {
    const auto check = is_lowering(a);
    if (!check.lowering)
        throw domain_error("not a lowering operator (positive integer root " +
                           std::to_string(check.witness.value()) + ")");
    const DiffOperator lambda = to_normal_ordered(a);
    AppellVerdict v;
    for (int n = 0; n < up_to; ++n) {
        if (apply(lambda, B.at(n + 1)) != a.rho(n) * B.at(n)) {
            v.witness = n;
            return v;
        }
    }
    v.appell = true;
    return v;
}

MonicPolySequence build_lambda_appell(const LambdaCoeffs& a,
                                      std::function<Rational(int)> constant_terms) {
    const auto check = is_lowering(a);
    if (!check.lowering)
        throw domain_error("not a lowering operator (positive integer root " +
                           std::to_string(check.witness.value()) + ")");
    const Polynomial f = a.symbol();
    return MonicPolySequence(
        [a, f, constant_terms = std::move(constant_terms)](
            int n, const std::vector<Polynomial>& prev) -> Polynomial {
            if (n == 0) return Polynomial::constant(Rational(1));
            // Lambda(x^j) = j f(j) x^(j-1), so matching Lambda B_n = rho_{n-1} B_{n-1}
            // coefficientwise gives c_j = rho_{n-1} [B_{n-1}]_{j-1} / (j f(j)).
            const Polynomial& below = prev[static_cast<size_t>(n - 1)];
            const Rational rho = a.rho(n - 1);
            std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
            c[0] = constant_terms(n);
            for (int j = 1; j <= n; ++j)
                c[static_cast<size_t>(j)] =
                    rho * below.coeff(j - 1) / (Rational(j) * f(Rational(j)));
            return Polynomial(std::move(c));
        },
        SeqProvenance::AppellBuilt);
}

MonicPolySequence build_lambda_appell(const LambdaCoeffs& a) {
    return build_lambda_appell(a, [](int) { return Rational(0); });
}

bool dual_appell_check(const MonicPolySequence& B, const LambdaCoeffs& a, int up_to, int moments) {
    const DiffOperator lambda = to_normal_ordered(a);
    const auto dual = dual_sequence(B, up_to + 2, moments);

    // (b) tLambda(u_n) = rho_n u_{n+1} on trustworthy moments.
    for (int n = 0; n <= up_to; ++n) {
        const MomentFunctional lhs = apply_transpose(lambda, dual[static_cast<size_t>(n)]);
        const MomentFunctional rhs = a.rho(n) * dual[static_cast<size_t>(n + 1)];
        const int common = std::min(lhs.trusted_to(), rhs.trusted_to());
        if (common < 0) throw truncation_error("no trustworthy moments left");
        for (int j = 0; j <= common; ++j)
            if (lhs.moment(j) != rhs.moment(j)) return false;
    }

    // (c) u_n = (n!)^{-1} (prod_{s=1..n} f(s))^{-1} (tLambda)^n u_0.
    const Polynomial f = a.symbol();
    MomentFunctional acc = dual[0];
    Rational norm(1);
    for (int n = 1; n <= up_to; ++n) {
        acc = apply_transpose(lambda, acc);
        norm *= Rational(n) * f(Rational(n));
        const MomentFunctional expect = dual[static_cast<size_t>(n)];
        const int common = std::min(acc.trusted_to(), expect.trusted_to());
        if (common < 0) throw truncation_error("no trustworthy moments left");
        const Rational inv = Rational(1) / norm;
        for (int j = 0; j <= common; ++j)
            if (inv * acc.moment(j) != expect.moment(j)) return false;
    }
    return true;
}

MonicPolySequence affine_transform(const MonicPolySequence& B, const Rational& scale,
                                   const Rational& shift) {
    if (scale.is_zero()) throw domain_error("affine transform with zero scale");
    const Polynomial inner =
        Polynomial::monomial(1, scale) + Polynomial::constant(shift);
    return MonicPolySequence(
        [B, scale, inner](int n, const std::vector<Polynomial>&) {
            return pow(Rational(1) / scale, n) * compose(B.at(n), inner);
        },
        SeqProvenance::Transformed);
}

DegreeStructure degree_structure(const std::vector<Polynomial>& f, const LambdaCoeffs& a) {
    const DiffOperator lambda = to_normal_ordered(a);
    // Validate rho_n f_n = Lambda(f_{n+1}) with some nonzero rho_n.
    for (size_t n = 0; n + 1 < f.size(); ++n) {
        const Polynomial img = apply(lambda, f[n + 1]);
        if (f[n].is_zero()) {
            if (!img.is_zero())
                throw domain_error("inputs violate the lowering relation at index " +
                                   std::to_string(n));
            continue;
        }
        if (img.is_zero())
            throw domain_error("inputs violate the lowering relation at index " +
                               std::to_string(n));
        const Rational rho = img.leading() / f[n].leading();
        if (rho.is_zero() || img != rho * f[n])
            throw domain_error("inputs violate the lowering relation at index " +
                               std::to_string(n));
    }
    DegreeStructure d;
    size_t n0 = 0;
    while (n0 < f.size() && f[n0].is_zero()) ++n0;
    if (n0 == f.size()) {
        d.all_zero = true;
        return d;
    }
    d.n0 = static_cast<int>(n0);
    d.ladder = true;
    for (size_t n = n0; n + 1 < f.size(); ++n) {
        if (!f[n + 1].degree() || !f[n].degree() ||
            *f[n + 1].degree() != *f[n].degree() + 1) {
            d.ladder = false;
            break;
        }
    }
    return d;
}

std::vector<MomentFunctional> dual_sequence(const MonicPolySequence& B, int count, int moments) {
    std::vector<Polynomial> basis;
    basis.reserve(static_cast<size_t>(moments) + 1);
    for (int j = 0; j <= moments; ++j) basis.push_back(B.at(j));
    return dual_sequence(std::span<const Polynomial>(basis), count);
}

} // namespace lappell
