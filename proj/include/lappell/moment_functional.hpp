#pragma once

#include <span>
#include <vector>

#include "lappell/diff_operator.hpp"
#include "lappell/lambda.hpp"
#include "lappell/polynomial.hpp"
#include "lappell/rational.hpp"

namespace lappell {

/// A moment functional truncated to N moments: (u)_n = <u, x^n> for
/// n = 0..N. `trusted_to` is the largest index whose value is meaningful;
/// every operation documents how it degrades (or improves) that bound.
class MomentFunctional {
public:
    MomentFunctional(std::vector<Rational> moments, int trusted_to);
    explicit MomentFunctional(std::vector<Rational> moments);

    static MomentFunctional zero(int bound);

    /// N: moments stored for indices 0..N.
    int bound() const { return static_cast<int>(moments_.size()) - 1; }
    int trusted_to() const { return trusted_to_; }
    const Rational& moment(int n) const;
    const std::vector<Rational>& moments() const { return moments_; }

    MomentFunctional with_trust(int trusted_to) const;

    MomentFunctional operator-() const;
    friend MomentFunctional operator+(const MomentFunctional& a, const MomentFunctional& b);
    friend MomentFunctional operator-(const MomentFunctional& a, const MomentFunctional& b);
    friend MomentFunctional operator*(const Rational& c, const MomentFunctional& u);

    /// Equal moments on the common trusted range (and equal trust).
    friend bool operator==(const MomentFunctional& a, const MomentFunctional& b) {
        return a.trusted_to_ == b.trusted_to_ && a.moments_ == b.moments_;
    }

private:
    std::vector<Rational> moments_;
    int trusted_to_;
};

/// <u, p> = sum p_j (u)_j. Throws truncation_error when deg p exceeds the
/// trusted range.
Rational pair(const MomentFunctional& u, const Polynomial& p);

/// (Du)_n = -n (u)_{n-1}. Trust improves by one (capped at the bound).
MomentFunctional derivative_form(const MomentFunctional& u, int order = 1);

/// (pu)_n = sum_j p_j (u)_{n+j}. Trust drops by deg p.
MomentFunctional left_multiply(const Polynomial& p, const MomentFunctional& u);

/// Adjoint action: (tT u)_n = <u, T(x^n)>, straight from the definition.
/// Trust shifts by the operator's largest x-power gain.
MomentFunctional apply_transpose(const DiffOperator& T, const MomentFunctional& u);

/// Functional-calculus action of a normal-ordered operator on a form:
/// each term c x^m D^n contributes c x^m (D^n u) with D the form derivative
/// and x^m the moment shift.
MomentFunctional apply_to_form(const DiffOperator& T, const MomentFunctional& u);

/// Equation sum_i p_i(x) u^(i) = 0. Orders are distinct, at least one term.
struct FunctionalEquation {
    std::vector<std::pair<Polynomial, int>> terms;
};

/// The classical equation D(phi u) + psi u = 0, expanded by the product rule
/// to phi u' + (phi' + psi) u = 0.
FunctionalEquation classical_equation(const Polynomial& phi, const Polynomial& psi);

/// Entry n is <sum_i p_i u^(i), x^n>, n = 0..up_to. All-zero means u
/// satisfies the equation to the tested order.
std::vector<Rational> residual(const FunctionalEquation& eq, const MomentFunctional& u,
                               int up_to);

/// Dual sequence of the monic basis B_0..B_N (basis.size() == N+1):
/// functionals u_0..u_{count-1} with <u_n, B_m> = delta_{n,m}, solved from
/// the unitriangular change of basis between {B_n} and {x^n}.
std::vector<MomentFunctional> dual_sequence(std::span<const Polynomial> basis, int count);

struct Lemma41Result {
    bool product_identity = false;   ///< Lambda(f p) expansion, exact polynomial identity
    bool transpose_identity = false; ///< tLambda(f u) expansion, on trustworthy moments
    int checked_moments = 0;
};

/// Verifies the k=2 product expansions
///   Lambda(f p) = f Lambda(p) + p Lambda(f) + 2(a1+3a2) x f' p'
///                 + 3 a2 x^2 f'' p' + 3 a2 x^2 f' p''
///   tLambda(f u) = f tLambda(u) - Lambda(f) u + 2 a1 (f' + x f'') u
///                  + (2(a1-3a2) x f' - 3 a2 x^2 f'') u' - 3 a2 x^2 f' u''
/// for the given f, p, u.
Lemma41Result lambda_product_check(const LambdaCoeffs& a, const Polynomial& f,
                                   const Polynomial& p, const MomentFunctional& u);

} // namespace lappell
