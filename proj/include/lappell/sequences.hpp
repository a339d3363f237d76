#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "lappell/lambda.hpp"
#include "lappell/moment_functional.hpp"
#include "lappell/polynomial.hpp"

namespace lappell {

enum class SeqProvenance { Recurrence, AppellBuilt, Explicit, Transformed };

/// Lazily extended monic polynomial sequence: deg B_n = n, leading
/// coefficient 1, B_0 = 1. Extension is confined to one thread (the cache is
/// append-only and unsynchronized); already-computed polynomials may be read
/// concurrently.
class MonicPolySequence {
public:
    /// Produces B_n given read access to B_0..B_{n-1}.
    using Generator = std::function<Polynomial(int, const std::vector<Polynomial>&)>;

    MonicPolySequence(Generator gen, SeqProvenance provenance);

    /// B_n, generating and validating any missing prefix.
    const Polynomial& at(int n) const;

    SeqProvenance provenance() const { return provenance_; }

private:
    Generator gen_;
    SeqProvenance provenance_;
    std::shared_ptr<std::vector<Polynomial>> cache_;
};

/// Beta/gamma providers for the three-term recurrence; gamma(n) is
/// gamma_{n+1} and must be nonzero wherever used.
struct RecurrencePair {
    std::function<Rational(int)> beta;
    std::function<Rational(int)> gamma;

    static RecurrencePair from_vectors(std::vector<Rational> beta, std::vector<Rational> gamma);
};

/// B_1 = x - beta_0, B_{n+2} = (x - beta_{n+1}) B_{n+1} - gamma_{n+1} B_n.
MonicPolySequence from_recurrence(RecurrencePair r);

/// The monomial sequence x^n.
MonicPolySequence monomials();

/// (x + c)^n — the standard translated Appell seed.
MonicPolySequence shifted_monomials(const Rational& c);

/// Monic Hermite: beta_n = 0, gamma_{n+1} = n+1.
MonicPolySequence hermite();

/// Monic Laguerre(alpha): beta_n = 2n + alpha + 1,
/// gamma_{n+1} = (n+1)(n+alpha+1). Requires alpha not a negative integer.
MonicPolySequence laguerre(const Rational& alpha);

/// Explicit finite prefix (throws when extended past the given data).
MonicPolySequence from_polys(std::vector<Polynomial> polys);

/// Structure coefficients of x B_{n+1} = B_{n+2} + beta_{n+1} B_{n+1}
/// + sum_{nu<=n} chi_{n,nu} B_nu (plus beta_0 from x B_0).
struct StructureCoefficients {
    std::vector<Rational> beta;           ///< beta_0..beta_upTo
    std::vector<std::vector<Rational>> chi; ///< chi[n] = row chi_{n,0..n}, n < upTo
};

StructureCoefficients structure_coefficients(const MonicPolySequence& B, int up_to);

struct OrthogonalityVerdict {
    bool orthogonal = false;
    int order = 0; ///< verified through chi row order-1 ("to order N")
    struct Violation {
        int n, nu;
        Rational value;
    };
    std::optional<Violation> witness;
};

/// Orthogonality to finite order: chi_{n,nu} = 0 for nu < n and
/// chi_{n,n} != 0, for all chi rows n < up_to.
OrthogonalityVerdict is_orthogonal(const MonicPolySequence& B, int up_to);

/// Gamma view gamma_{n+1} = chi_{n,n} of an orthogonal sequence's rows.
std::vector<Rational> gamma_view(const StructureCoefficients& sc);

/// B^[1]_n = rho_n^{-1} (Lambda B_{n+1}), rho_n = (n+1) f(n+1).
/// Requires a lowering operator.
MonicPolySequence lowered_sequence(const MonicPolySequence& B, const LambdaCoeffs& a);

struct AppellVerdict {
    bool appell = false;
    std::optional<int> witness; ///< first n with Lambda B_{n+1} != rho_n B_n
};

/// Exact test of Lambda B_{n+1} = rho_n B_n for all n < up_to.
AppellVerdict is_lambda_appell(const MonicPolySequence& B, const LambdaCoeffs& a, int up_to);

/// The Lambda-Appell sequence with prescribed constant terms: B_0 = 1 and
/// each B_{n+1} is the unique monic solution of Lambda B_{n+1} = rho_n B_n
/// with constant term constant_terms(n+1). The kernel of a lowering Lambda
/// on polynomials is exactly the constants, so the non-constant coefficients
/// solve a diagonal system with pivots j f(j) != 0.
MonicPolySequence build_lambda_appell(const LambdaCoeffs& a,
                                      std::function<Rational(int)> constant_terms);

/// Defaults: all constant terms zero.
MonicPolySequence build_lambda_appell(const LambdaCoeffs& a);

/// Both dual-sequence characterizations of the Appell property:
/// tLambda(u_n) = rho_n u_{n+1} and u_n = (n!)^{-1} (prod f(s))^{-1} (tLambda)^n u_0,
/// verified on trustworthy moments.
bool dual_appell_check(const MonicPolySequence& B, const LambdaCoeffs& a, int up_to, int moments);

/// B~_n(x) = scale^{-n} B_n(scale x + shift); recurrence data transform as
/// beta~ = (beta - shift)/scale, gamma~ = gamma/scale^2.
MonicPolySequence affine_transform(const MonicPolySequence& B, const Rational& scale,
                                   const Rational& shift);

struct DegreeStructure {
    bool all_zero = false;
    int n0 = 0;        ///< smallest index of a nonzero element
    bool ladder = false; ///< deg f_{n+1} = deg f_n + 1 for n0 <= n < checked range
};

/// Classifies a sequence satisfying rho_n f_n = Lambda(f_{n+1}) for nonzero
/// normalizers rho_n (detected by proportionality; inputs violating the
/// relation are rejected).
DegreeStructure degree_structure(const std::vector<Polynomial>& f, const LambdaCoeffs& a);

/// Dual functionals of B (moments to index `moments`).
std::vector<MomentFunctional> dual_sequence(const MonicPolySequence& B, int count, int moments);

} // namespace lappell
