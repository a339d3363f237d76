#pragma once

#include <array>
#include <string>
#include <vector>

#include "lappell/lambda.hpp"
#include "lappell/moment_functional.hpp"
#include "lappell/polynomial.hpp"
#include "lappell/sequences.hpp"

namespace lappell {

/// State of the orthogonal-candidate elimination for Lambda with k <= 2:
/// the recurrence prefix B_1..B_3, the ratios lambda_n = rho_n / gamma_{n+1},
/// and the derived polynomials
///   U  = lambda_1 B_2 - lambda_0 B_1^2 + (a_0 - a_1 + a_2)
///   V  = lambda_2 B_3 - lambda_0 B_1 B_2 + rho_1 B_1 - 4 a_1 x
///        - B_2' (lambda_1 B_2 - lambda_0 B_1^2 + rho_0)
///   W1 = -2(a_1 - 3 a_2)(a_1 + 3 a_2) + 3 a_2 (3 a_0 - a_1 - 3 a_2 - U)
///   W2 = -(a_1 + 3 a_2) U + 3 a_2 x (-3 lambda_0 B_1 + U')
///   T  = (2 a_0 - U) U + 2 a_1 x (2 lambda_0 B_1 - U')
struct EliminationState {
    LambdaCoeffs a;
    std::array<Rational, 3> beta;   ///< beta_0..beta_2
    std::array<Rational, 3> gamma;  ///< gamma_1..gamma_3
    std::array<Rational, 3> lambda; ///< lambda_0..lambda_2
    Polynomial B1, B2, B3;
    Polynomial U, V, W1, W2, T;

    EliminationState() : a(std::vector<Rational>{Rational(0)}) {}
};

/// Builds the state from a recurrence prefix. Requires k <= 2, a lowering
/// symbol (no positive integer roots) and nonzero gammas.
EliminationState build_elimination_state(const LambdaCoeffs& a,
                                         const std::array<Rational, 3>& beta,
                                         const std::array<Rational, 3>& gamma);

/// Residuals (left minus right) of the three polynomial identities
///   V^2 = x (6 a_2 x (V' - 2U) - 4 a_1 V)
///   W1 V + 6 a_2 x W2 = 0
///   V W2 = x (W1 (2U - V') - 4 a_1 W2).
/// Requires a_2 != 0 (with a_2 = 0 the identities degenerate; use the
/// Laguerre pipeline instead).
std::array<Polynomial, 3> polynomial_identities(const EliminationState& st);

/// Residual moment vectors of the functional chain at u_0.
struct ChainResiduals {
    std::vector<Rational> transpose_vs_b1;   ///< tLambda(u0) - lambda_0 B_1 u0
    std::vector<Rational> third_order;       ///< a2 x^2 u0''' - (a1-3a2) x u0'' + ... = 0
    std::vector<Rational> second_order;      ///< -3a2 x^2 u0'' + 2(a1-3a2) x u0' - U u0 = 0
    std::vector<Rational> first_order;       ///< -6a2 x^2 u0' - V u0 = 0
    std::vector<Rational> pair_37;           ///< (4a1 x + V) u0' - (2U - V') u0 = 0
    std::vector<Rational> pair_38;           ///< x W1 u0' - W2 u0 = 0
    std::vector<std::vector<Rational>> general_n_12; ///< the general-n second-order identity, n = 1, 2
    std::vector<std::vector<Rational>> general_n_14; ///< the general-n first-order identity, n = 1, 2
};

ChainResiduals functional_chain_residuals(const EliminationState& st, const MomentFunctional& u0,
                                          int up_to);

/// One step of the constraint extraction: the named coefficient, probed as an
/// exact polynomial in the next unknown and solved.
struct Constraint {
    std::string id;        ///< "c1".."c4"
    std::string source;    ///< which identity/coefficient produced it
    std::string relation;  ///< the derived relation, human-readable
    std::vector<Rational> probe_poly; ///< interpolated coefficient polynomial in the unknown
    Rational solved;       ///< value imposed on the unknown
    bool verified = false; ///< coefficient vanishes after imposing
};

struct NonexistenceCertificate {
    LambdaCoeffs a;
    Rational beta0, gamma1, lambda0;
    std::vector<Constraint> constraints;
    Polynomial residual_313;  ///< residual of W1 V + 6 a2 x W2 at the constrained state
    Rational x3_coefficient;  ///< its x^3 coefficient
    Rational closed_form;     ///< -54 a_2^2 lambda_0
    bool contradiction = false; ///< x3 coefficient nonzero, so no orthogonal Lambda-Appell sequence

    NonexistenceCertificate() : a(std::vector<Rational>{Rational(0)}) {}
};

/// Replays the k = 2 elimination for one exact instance: derives
/// lambda_0 = lambda_1 = lambda_2 and beta_0 = beta_1 = beta_2 from the
/// leading coefficients of the polynomial identities, then reports the x^3
/// coefficient of the remaining identity, equal to -54 a_2^2 lambda_0 != 0.
/// Requires a_2 != 0 and a lowering symbol.
NonexistenceCertificate nonexistence_certificate(const LambdaCoeffs& a, const Rational& beta0,
                                                 const Rational& gamma1);

struct LaguerreCharacterization {
    Rational alpha;  ///< a_0 / a_1
    Rational scale;  ///< beta_0 a_1 / (a_0 + a_1)
    Rational beta1, beta2, gamma1, gamma2; ///< forced recurrence data
    Polynomial psi;  ///< Psi(x) in D(x u_0) + Psi u_0 = 0
    bool appell = false;
    bool orthogonal = false;
    bool matches_laguerre = false; ///< affine image equals monic Laguerre(alpha)
    bool psi_residual_zero = false;
    int order = 0;
};

/// The k = 1 pipeline: given beta_0 != 0 the five forced identities pin the
/// recurrence data; the candidate is the scale-beta_0 affine preimage of
/// monic Laguerre(alpha) and must pass the Appell and orthogonality tests.
LaguerreCharacterization laguerre_characterization(const LambdaCoeffs& a, const Rational& beta0,
                                                   int order = 25, int moments = 64);

} // namespace lappell
