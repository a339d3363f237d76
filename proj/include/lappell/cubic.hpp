#pragma once

#include <array>
#include <vector>

#include "lappell/diff_operator.hpp"
#include "lappell/lambda.hpp"
#include "lappell/polynomial.hpp"
#include "lappell/sequences.hpp"

namespace lappell {

/// Cubic decomposition of an MPS {W_n}: coefficients of W_m sorted by power
/// mod 3 into three principal (P, Q, R, monic) and six secondary component
/// sequences,
///   W_{3n}   = P_n(x^3)   + x a1_{n-1}(x^3) + x^2 a2_{n-1}(x^3)
///   W_{3n+1} = b1_n(x^3)  + x Q_n(x^3)      + x^2 b2_{n-1}(x^3)
///   W_{3n+2} = c1_n(x^3)  + x c2_n(x^3)     + x^2 R_n(x^3)
/// with deg a1_{n-1}, a2_{n-1}, b2_{n-1} <= n-1 and deg b1_n, c1_n, c2_n <= n.
/// Vectors hold natural indices; the implicit index -1 entries are zero.
struct CubicDecomposition {
    std::vector<Polynomial> P, Q, R;          ///< indices 0..order
    std::vector<Polynomial> a1, a2, b2;       ///< indices 0..order-1
    std::vector<Polynomial> b1, c1, c2;       ///< indices 0..order

    int order() const { return static_cast<int>(P.size()) - 1; }

    /// Component with the paper's indexing; index -1 yields the zero polynomial.
    const Polynomial& a1_at(int n) const;
    const Polynomial& a2_at(int n) const;
    const Polynomial& b2_at(int n) const;

    /// Matrix M_n rows: (P_n, a1_{n-1}, a2_{n-1}; b1_n, Q_n, b2_{n-1};
    /// c1_n, c2_n, R_n).
    std::array<std::array<Polynomial, 3>, 3> matrix(int n) const;
};

/// Splits W(x) = P(x^3) + x Q(x^3) + x^2 R(x^3) into its residue components.
std::array<Polynomial, 3> split3(const Polynomial& w);

/// Rebuilds P(x^3) + x Q(x^3) + x^2 R(x^3).
Polynomial interleave3(const Polynomial& p, const Polynomial& q, const Polynomial& r);

/// Decomposition of W_0..W_{3 up_to + 2}.
CubicDecomposition decompose(const MonicPolySequence& W, int up_to);

/// Exact inverse of decompose: W_0..W_{3 order + 2} as an explicit monic
/// sequence. Rejects decompositions violating the degree bounds.
MonicPolySequence recompose(const CubicDecomposition& d);

struct RelationResidual {
    int relation; ///< 1..9, the coupling relations in paper order
    int n;
    Polynomial residual; ///< left minus right
};

/// Residuals of the nine Appell coupling relations
///   (I+3xD) Q_n = (3n+1) P_n, (2I+3xD) b2_{n-1} = (3n+1) a1_{n-1},
///   3D b1_n = (3n+1) a2_{n-1}, (I+3xD) c2_n = (3n+2) b1_n,
///   (2I+3xD) R_n = (3n+2) Q_n, 3D c1_n = (3n+2) b2_{n-1},
///   (I+3xD) a1_n = (3n+3) c1_n, (2I+3xD) a2_n = (3n+3) c2_n,
///   3D P_{n+1} = (3n+3) R_n
/// for 0 <= n <= up_to. All zero iff the source MPS is Appell.
std::vector<RelationResidual> verify_nine_relations(const CubicDecomposition& d, int up_to);

bool all_zero(const std::vector<RelationResidual>& residuals);

/// The three principal-component operators, built by composition and checked
/// against their (Dx)^i D expansions (2,9,9), (-1,0,9), (2,-9,9).
struct PrincipalOperators {
    LambdaCoeffs o012; ///< D (I+3xD)(2I+3xD)
    LambdaCoeffs o201; ///< (2I+3xD) D (I+3xD)
    LambdaCoeffs o120; ///< (I+3xD)(2I+3xD) D
};

PrincipalOperators principal_operators();

/// (Dx)^i D coefficients of a normal-ordered operator of the pure
/// sum-of-x^m D^(m+1) shape (throws otherwise).
LambdaCoeffs lambda_from_normal_ordered(const DiffOperator& T);

struct PrincipalAppellVerdict {
    bool P = false; ///< P is O_{1,2,0}-Appell
    bool Q = false; ///< Q is O_{2,0,1}-Appell
    bool R = false; ///< R is O_{0,1,2}-Appell
};

PrincipalAppellVerdict verify_principal_appell(const CubicDecomposition& d, int up_to);

/// Residuals of all nine lowered component relations with their stated
/// normalizers, e.g. O_{0,1,2} a2_n = (n+1)(3n+1)(3n+2) a2_{n-1},
/// for 1 <= n <= up_to. Zero for decompositions of Appell sequences.
std::vector<RelationResidual> verify_component_relations(const CubicDecomposition& d, int up_to);

/// Structure of one secondary family: threshold, seed constant, the measured
/// leading coefficients of the three member sequences, and the closed-form
/// values they must equal.
struct SecondaryFamilyProfile {
    bool all_zero = true;
    int threshold = 0; ///< kappa (first family) or tau (second); 0 is legal and flagged notable
    Rational seed;     ///< b2_kappa or a2_tau
    std::array<std::vector<Rational>, 3> measured; ///< per member, index n
    std::array<std::vector<Rational>, 3> closed;
    bool thresholds_aligned = false;
    bool degrees_ok = false; ///< member polys at threshold+n have degree exactly n
    bool consistent = false; ///< measured == closed everywhere both are defined
};

/// Member order: first family (b2, a1, c1) with mu_1, mu_2, mu_3;
/// second family (a2, c2, b1) with alpha_1, alpha_2, alpha_3.
struct SecondaryProfile {
    SecondaryFamilyProfile first;
    SecondaryFamilyProfile second;
};

SecondaryProfile secondary_profile(const CubicDecomposition& d, int up_to);

} // namespace lappell
