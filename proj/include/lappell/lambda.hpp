#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lappell/diff_operator.hpp"
#include "lappell/polynomial.hpp"
#include "lappell/rational.hpp"

namespace lappell {

/// Coefficients a_i of Lambda = sum_i a_i (Dx)^i D. The symbol polynomial is
/// f(x) = sum_i a_i x^i. Trailing zeros are trimmed so a_k != 0 unless k = 0;
/// the zero operator is the single coefficient {0}.
class LambdaCoeffs {
public:
    explicit LambdaCoeffs(std::vector<Rational> a);

    int k() const { return static_cast<int>(a_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return a_; }
    const Rational& at(int i) const;
    bool is_zero() const { return a_.size() == 1 && a_[0].is_zero(); }

    Polynomial symbol() const;

    /// Normalizer rho_n = (n+1) f(n+1).
    Rational rho(int n) const;

    friend bool operator==(const LambdaCoeffs& x, const LambdaCoeffs& y) {
        return x.a_ == y.a_;
    }

private:
    std::vector<Rational> a_;
};

/// Factored form S_{l,t} = prod_{i=-l..-1}(A_i I + B_i xD) · D · prod_{i=1..t}(A_i I + B_i xD),
/// with the implicit A_0 = 1, B_0 = 0 factor. `left` is ordered by ascending
/// index i = -l..-1 (outermost factor first), `right` by i = 1..t.
struct FactoredForm {
    std::vector<std::pair<Rational, Rational>> left;
    std::vector<std::pair<Rational, Rational>> right;
};

/// (Dx)^i D built by explicit composition (the slow, definitional route).
DiffOperator dx_power_d(int i);

/// Normal-ordered Lambda via the second-kind Stirling conversion:
/// sum_m (sum_i a_i S(i+1, m+1)) x^m D^(m+1).
DiffOperator to_normal_ordered(const LambdaCoeffs& a);

/// Coefficients c_m of the x^m D^(m+1) layout of Lambda.
std::vector<Rational> to_xd_coeffs(const LambdaCoeffs& a);

/// Inverse conversion via the signed first-kind Stirling numbers:
/// sum_i c_i x^i D^(i+1) = sum_m (sum_i c_i s(i+1, m+1)) (Dx)^m D.
LambdaCoeffs from_xd_coeffs(const std::vector<Rational>& c);

/// Coefficients of S_{l,t} in the (Dx)^i D basis, built factor by factor
/// from S_{0,0} = D with the one-step left/right recursions.
LambdaCoeffs from_factored(const FactoredForm& s);

/// Right-sided factorization S_{0,k} with prod (A_i + B_i x) = f(x), found by
/// exhaustive rational-root extraction. Factors are the primitive (q x - p)
/// per root p/q, sorted lexicographically by (A, B), with the residual scalar
/// folded into the first factor. Throws domain_error when f has an
/// irreducible factor of degree >= 2 over the rationals.
FactoredForm factor_lambda(const LambdaCoeffs& a);

struct LoweringCheck {
    bool lowering = false;
    std::optional<long> witness; ///< offending positive integer root when false
};

/// Exact test that f(n) != 0 for every positive integer n, by rational-root
/// enumeration on the cleared-denominator symbol. Throws on the zero operator.
LoweringCheck is_lowering(const LambdaCoeffs& a);

/// Transpose operator tLambda = sum_i a_i (-1)^(i+1) (Dx)^i D, normal-ordered.
/// Acts on moment functionals through the functional calculus.
DiffOperator transpose(const LambdaCoeffs& a);

struct MonomialImage {
    Rational coefficient;
    int power = 0;
};

/// Lambda(x^n) = n f(n) x^(n-1), n >= 1.
MonomialImage on_monomial(const LambdaCoeffs& a, int n);

/// All rational roots of p with multiplicity (each root repeated).
std::vector<Rational> rational_roots(const Polynomial& p);

} // namespace lappell
