#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "lappell/analysis.hpp"
#include "lappell/cubic.hpp"
#include "lappell/diff_operator.hpp"
#include "lappell/lambda.hpp"
#include "lappell/moment_functional.hpp"
#include "lappell/polynomial.hpp"
#include "lappell/rational.hpp"
#include "lappell/sequences.hpp"

namespace lappell {

using json = nlohmann::json;

/// Rationals serialize as canonical "p/q" strings ("q" omitted when 1);
/// integers are also accepted on input.
json to_json(const Rational& x);
Rational rational_from_json(const json& j);

/// Polynomials are arrays of rational strings, index = power; zero is [].
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

/// Normal-ordered operators are [[m, n, "c"], ...] sorted by (n, m).
json to_json(const DiffOperator& t);

/// {"moments": [...], "trusted_to": k}
json to_json(const MomentFunctional& u);

json to_json(const NonexistenceCertificate& cert);
json to_json(const LaguerreCharacterization& lc);
json to_json(const SecondaryProfile& profile);

std::vector<Rational> rationals_from_csv(const std::string& csv);

/// Operator descriptor {"basis": "dx"|"xd"|"factored", "coeffs": [...],
/// "left": [...]} -> (Dx)^i D coefficients. For "factored" the "coeffs"
/// array holds the right factors as [A, B] pairs.
LambdaCoeffs lambda_from_descriptor(const json& j);

/// Sequence descriptor {"family": "hermite"|"laguerre"|"recurrence"|
/// "appell"|"monomial", ...parameters}.
MonicPolySequence sequence_from_descriptor(const json& j);

} // namespace lappell
