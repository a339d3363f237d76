#include "lappell/json_io.hpp"

#include <memory>
#include <sstream>

#include "lappell/errors.hpp"

namespace lappell {

json to_json(const Rational& x) {
    return x.str();
}

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw parse_error("expected a rational string, got " + j.dump());
}

json to_json(const Polynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

Polynomial polynomial_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("expected a polynomial coefficient array");
    std::vector<Rational> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(rational_from_json(e));
    return Polynomial(std::move(c));
}

json to_json(const DiffOperator& t) {
    json arr = json::array();
    for (const auto& [key, c] : t.terms())
        arr.push_back(json::array({key.second, key.first, to_json(c)}));
    return arr;
}

json to_json(const MomentFunctional& u) {
    json arr = json::array();
    for (const auto& m : u.moments()) arr.push_back(to_json(m));
    return json{{"moments", arr}, {"trusted_to", u.trusted_to()}};
}

json to_json(const NonexistenceCertificate& cert) {
    json constraints = json::array();
    for (const auto& c : cert.constraints) {
        json probe = json::array();
        for (const auto& v : c.probe_poly) probe.push_back(to_json(v));
        constraints.push_back(json{{"id", c.id},
                                   {"source", c.source},
                                   {"relation", c.relation},
                                   {"probe_poly", probe},
                                   {"solved", to_json(c.solved)},
                                   {"verified", c.verified}});
    }
    json coeffs = json::array();
    for (const auto& v : cert.a.coeffs()) coeffs.push_back(to_json(v));
    return json{{"a", coeffs},
                {"beta0", to_json(cert.beta0)},
                {"gamma1", to_json(cert.gamma1)},
                {"lambda0", to_json(cert.lambda0)},
                {"constraints", constraints},
                {"residual", "-54*a2^2*lambda0"},
                {"residual_polynomial", to_json(cert.residual_313)},
                {"residual_x3", to_json(cert.x3_coefficient)},
                {"residual_x3_expected", to_json(cert.closed_form)},
                {"orthogonal_appell_exists", !cert.contradiction}};
}

json to_json(const LaguerreCharacterization& lc) {
    return json{{"alpha", to_json(lc.alpha)},
                {"scale", to_json(lc.scale)},
                {"beta1", to_json(lc.beta1)},
                {"beta2", to_json(lc.beta2)},
                {"gamma1", to_json(lc.gamma1)},
                {"gamma2", to_json(lc.gamma2)},
                {"psi", to_json(lc.psi)},
                {"appell", lc.appell},
                {"orthogonal", lc.orthogonal},
                {"matches_laguerre", lc.matches_laguerre},
                {"psi_residual_zero", lc.psi_residual_zero},
                {"order", lc.order}};
}

namespace {

json family_to_json(const SecondaryFamilyProfile& f, const char* threshold_name,
                    const std::array<const char*, 3>& member_names,
                    const std::array<const char*, 3>& coeff_names) {
    json out;
    out["all_zero"] = f.all_zero;
    if (f.all_zero) return out;
    out[threshold_name] = f.threshold;
    out["threshold_zero_notable"] = f.threshold == 0;
    out["seed"] = to_json(f.seed);
    for (int m = 0; m < 3; ++m) {
        json measured = json::array(), closed = json::array();
        for (const auto& v : f.measured[static_cast<size_t>(m)]) measured.push_back(to_json(v));
        for (const auto& v : f.closed[static_cast<size_t>(m)]) closed.push_back(to_json(v));
        out[std::string(coeff_names[static_cast<size_t>(m)])] =
            json{{"member", member_names[static_cast<size_t>(m)]},
                 {"measured", measured},
                 {"closed_form", closed}};
    }
    out["thresholds_aligned"] = f.thresholds_aligned;
    out["degrees_ok"] = f.degrees_ok;
    out["consistent"] = f.consistent;
    return out;
}

} // namespace

json to_json(const SecondaryProfile& profile) {
    return json{{"first_family",
                 family_to_json(profile.first, "kappa", {"b2", "a1", "c1"},
                                {"mu1", "mu2", "mu3"})},
                {"second_family",
                 family_to_json(profile.second, "tau", {"a2", "c2", "b1"},
                                {"alpha1", "alpha2", "alpha3"})}};
}

std::vector<Rational> rationals_from_csv(const std::string& csv) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream is(csv);
    while (std::getline(is, item, ',')) {
        // tolerate surrounding spaces
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw parse_error("empty entry in '" + csv + "'");
        out.push_back(Rational::from_string(item.substr(b, e - b + 1)));
    }
    if (out.empty()) throw parse_error("empty rational list");
    return out;
}

namespace {

std::vector<std::pair<Rational, Rational>> factor_pairs_from_json(const json& j) {
    std::vector<std::pair<Rational, Rational>> out;
    if (!j.is_array()) throw parse_error("factor list must be an array of [A,B] pairs");
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw parse_error("factor must be an [A,B] pair");
        out.emplace_back(rational_from_json(e[0]), rational_from_json(e[1]));
    }
    return out;
}

} // namespace

LambdaCoeffs lambda_from_descriptor(const json& j) {
    if (!j.is_object() || !j.contains("basis"))
        throw parse_error("operator descriptor needs a \"basis\" field");
    const std::string basis = j.at("basis").get<std::string>();
    if (basis == "factored") {
        FactoredForm form;
        if (j.contains("coeffs")) form.right = factor_pairs_from_json(j.at("coeffs"));
        if (j.contains("right")) form.right = factor_pairs_from_json(j.at("right"));
        if (j.contains("left")) form.left = factor_pairs_from_json(j.at("left"));
        return from_factored(form);
    }
    if (!j.contains("coeffs")) throw parse_error("operator descriptor needs \"coeffs\"");
    std::vector<Rational> c;
    for (const auto& e : j.at("coeffs")) c.push_back(rational_from_json(e));
    if (basis == "dx") return LambdaCoeffs(std::move(c));
    if (basis == "xd") return from_xd_coeffs(c);
    throw parse_error("unknown operator basis '" + basis + "'");
}

MonicPolySequence sequence_from_descriptor(const json& j) {
    if (!j.is_object() || !j.contains("family"))
        throw parse_error("sequence descriptor needs a \"family\" field");
    const std::string family = j.at("family").get<std::string>();
    if (family == "hermite") return hermite();
    if (family == "laguerre") {
        if (!j.contains("alpha")) throw parse_error("laguerre needs \"alpha\"");
        return laguerre(rational_from_json(j.at("alpha")));
    }
    if (family == "monomial") {
        if (j.contains("shift")) return shifted_monomials(rational_from_json(j.at("shift")));
        return monomials();
    }
    if (family == "recurrence") {
        if (!j.contains("beta") || !j.contains("gamma"))
            throw parse_error("recurrence needs \"beta\" and \"gamma\" arrays");
        std::vector<Rational> beta, gamma;
        for (const auto& e : j.at("beta")) beta.push_back(rational_from_json(e));
        for (const auto& e : j.at("gamma")) gamma.push_back(rational_from_json(e));
        return from_recurrence(RecurrencePair::from_vectors(std::move(beta), std::move(gamma)));
    }
    if (family == "appell") {
        if (!j.contains("coeffs")) throw parse_error("appell needs operator \"coeffs\"");
        std::vector<Rational> c;
        for (const auto& e : j.at("coeffs")) c.push_back(rational_from_json(e));
        std::vector<Rational> constants;
        if (j.contains("constants"))
            for (const auto& e : j.at("constants")) constants.push_back(rational_from_json(e));
        Rational fill(0);
        if (j.contains("constants_fill")) fill = rational_from_json(j.at("constants_fill"));
        auto table = std::make_shared<std::vector<Rational>>(std::move(constants));
        return build_lambda_appell(LambdaCoeffs(std::move(c)), [table, fill](int n) {
            if (n >= 0 && static_cast<size_t>(n) < table->size())
                return (*table)[static_cast<size_t>(n)];
            return fill;
        });
    }
    throw parse_error("unknown sequence family '" + family + "'");
}

} // namespace lappell
