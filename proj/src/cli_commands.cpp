#include "lappell/cli_commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "lappell/errors.hpp"
#include "lappell/json_io.hpp"

namespace lappell {

namespace {

struct OperatorFlags {
    std::string basis = "dx";
    std::string coeffs;
    std::string right;
    std::string left;
};

struct SequenceFlags {
    std::string family;
    std::string alpha;
    std::string beta;
    std::string gamma;
    std::string coeffs;
    std::string constants;
    std::string constants_fill = "0";
    std::string shift;
    std::string seq_json;
};

void add_operator_flags(CLI::App* cmd, OperatorFlags& f) {
    cmd->add_option("--basis", f.basis, "Operator basis: dx, xd or factored")
        ->check(CLI::IsMember({"dx", "xd", "factored"}));
    cmd->add_option("--coeffs", f.coeffs, "Coefficients, comma separated (dx/xd basis)");
    cmd->add_option("--right", f.right, "Right factors A,B;A,B;... (factored basis)");
    cmd->add_option("--left", f.left, "Left factors A,B;A,B;... (factored basis)");
}

std::vector<std::pair<Rational, Rational>> factor_pairs_from_flag(const std::string& s) {
    std::vector<std::pair<Rational, Rational>> out;
    std::istringstream is(s);
    std::string pair_str;
    while (std::getline(is, pair_str, ';')) {
        const auto v = rationals_from_csv(pair_str);
        if (v.size() != 2) throw parse_error("factor '" + pair_str + "' is not an A,B pair");
        out.emplace_back(v[0], v[1]);
    }
    return out;
}

LambdaCoeffs operator_from_flags(const OperatorFlags& f) {
    if (f.basis == "factored") {
        FactoredForm form;
        if (!f.right.empty()) form.right = factor_pairs_from_flag(f.right);
        if (!f.left.empty()) form.left = factor_pairs_from_flag(f.left);
        return from_factored(form);
    }
    if (f.coeffs.empty()) throw parse_error("--coeffs required for basis " + f.basis);
    const auto c = rationals_from_csv(f.coeffs);
    return f.basis == "dx" ? LambdaCoeffs(c) : from_xd_coeffs(c);
}

void add_sequence_flags(CLI::App* cmd, SequenceFlags& f) {
    cmd->add_option("--family", f.family,
                    "Sequence family: hermite, laguerre, recurrence, appell or monomial");
    cmd->add_option("--alpha", f.alpha, "Laguerre parameter");
    cmd->add_option("--beta", f.beta, "Recurrence beta_n values, comma separated");
    cmd->add_option("--gamma", f.gamma, "Recurrence gamma_{n+1} values, comma separated");
    cmd->add_option("--family-coeffs", f.coeffs, "Appell operator coefficients (dx basis)");
    cmd->add_option("--constants", f.constants, "Appell constant terms, comma separated");
    cmd->add_option("--constants-fill", f.constants_fill,
                    "Appell constant term beyond the given list (default 0)");
    cmd->add_option("--shift", f.shift, "Monomial family shift c for (x+c)^n");
    cmd->add_option("--seq-json", f.seq_json, "Full sequence descriptor as JSON ('-' = stdin)");
}

json build_descriptor(const SequenceFlags& f, std::istream& in) {
    if (!f.seq_json.empty()) {
        if (f.seq_json == "-") {
            json j;
            in >> j;
            return j;
        }
        return json::parse(f.seq_json);
    }
    if (f.family.empty()) throw parse_error("a sequence needs --family or --seq-json");
    json j{{"family", f.family}};
    if (!f.alpha.empty()) j["alpha"] = f.alpha;
    if (!f.shift.empty()) j["shift"] = f.shift;
    if (!f.beta.empty()) {
        json arr = json::array();
        for (const auto& r : rationals_from_csv(f.beta)) arr.push_back(r.str());
        j["beta"] = arr;
    }
    if (!f.gamma.empty()) {
        json arr = json::array();
        for (const auto& r : rationals_from_csv(f.gamma)) arr.push_back(r.str());
        j["gamma"] = arr;
    }
    if (!f.coeffs.empty()) {
        json arr = json::array();
        for (const auto& r : rationals_from_csv(f.coeffs)) arr.push_back(r.str());
        j["coeffs"] = arr;
    }
    if (!f.constants.empty()) {
        json arr = json::array();
        for (const auto& r : rationals_from_csv(f.constants)) arr.push_back(r.str());
        j["constants"] = arr;
    }
    j["constants_fill"] = f.constants_fill;
    return j;
}

void print(const json& j, const std::string& mode, std::ostream& out) {
    if (mode == "pretty")
        out << j.dump(2) << "\n";
    else
        out << j.dump() << "\n";
}

} // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Exact toolkit for lowering operators of the form sum a_i (Dx)^i D,\n"
                 "their Appell sequences, cubic decompositions and orthogonality analysis"};
    app.require_subcommand(1);

    int moments = 64;
    std::string output_mode = "json";
    app.add_option("--moments,--max-degree", moments,
                   "Truncation bound for moment vectors (default 64)");
    app.add_option("--output", output_mode, "Output style: json or pretty")
        ->check(CLI::IsMember({"json", "pretty"}));

    OperatorFlags conv_op;
    std::string conv_to;
    auto* conv = app.add_subcommand("convert-operator", "Convert between operator bases");
    add_operator_flags(conv, conv_op);
    conv->add_option("--to", conv_to, "Target basis: dx, xd or normal")
        ->check(CLI::IsMember({"dx", "xd", "normal"}));

    OperatorFlags lower_op;
    auto* lower = app.add_subcommand("check-lowering", "Test the lowering-operator criterion");
    add_operator_flags(lower, lower_op);

    OperatorFlags apply_op;
    std::string apply_poly;
    bool apply_stdin = false;
    auto* applyc = app.add_subcommand("apply-operator", "Apply an operator to a polynomial");
    add_operator_flags(applyc, apply_op);
    applyc->add_option("--poly", apply_poly, "Polynomial as a JSON array of rationals");
    applyc->add_flag("--stdin", apply_stdin, "Read the polynomial JSON from stdin");

    OperatorFlags build_op;
    int build_count = 10;
    std::string build_constants, build_fill = "0";
    auto* build = app.add_subcommand("build-appell", "Construct a Lambda-Appell sequence");
    add_operator_flags(build, build_op);
    build->add_option("--count", build_count, "Number of polynomials to emit");
    build->add_option("--constants", build_constants, "Constant terms, comma separated");
    build->add_option("--constants-fill", build_fill, "Constant term beyond the list");

    OperatorFlags check_op;
    SequenceFlags check_seq;
    int check_order = 20;
    auto* checka = app.add_subcommand("check-appell", "Test the Lambda-Appell property");
    add_operator_flags(checka, check_op);
    add_sequence_flags(checka, check_seq);
    checka->add_option("--order", check_order, "Check Lambda B_{n+1} = rho_n B_n for n < order");

    SequenceFlags dual_seq;
    int dual_count = 4;
    auto* dualc = app.add_subcommand("dual-sequence", "Dual functionals of a monic sequence");
    add_sequence_flags(dualc, dual_seq);
    dualc->add_option("--count", dual_count, "Number of dual functionals");

    SequenceFlags sc_seq;
    int sc_upto = 10;
    auto* scc = app.add_subcommand("structure-coeffs",
                                   "Structure coefficients and orthogonality verdict");
    add_sequence_flags(scc, sc_seq);
    scc->add_option("--upto", sc_upto, "Compute beta_0..beta_upto and chi rows below it");

    SequenceFlags dc_seq;
    int dc_upto = 5;
    auto* dcc = app.add_subcommand("decompose-cubic", "Cubic decomposition matrices M_n");
    add_sequence_flags(dcc, dc_seq);
    dcc->add_option("--upto", dc_upto, "Emit M_0..M_upto");

    SequenceFlags vr_seq;
    int vr_upto = 5;
    auto* vrc = app.add_subcommand("verify-cd-relations",
                                   "Verify the nine Appell coupling relations of a decomposition");
    add_sequence_flags(vrc, vr_seq);
    vrc->add_option("--upto", vr_upto, "Verify relations for n <= upto");

    SequenceFlags sec_seq;
    int sec_upto = 8;
    auto* secc = app.add_subcommand("secondary-coeffs",
                                    "Secondary component structure (thresholds, mu/alpha)");
    add_sequence_flags(secc, sec_seq);
    secc->add_option("--upto", sec_upto, "Profile coefficients for n <= upto");

    std::string ne_a0, ne_a1, ne_a2, ne_beta0 = "0", ne_gamma1 = "1";
    auto* nec = app.add_subcommand("verify-nonexistence",
                                   "Replay the k=2 orthogonality elimination to its contradiction");
    nec->add_option("--a0", ne_a0)->required();
    nec->add_option("--a1", ne_a1)->required();
    nec->add_option("--a2", ne_a2)->required();
    nec->add_option("--beta0", ne_beta0, "Free beta_0 instance value (default 0)");
    nec->add_option("--gamma1", ne_gamma1, "Free gamma_1 instance value (default 1)");

    std::string lg_a0, lg_a1, lg_beta0;
    int lg_order = 25;
    auto* lgc = app.add_subcommand("laguerre-check",
                                   "Forced recurrence data and verification for the k=1 case");
    lgc->add_option("--a0", lg_a0)->required();
    lgc->add_option("--a1", lg_a1)->required();
    lgc->add_option("--beta0", lg_beta0)->required();
    lgc->add_option("--order", lg_order, "Appell/orthogonality check order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        if (*conv) {
            const LambdaCoeffs a = operator_from_flags(conv_op);
            std::string target = conv_to;
            if (target.empty()) target = conv_op.basis == "dx" ? "xd" : "dx";
            json j;
            if (target == "xd") {
                json arr = json::array();
                for (const auto& c : to_xd_coeffs(a)) arr.push_back(c.str());
                j = json{{"basis", "xd"}, {"coeffs", arr}};
            } else if (target == "dx") {
                json arr = json::array();
                for (const auto& c : a.coeffs()) arr.push_back(c.str());
                j = json{{"basis", "dx"}, {"coeffs", arr}};
            } else {
                j = json{{"basis", "normal"}, {"terms", to_json(to_normal_ordered(a))}};
            }
            print(j, output_mode, out);
        } else if (*lower) {
            const auto check = is_lowering(operator_from_flags(lower_op));
            json j{{"lowering", check.lowering}};
            if (check.witness) j["witness"] = *check.witness;
            print(j, output_mode, out);
        } else if (*applyc) {
            const LambdaCoeffs a = operator_from_flags(apply_op);
            json pj;
            if (apply_stdin)
                in >> pj;
            else if (!apply_poly.empty())
                pj = json::parse(apply_poly);
            else
                throw parse_error("apply-operator needs --poly or --stdin");
            const Polynomial p = polynomial_from_json(pj);
            print(to_json(apply(to_normal_ordered(a), p)), output_mode, out);
        } else if (*build) {
            const LambdaCoeffs a = operator_from_flags(build_op);
            std::vector<Rational> constants;
            if (!build_constants.empty()) constants = rationals_from_csv(build_constants);
            const Rational fill = Rational::from_string(build_fill);
            auto table = std::make_shared<std::vector<Rational>>(std::move(constants));
            const MonicPolySequence seq = build_lambda_appell(a, [table, fill](int n) {
                if (n >= 0 && static_cast<size_t>(n) < table->size())
                    return (*table)[static_cast<size_t>(n)];
                return fill;
            });
            json arr = json::array();
            for (int n = 0; n < build_count; ++n) arr.push_back(to_json(seq.at(n)));
            print(json{{"polys", arr}}, output_mode, out);
        } else if (*checka) {
            const LambdaCoeffs a = operator_from_flags(check_op);
            const MonicPolySequence seq = sequence_from_descriptor(build_descriptor(check_seq, in));
            const auto verdict = is_lambda_appell(seq, a, check_order);
            json j{{"appell", verdict.appell}, {"order", check_order}};
            if (verdict.witness) j["witness"] = *verdict.witness;
            print(j, output_mode, out);
        } else if (*dualc) {
            const MonicPolySequence seq = sequence_from_descriptor(build_descriptor(dual_seq, in));
            const auto dual = dual_sequence(seq, dual_count, moments);
            json arr = json::array();
            for (const auto& u : dual) arr.push_back(to_json(u));
            print(json{{"functionals", arr}}, output_mode, out);
        } else if (*scc) {
            const MonicPolySequence seq = sequence_from_descriptor(build_descriptor(sc_seq, in));
            const auto sc = structure_coefficients(seq, sc_upto);
            json betas = json::array(), chis = json::array();
            for (const auto& b : sc.beta) betas.push_back(b.str());
            for (const auto& row : sc.chi) {
                json r = json::array();
                for (const auto& v : row) r.push_back(v.str());
                chis.push_back(r);
            }
            json j{{"beta", betas}, {"chi", chis}};
            if (sc_upto >= 2) {
                const auto verdict = is_orthogonal(seq, sc_upto);
                j["orthogonal_to_order"] = verdict.orthogonal;
                if (verdict.orthogonal) {
                    json g = json::array();
                    for (const auto& v : gamma_view(sc)) g.push_back(v.str());
                    j["gamma"] = g;
                } else if (verdict.witness) {
                    j["witness"] = json{{"n", verdict.witness->n},
                                        {"nu", verdict.witness->nu},
                                        {"value", verdict.witness->value.str()}};
                }
            }
            print(j, output_mode, out);
        } else if (*dcc) {
            const MonicPolySequence seq = sequence_from_descriptor(build_descriptor(dc_seq, in));
            const CubicDecomposition d = decompose(seq, dc_upto);
            json matrices = json::array();
            for (int n = 0; n <= dc_upto; ++n) {
                const auto m = d.matrix(n);
                json rows = json::array();
                for (const auto& row : m) {
                    json r = json::array();
                    for (const auto& p : row) r.push_back(to_json(p));
                    rows.push_back(r);
                }
                matrices.push_back(rows);
            }
            print(json{{"order", dc_upto}, {"matrices", matrices}}, output_mode, out);
        } else if (*vrc) {
            const MonicPolySequence seq = sequence_from_descriptor(build_descriptor(vr_seq, in));
            const CubicDecomposition d = decompose(seq, vr_upto + 1);
            const auto residuals = verify_nine_relations(d, vr_upto);
            json violations = json::array();
            for (const auto& r : residuals)
                if (!r.residual.is_zero())
                    violations.push_back(json{{"relation", r.relation},
                                              {"n", r.n},
                                              {"residual", to_json(r.residual)}});
            const auto pa = verify_principal_appell(d, vr_upto);
            const auto comp = verify_component_relations(d, vr_upto);
            print(json{{"nine_relations_zero", all_zero(residuals)},
                       {"violations", violations},
                       {"principal_appell", json{{"P", pa.P}, {"Q", pa.Q}, {"R", pa.R}}},
                       {"component_relations_zero", all_zero(comp)}},
                  output_mode, out);
        } else if (*secc) {
            const MonicPolySequence seq = sequence_from_descriptor(build_descriptor(sec_seq, in));
            const CubicDecomposition d = decompose(seq, sec_upto + 1);
            print(to_json(secondary_profile(d, sec_upto)), output_mode, out);
        } else if (*nec) {
            const Rational a2 = Rational::from_string(ne_a2);
            if (a2.is_zero())
                throw domain_error("a_2 = 0 is the k=1 case; use laguerre-check");
            const LambdaCoeffs a({Rational::from_string(ne_a0), Rational::from_string(ne_a1), a2});
            const auto cert = nonexistence_certificate(a, Rational::from_string(ne_beta0),
                                                       Rational::from_string(ne_gamma1));
            print(to_json(cert), output_mode, out);
        } else if (*lgc) {
            const LambdaCoeffs a({Rational::from_string(lg_a0), Rational::from_string(lg_a1)});
            const auto lc = laguerre_characterization(a, Rational::from_string(lg_beta0), lg_order,
                                                      moments);
            print(to_json(lc), output_mode, out);
        }
    } catch (const parse_error& e) {
        err << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}

} // namespace lappell
