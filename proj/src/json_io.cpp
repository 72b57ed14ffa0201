#include "newthyper/json_io.hpp"

#include <sstream>

namespace newthyper {

namespace {

Rational field_rational(const json& j, const std::string& key, Rational fallback) {
    if (!j.contains(key)) return fallback;
    try {
        if (j[key].is_number_integer())
            return Rational(j[key].get<long long>());
        return rational_parse(j[key].get<std::string>());
    } catch (const std::exception& e) {
        throw SpecError("field '" + key + "': " + e.what());
    }
}

std::vector<Rational> field_rationals(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_array())
        throw SpecError("missing sequence field '" + key + "'");
    std::vector<Rational> out;
    for (const auto& v : j[key]) {
        try {
            if (v.is_number_integer())
                out.push_back(Rational(v.get<long long>()));
            else
                out.push_back(rational_parse(v.get<std::string>()));
        } catch (const std::exception& e) {
            throw SpecError("field '" + key + "': " + std::string(e.what()));
        }
    }
    return out;
}

}  // namespace

GridParams parse_grid_params(const json& j) {
    if (!j.contains("family"))
        throw SpecError("params must name a 'family'");
    GridParams p;
    try {
        p.family = family_from_name(j["family"].get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SpecError(e.what());
    }
    p.tau1 = field_rational(j, "tau1", Rational(0));
    p.a1 = field_rational(j, "a1", Rational(0));
    p.gamma = field_rational(j, "gamma", Rational(0));
    p.alpha = field_rational(j, "alpha", Rational(0));
    p.beta = field_rational(j, "beta", Rational(0));
    p.nu = field_rational(j, "nu", Rational(0));
    p.q = field_rational(j, "q", Rational(0));
    return p;
}

InstanceSpec parse_instance_spec(const json& j) {
    InstanceSpec spec;
    std::string source = j.value("source", j.contains("family") || j.contains("params")
                                               ? "family"
                                               : "explicit");
    if (source == "family") {
        spec.source = InstanceSpec::Source::FamilyParams;
        json params = j.contains("params") ? j["params"] : j;
        if (!params.contains("family") && j.contains("family"))
            params["family"] = j["family"];
        spec.params = parse_grid_params(params);
    } else if (source == "explicit") {
        spec.source = InstanceSpec::Source::ExplicitSequences;
        spec.lambda = field_rationals(j, "lambda");
        spec.tau = field_rationals(j, "tau");
        spec.a = field_rationals(j, "a");
        if (spec.lambda.size() != spec.tau.size() || spec.tau.size() != spec.a.size())
            throw SpecError("explicit sequences must have equal length");
    } else {
        throw SpecError("unknown source '" + source + "'");
    }
    if (j.contains("N")) {
        if (!j["N"].is_number_integer() || j["N"].get<long>() < 0)
            throw SpecError("field 'N' must be a nonnegative integer");
        spec.N = j["N"].get<long>();
    }
    return spec;
}

HyperData make_data(const InstanceSpec& spec, long N) {
    if (spec.source == InstanceSpec::Source::FamilyParams) {
        try {
            return build_family(spec.params, N);
        } catch (const AdmissibilityError& e) {
            throw SpecError(e.what());
        }
    }
    if (static_cast<long>(spec.lambda.size()) < N + 1)
        throw SpecError("explicit sequences provide " +
                        std::to_string(spec.lambda.size()) + " values but N = " +
                        std::to_string(N) + " needs at least N+1");
    HyperData data(SeqSpec::explicit_values(spec.lambda),
                   SeqSpec::explicit_values(spec.tau),
                   SeqSpec::explicit_values(spec.a), N);
    ValidationReport report = validate(data);
    if (!report.valid()) {
        std::ostringstream os;
        os << "invalid instance:";
        for (const auto& v : report.violations) os << " [" << v.message << "]";
        throw SpecError(os.str());
    }
    return data;
}

json rational_json(const Rational& r) { return rational_str(r); }

json rationals_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(rational_str(r));
    return out;
}

json matrix_json(const std::vector<std::vector<Rational>>& m) {
    json out = json::array();
    for (const auto& row : m) out.push_back(rationals_json(row));
    return out;
}

json poly_json(const MonomialPoly& p) {
    return json{{"basis", "monomial"}, {"coeffs", rationals_json(p.coeffs())}};
}

json poly_json(const NewtonPoly& p) {
    return json{{"basis", "newton"},
                {"grid", rationals_json(p.grid())},
                {"coeffs", rationals_json(p.coeffs())}};
}

json validation_json(const ValidationReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back(v.message);
    return json{{"valid", r.valid()}, {"finite", r.finite}, {"violations", violations}};
}

json classify_json(const FamilyClass& c) {
    json params = json::object();
    for (const auto& [k, v] : c.fit_params) params[k] = rational_str(v);
    return json{{"spectrum", spectrum_name(c.spectrum_type)},
                {"grid", grid_name(c.grid_type)},
                {"label", c.label},
                {"fit_params", params},
                {"ambiguities", c.ambiguities},
                {"flags", c.flags}};
}

json construct_report(const HyperData& data) {
    const long N = data.N();
    json polys = json::array();
    for (long n = 0; n <= N; ++n) {
        NewtonPoly p = build_P(data, n);
        polys.push_back(json{{"n", n},
                             {"newton_coeffs", rationals_json(p.coeffs())},
                             {"monomial_coeffs", rationals_json(to_monomial(p).coeffs())}});
    }
    ExpansionMatrix W = expansion_matrix(data, Normalization::Monic, N);
    RecurrenceData rc = recurrence_coeffs(data);
    std::vector<Rational> u(rc.u.begin() + 1, rc.u.end());
    return json{{"N", N},
                {"polynomials", polys},
                {"W", matrix_json(W.W)},
                {"recurrence", json{{"b", rationals_json(rc.b)},
                                    {"u", rationals_json(u)},
                                    {"h", rationals_json(rc.h)}}}};
}

json moments_report(const HyperData& data) {
    MomentTable t = moment_table(data);
    MomentFunctional f = monomial_moments(data);
    json out{{"N", t.N},
             {"psi", matrix_json(t.psi)},
             {"zeta", rationals_json(t.zeta)},
             {"y", rationals_json(t.y)},
             {"c", rationals_json(f.c)},
             {"H", rationals_json(f.H)},
             {"hankel", rationals_json(f.hankel)},
             {"nondegenerate", f.nondegenerate}};
    if (t.q_defined)
        out["Q"] = matrix_json(t.Q);

    // symmetry of psi, verified in-report
    bool sym = true;
    for (long n = 0; n <= t.N && sym; ++n)
        for (long k = 0; k <= t.N && sym; ++k)
            if (t.psi_at(n, k) != t.psi_at(k, n)) sym = false;
    out["psi_symmetric"] = sym;
    return out;
}

json verify_report(const HyperData& data, bool& all_pass) {
    const long N = data.N();
    all_pass = true;
    json out{{"N", N}};

    ConditionReport cond = check_conditions(data);
    json cond_violations = json::array();
    for (const auto& v : cond.violations)
        cond_violations.push_back(
            json{{"n", v.n}, {"k", v.k}, {"residual", rational_str(v.residual)}});
    out["conditions"] = json{{"pass", cond.pass()},
                             {"violations", cond_violations},
                             {"k1_residuals", rationals_json(cond.k1_residuals)},
                             {"k2_residuals", rationals_json(cond.k2_residuals)}};
    if (!cond.pass()) all_pass = false;

    MomentTable table = moment_table(data);
    QRecurrenceReport qrec = q_recurrences_check(table, data);
    json qrec_violations = json::array();
    for (const auto& v : qrec.violations)
        qrec_violations.push_back(json{{"recurrence", v.which},
                                       {"n", v.n},
                                       {"k", v.k},
                                       {"residual", rational_str(v.residual)}});
    out["q_recurrences"] = json{{"pass", qrec.pass()},
                                {"checked", qrec.checked},
                                {"violations", qrec_violations}};
    // an unchecked (undefined-Q) report is skipped, not failed
    if (qrec.checked && !qrec.violations.empty()) all_pass = false;

    GramReport gram = gram_check(data);
    out["gram"] = json{{"pass", gram.pass()},
                       {"diagonal", gram.diagonal},
                       {"diag_matches_h", gram.diag_matches_h},
                       {"matrix", matrix_json(gram.gram)}};
    if (!gram.pass()) all_pass = false;

    RecurrenceData rc = recurrence_coeffs(data);
    json nonzero_residuals = json::array();
    const long res_hi = std::min(N - 1, static_cast<long>(rc.u.size()) - 2);
    for (long n = 0; n <= res_hi; ++n) {
        MonomialPoly r = three_term_residual(data, rc, n);
        if (!r.is_zero())
            nonzero_residuals.push_back(json{{"n", n}, {"residual", poly_json(r)}});
    }
    out["three_term"] = json{{"pass", nonzero_residuals.empty()},
                             {"nonzero_residuals", nonzero_residuals}};
    if (!nonzero_residuals.empty()) all_pass = false;

    bool nodes_distinct = true;
    for (long i = 0; i <= N && nodes_distinct; ++i)
        for (long k = i + 1; k <= N && nodes_distinct; ++k)
            if (data.a(i) == data.a(k)) nodes_distinct = false;
    if (nodes_distinct) {
        DualSystem ds = dual_system(data);
        json mismatches = json::array();
        for (long n = 0; n <= N; ++n) {
            MonomialPoly Pn = to_monomial(build_P_hyplike(data, n));
            for (long k = 0; k <= N; ++k) {
                Rational lhs = Pn.eval(data.a(k));
                Rational rhs = ds.dual_polys[static_cast<std::size_t>(k)].eval(data.lambda(n));
                if (lhs != rhs)
                    mismatches.push_back(json{{"n", n},
                                              {"k", k},
                                              {"P_n(a_k)", rational_str(lhs)},
                                              {"P*_k(lambda_n)", rational_str(rhs)}});
            }
        }
        out["duality"] = json{{"checked", true}, {"pass", mismatches.empty()},
                              {"mismatches", mismatches}};
        if (!mismatches.empty()) all_pass = false;
    } else {
        out["duality"] = json{{"checked", false}, {"reason", "repeated nodes"}};
    }

    ValidationReport vr = validate(data);
    if (vr.finite && nodes_distinct) {
        FiniteWeights fw = finite_weights(data);
        std::vector<MonomialPoly> P;
        for (long n = 0; n <= N; ++n) P.push_back(to_monomial(build_P(data, n)));
        bool discrete_ok = true;
        for (long n = 0; n <= N && discrete_ok; ++n)
            for (long m = 0; m <= N && discrete_ok; ++m) {
                Rational s(0);
                for (long j = 0; j <= N; ++j)
                    s += fw.w[static_cast<std::size_t>(j)] *
                         P[static_cast<std::size_t>(n)].eval(fw.nodes[static_cast<std::size_t>(j)]) *
                         P[static_cast<std::size_t>(m)].eval(fw.nodes[static_cast<std::size_t>(j)]);
                Rational expect = n == m ? rc.h_at(n) : Rational(0);
                if (s != expect) discrete_ok = false;
            }
        out["finite"] = json{{"weights", rationals_json(fw.w)},
                             {"nodes", rationals_json(fw.nodes)},
                             {"discrete_gram_pass", discrete_ok}};
        if (!discrete_ok) all_pass = false;
    }

    out["pass"] = all_pass;
    return out;
}

std::string bu_csv(const RecurrenceData& rc) {
    std::ostringstream os;
    os << "n,b_n,u_n\n";
    const std::size_t rows = std::max(rc.b.size(), rc.u.size());
    for (std::size_t n = 0; n < rows; ++n) {
        os << n << ',';
        if (n < rc.b.size()) os << rational_str(rc.b[n]);
        os << ',';
        if (n >= 1 && n < rc.u.size()) os << rational_str(rc.u[n]);
        os << '\n';
    }
    return os.str();
}

}  // namespace newthyper
