#include "tidiv/report.hpp"

#include <chrono>

#include "tidiv/parse.hpp"
#include "tidiv/prng.hpp"

namespace tidiv {

namespace {

using nlohmann::json;

json budget_json(const Budget& b) {
    return json{{"max_basis", b.max_basis_size},
                {"max_coeff_bits", b.max_coefficient_bits},
                {"trials", b.sample_trials},
                {"modular_probe", b.modular_probe}};
}

json input_echo(const ProblemFile& p, std::vector<Polynomial>* forms_out,
                Polynomial* divisor_out) {
    json in;
    in["n"] = p.n;
    in["seed"] = p.seed;
    in["iterate"] = p.iterate ? json(*p.iterate) : json(1);
    in["budgets"] = budget_json(p.budgets);
    if (p.endomorphism) {
        json arr = json::array();
        for (const auto& text : *p.endomorphism) {
            Polynomial f = parse_polynomial(text, p.n + 1);
            arr.push_back(f.to_string());
            if (forms_out) forms_out->push_back(std::move(f));
        }
        in["endomorphism"] = arr;
    } else {
        in["endomorphism"] = nullptr;
    }
    if (p.divisor) {
        Polynomial d = parse_polynomial(*p.divisor, p.n + 1);
        in["divisor"] = d.to_string();
        if (divisor_out) *divisor_out = std::move(d);
    } else {
        in["divisor"] = nullptr;
    }
    return in;
}

json header(const char* command) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["tool_version"] = kToolVersion;
    doc["command"] = command;
    return doc;
}

json rational_json(const Rational& r) { return json(to_string(r)); }

json invariance_json(const InvarianceCertificate& cert) {
    json j;
    j["invariant"] = cert.invariant;
    j["scalar"] = cert.invariant ? rational_json(cert.scalar) : json(nullptr);
    j["failed_stage"] = cert.invariant ? json(nullptr) : json(cert.failed_stage);
    return j;
}

json ramification_json(const RamificationData& ram) {
    json j;
    j["jacobian_degree"] = ram.jac.homogeneous_degree() ? *ram.jac.homogeneous_degree() : 0;
    j["divisor_multiplicity"] = ram.divisor_multiplicity;
    j["effective"] = ram.effective;
    if (ram.effective) {
        j["residual"] = ram.log_residual.to_string();
        auto rd = ram.log_residual.total_degree();
        j["residual_degree"] = rd ? *rd : 0;
    } else {
        j["residual"] = nullptr;
        j["residual_degree"] = nullptr;
    }
    return j;
}

json singularity_json(const SingularityReport& s) {
    json j;
    j["sing_dimension"] = s.sing_profile.dimension;
    j["sing_degree"] = s.sing_profile.dimension >= 0 ? json(s.sing_profile.degree) : json(nullptr);
    j["z_degree"] = s.z_degree;
    j["pure_expected_dimension"] = s.z_is_pure_expected_dim;
    j["section_seed"] = s.section_seed;
    return j;
}

json comparison_json(const C2Comparison& c) {
    json j;
    j["lhs_m_poly"] = c.lhs_m_poly;
    j["rhs_m_poly"] = c.rhs_m_poly;
    j["lhs_leading"] = c.lhs_leading;
    j["rhs_leading_cap"] = c.rhs_leading_cap;
    j["leading_le"] = c.leading_le;
    j["leading_equal"] = c.leading_equal;
    j["subleading"] = c.subleading;
    j["strictness_checked"] = c.strictness_checked;
    j["contradiction"] = c.contradiction;
    return j;
}

json point_json(const ProjPoint& p) {
    json arr = json::array();
    for (const auto& c : p) arr.push_back(to_string(c));
    return arr;
}

json assumption_json(const AssumptionReport& a) {
    json j;
    j["vacuous"] = a.vacuous;
    j["seed"] = a.seed;
    j["samples"] = a.samples;
    j["normal_crossing"] = a.normal_crossing;
    j["indeterminate"] = a.indeterminate;
    json fails = json::array();
    for (const auto& f : a.failures) {
        json w;
        w["point"] = point_json(f.point);
        w["status"] = nc_status_name(f.status);
        w["multiplicity"] = f.multiplicity;
        w["tangent_cone_rank"] = f.tangent_cone_rank;
        fails.push_back(w);
    }
    j["failures"] = fails;
    return j;
}

json verdict_json(const Verdict& v) {
    json j;
    j["conclusion"] = conclusion_name(v.conclusion);
    j["n"] = v.n;
    j["d"] = v.d;
    j["m"] = v.m;
    j["iterate_used"] = v.iterate_used;
    j["threshold"] = rational_json(v.threshold);
    j["deg_z"] = v.deg_z ? json(*v.deg_z) : json(nullptr);
    json rules = json::array();
    for (const auto& r : v.rules) {
        json rule;
        rule["tag"] = r.tag;
        rule["provenance"] =
            r.provenance == Provenance::ComputedHere ? "computed-here" : "cited-external";
        rule["detail"] = r.detail;
        rules.push_back(rule);
    }
    j["rules"] = rules;
    return j;
}

}  // namespace

RunResult run_parse(const ProblemFile& problem) {
    json doc = header("parse");
    doc["input"] = input_echo(problem, nullptr, nullptr);
    return {doc, kExitConclusive};
}

RunResult run_analyze(const ProblemFile& problem, const RunOptions& options) {
    auto started = std::chrono::steady_clock::now();
    json doc = header("analyze");
    doc["pipeline"] = options.p3_table ? "corollary-p3-table" : "theorem-bound";

    std::vector<Polynomial> forms;
    Polynomial divisor;
    doc["input"] = input_echo(problem, &forms, &divisor);
    if (!problem.endomorphism || !problem.divisor)
        throw std::invalid_argument("analyze needs both an endomorphism and a divisor");

    try {
        Endomorphism f = Endomorphism::validate(forms, problem.budgets);
        json validation;
        validation["n"] = f.ambient_dim();
        validation["m"] = f.degree();
        validation["base_locus_empty"] = true;
        doc["stages"]["validation"] = validation;

        AnalyzeConfig config;
        config.seed = problem.seed;
        config.iterate = problem.iterate.value_or(1);
        config.budget = problem.budgets;

        Verdict v = options.p3_table ? classify_p3(f, divisor, config)
                                     : analyze(f, divisor, config);

        doc["stages"]["invariance"] = invariance_json(v.invariance);
        doc["stages"]["ramification"] =
            v.ramification ? ramification_json(*v.ramification) : json(nullptr);
        doc["stages"]["singularity"] =
            v.singularity ? singularity_json(*v.singularity) : json(nullptr);
        doc["stages"]["z_avoids_ramification"] =
            v.z_avoids_ramification ? json(*v.z_avoids_ramification) : json(nullptr);
        doc["stages"]["chern"] =
            v.comparison ? json{{"comparison", comparison_json(*v.comparison)}} : json(nullptr);
        if (v.invariance.invariant) {
            doc["stages"]["assumption"] = assumption_json(sample_assumption(
                divisor, problem.budgets.sample_trials, problem.seed, problem.budgets));
        } else {
            doc["stages"]["assumption"] = nullptr;
        }
        doc["verdict"] = verdict_json(v);

        if (options.include_timing) {
            auto elapsed = std::chrono::steady_clock::now() - started;
            doc["timing_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        }
        return {doc, conclusive(v.conclusion) ? kExitConclusive : kExitInconclusive};
    } catch (const BudgetError& e) {
        doc["budget_error"] = {{"message", e.what()},
                               {"basis_size", e.basis_size},
                               {"coeff_bits", e.coeff_bits}};
        return {doc, kExitBudget};
    }
}

RunResult run_bound(std::int64_t n, std::int64_t d, std::optional<std::int64_t> deg_z) {
    json doc = header("bound");
    doc["n"] = n;
    doc["d"] = d;
    Rational threshold = bound_threshold(n, d);
    doc["threshold"] = rational_json(threshold);
    doc["delta_cap"] = plane_curve_delta_bound(d);
    doc["normality_obstruction"] = normality_obstruction(n, d);
    if (d == n + 1) {
        doc["excluded"] = "d = n+1 is excluded for prime divisors (cited-external)";
        doc["comparison"] = nullptr;
    } else if (d > n + 1) {
        doc["excluded"] = "d > n+1 contradicts the ramification formula";
        doc["comparison"] = nullptr;
    } else if (deg_z) {
        doc["deg_z"] = *deg_z;
        doc["comparison"] = comparison_json(c2_comparison(n, d, *deg_z));
    } else {
        // contradiction holds exactly for deg Z <= threshold
        if (threshold >= 0) {
            Integer floor = threshold.get_num() / threshold.get_den();
            doc["contradiction_for_deg_z_up_to"] = floor.get_si();
        } else {
            doc["contradiction_for_deg_z_up_to"] = nullptr;  // bound vacuous
        }
        doc["comparison"] = nullptr;
    }
    return {doc, kExitConclusive};
}

RunResult run_rank(const ProblemFile& problem, const std::string& point_text,
                   const RunOptions& options) {
    json doc = header("rank");
    Polynomial divisor;
    doc["input"] = input_echo(problem, nullptr, &divisor);
    if (!problem.divisor) throw std::invalid_argument("rank needs a divisor");
    ProjPoint p = parse_proj_point(point_text, problem.n + 1);
    doc["point"] = point_json(p);

    if (options.require_on_divisor && divisor.evaluate(p) != 0)
        throw std::invalid_argument("point does not lie on the divisor");

    try {
        LogSectionMatrix m = log_section_matrix(divisor, p);
        json mj;
        mj["chart"] = m.chart;
        mj["basis"] = stalk_basis_name(m.basis_tag);
        mj["rank"] = m.rank;
        mj["rank_is_lower_bound"] = m.rank_is_lower_bound;
        if (m.basis_tag == StalkBasis::SmoothPoint) mj["pivot"] = m.pivot;
        json rows = json::array();
        for (const auto& row : m.rows) {
            json r = json::array();
            for (const auto& c : row) r.push_back(to_string(c));
            rows.push_back(r);
        }
        mj["rows"] = rows;
        doc["matrix"] = mj;
        return {doc, kExitConclusive};
    } catch (const BudgetError& e) {
        doc["budget_error"] = {{"message", e.what()},
                               {"basis_size", e.basis_size},
                               {"coeff_bits", e.coeff_bits}};
        return {doc, kExitBudget};
    }
}

std::string render_report(const nlohmann::json& report) { return report.dump(2) + "\n"; }

}  // namespace tidiv
