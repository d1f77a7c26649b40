// Command line front end: parse | analyze | bound | rank.
//
// Exit codes: 0 conclusive, 1 error, 2 inconclusive, 3 budget cap hit.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tidiv/report.hpp"

namespace {

struct CommonFlags {
    std::optional<std::uint64_t> seed;
    std::string order = "grevlex";
    bool modular_probe = false;
    std::optional<std::size_t> trials;
    std::optional<std::uint64_t> iterate;
    std::optional<std::size_t> max_basis;
    std::optional<std::size_t> max_coeff_bits;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--seed", flags.seed, "seed for all generic-position choices (default 0)");
    cmd->add_option("--order", flags.order, "monomial order: grevlex or lex")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    cmd->add_flag("--modular-probe", flags.modular_probe,
                  "predict basis shape over a word-sized prime before exact runs");
    cmd->add_option("--trials", flags.trials, "sample count for the assumption check (default 16)");
    cmd->add_option("--iterate", flags.iterate, "replace the endomorphism by its l-th iterate");
    cmd->add_option("--max-basis", flags.max_basis, "cap on Groebner basis size");
    cmd->add_option("--max-coeff-bits", flags.max_coeff_bits, "cap on coefficient bit length");
}

tidiv::ProblemFile load_with_flags(const std::string& path, const CommonFlags& flags) {
    tidiv::ProblemFile p = tidiv::load_problem_file(path);
    if (flags.seed) p.seed = *flags.seed;
    if (flags.iterate) p.iterate = *flags.iterate;
    if (flags.trials) p.budgets.sample_trials = *flags.trials;
    if (flags.max_basis) p.budgets.max_basis_size = *flags.max_basis;
    if (flags.max_coeff_bits) p.budgets.max_coefficient_bits = *flags.max_coeff_bits;
    p.budgets.modular_probe = flags.modular_probe;
    return p;
}

int emit(const tidiv::RunResult& result) {
    std::fputs(tidiv::render_report(result.report).c_str(), stdout);
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for totally invariant divisors of P^n endomorphisms"};
    app.require_subcommand(1);

    std::string parse_file;
    CommonFlags parse_flags;
    auto* cmd_parse = app.add_subcommand("parse", "canonicalize and echo a problem file");
    cmd_parse->add_option("file", parse_file, "problem JSON file")->required();
    add_common_flags(cmd_parse, parse_flags);

    std::string analyze_file;
    CommonFlags analyze_flags;
    bool p3_table = false;
    bool timing = false;
    auto* cmd_analyze =
        app.add_subcommand("analyze", "run the invariance / non-normal-degree pipeline");
    cmd_analyze->add_option("file", analyze_file, "problem JSON file")->required();
    cmd_analyze->add_flag("--p3-table", p3_table, "use the P^3 corollary decision table");
    cmd_analyze->add_flag("--timing", timing, "include wall time (breaks byte determinism)");
    add_common_flags(cmd_analyze, analyze_flags);

    std::int64_t bound_n = 0, bound_d = 0;
    std::optional<std::int64_t> bound_degz;
    auto* cmd_bound = app.add_subcommand("bound", "threshold and delta-cap table for (n, d)");
    cmd_bound->add_option("n", bound_n, "ambient dimension")->required();
    cmd_bound->add_option("d", bound_d, "divisor degree")->required();
    cmd_bound->add_option("--degz", bound_degz, "non-normal degree to compare against");

    std::string rank_file, rank_point;
    CommonFlags rank_flags;
    bool on_divisor = false;
    auto* cmd_rank = app.add_subcommand("rank", "log-section evaluation rank at a point");
    cmd_rank->add_option("file", rank_file, "problem JSON file (divisor required)")->required();
    cmd_rank->add_option("point", rank_point, "projective point a0:a1:...:an")->required();
    cmd_rank->add_flag("--on-divisor", on_divisor, "refuse points off the divisor");
    add_common_flags(cmd_rank, rank_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_parse->parsed())
            return emit(tidiv::run_parse(load_with_flags(parse_file, parse_flags)));
        if (cmd_analyze->parsed()) {
            tidiv::RunOptions opts;
            opts.p3_table = p3_table;
            opts.include_timing = timing;
            return emit(tidiv::run_analyze(load_with_flags(analyze_file, analyze_flags), opts));
        }
        if (cmd_bound->parsed()) return emit(tidiv::run_bound(bound_n, bound_d, bound_degz));
        if (cmd_rank->parsed()) {
            tidiv::RunOptions opts;
            opts.require_on_divisor = on_divisor;
            return emit(tidiv::run_rank(load_with_flags(rank_file, rank_flags), rank_point, opts));
        }
    } catch (const tidiv::BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return tidiv::kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return tidiv::kExitError;
    }
    return tidiv::kExitError;
}
