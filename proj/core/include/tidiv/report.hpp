#pragma once

#include <string>

#include <json.hpp>

#include "tidiv/problem.hpp"
#include "tidiv/verdict.hpp"

namespace tidiv {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

// Exit code contract: 0 conclusive, 1 error, 2 inconclusive, 3 budget cap.
inline constexpr int kExitConclusive = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitBudget = 3;

struct RunOptions {
    bool p3_table = false;        // corollary decision table instead of the theorem pipeline
    bool include_timing = false;  // wall time is excluded by default: reports stay byte-stable
    bool require_on_divisor = false;
};

struct RunResult {
    nlohmann::json report;
    int exit_code = kExitConclusive;
};

// Canonical echo of a problem file. Exit 0, or throws on parse errors.
RunResult run_parse(const ProblemFile& problem);

// Full pipeline report. Budget overruns yield a partial report, exit 3.
RunResult run_analyze(const ProblemFile& problem, const RunOptions& options = {});

// Threshold / delta-cap / obstruction / comparison table.
RunResult run_bound(std::int64_t n, std::int64_t d, std::optional<std::int64_t> deg_z);

// Log-section rank summary at a point.
RunResult run_rank(const ProblemFile& problem, const std::string& point_text,
                   const RunOptions& options = {});

std::string render_report(const nlohmann::json& report);

}  // namespace tidiv
