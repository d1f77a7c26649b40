#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tidiv/budget.hpp"
#include "tidiv/divisor.hpp"
#include "tidiv/polynomial.hpp"

namespace tidiv {

// JSON problem description: ambient dimension, optional endomorphism forms
// and divisor form as polynomial text, plus seed/budget/iterate knobs.
struct ProblemFile {
    std::size_t n = 0;
    std::optional<std::vector<std::string>> endomorphism;
    std::optional<std::string> divisor;
    std::uint64_t seed = 0;
    Budget budgets;
    std::optional<std::uint64_t> iterate;
};

ProblemFile load_problem_file(const std::string& path);
ProblemFile parse_problem_json(const std::string& text);

// "a0:a1:...:an" with rational entries, optional surrounding parentheses.
ProjPoint parse_proj_point(const std::string& text, std::size_t num_vars);

}  // namespace tidiv
