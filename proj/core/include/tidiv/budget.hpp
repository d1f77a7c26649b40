#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tidiv {

// Caps on the Groebner engine and on sampling retries. Exceeding a cap is
// a reported error, never a silently wrong answer.
struct Budget {
    std::size_t max_basis_size = 4096;
    std::size_t max_coefficient_bits = 65536;
    std::size_t max_section_retries = 16;
    std::size_t sample_trials = 16;
    bool modular_probe = false;

    static const Budget& defaults() {
        static const Budget b{};
        return b;
    }
};

struct BudgetError : std::runtime_error {
    BudgetError(const std::string& what, std::size_t basis_size, std::size_t coeff_bits)
        : std::runtime_error(what), basis_size(basis_size), coeff_bits(coeff_bits) {}
    std::size_t basis_size;
    std::size_t coeff_bits;
};

}  // namespace tidiv
