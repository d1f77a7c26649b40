#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tidiv/polynomial.hpp"

namespace tidiv {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

// Text grammar: terms separated by +/-; a term is a product of factors, a
// factor is a rational literal, a variable X<k> (aliases x,y,z,w for
// X0..X3) with an optional ^<positive int>, or a parenthesized group.
// Whitespace is insignificant. Parse, print, parse is a fixed point.
Polynomial parse_polynomial(std::string_view text, std::size_t num_vars);

}  // namespace tidiv
