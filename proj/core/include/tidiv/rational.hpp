#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace tidiv {

// Exact rational scalar. GMP keeps values canonical: denominator positive,
// gcd(|num|, den) = 1. All coefficient arithmetic in the library goes
// through this type; there is no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", or "p/q" with q > 0.
Rational rational_from_string(const std::string& text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

// Bit length of the larger of |numerator| and denominator. Used for
// coefficient-growth budgets.
std::size_t coefficient_bits(const Rational& value);

// Exact integer square root test: returns true and sets root when n is a
// perfect square (n >= 0).
bool perfect_square(const Integer& n, Integer& root);

}  // namespace tidiv
