#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tidiv/monomial.hpp"
#include "tidiv/rational.hpp"

namespace tidiv {

struct Term {
    Monomial mono;
    Rational coeff;
};

// Exact multivariate polynomial over the rationals. Terms are kept sorted
// in descending grevlex order with no zero coefficients, so equal
// polynomials have identical representations and printing is stable.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

    static Polynomial zero(std::size_t num_vars) { return Polynomial(num_vars); }
    static Polynomial constant(std::size_t num_vars, const Rational& c);
    static Polynomial variable(std::size_t num_vars, std::size_t index);
    static Polynomial from_terms(std::size_t num_vars, std::vector<Term> terms);

    std::size_t num_vars() const { return num_vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const;
    // Nonzero constant value; throws unless is_constant() and not zero.
    Rational constant_value() const;

    // Zero polynomial has no degree (the "minus infinity" case).
    std::optional<std::int64_t> total_degree() const;
    // Degree d when every term has exponent-sum d; nullopt otherwise and
    // for the zero polynomial.
    std::optional<std::int64_t> homogeneous_degree() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
    Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    Polynomial scaled(const Rational& c) const;
    Polynomial times_term(const Monomial& m, const Rational& c) const;
    Polynomial pow(std::uint64_t e) const;
    // Leading coefficient made 1; zero stays zero.
    Polynomial monic(const OrderSpec& order = OrderSpec::grevlex()) const;

    Polynomial derivative(std::size_t var) const;
    // Substitutes maps[i] for variable i. All maps must share one variable
    // count, which becomes the variable count of the result.
    Polynomial compose(std::span<const Polynomial> maps) const;
    Rational evaluate(std::span<const Rational> point) const;
    // Sets the chart variable to 1 and renumbers the remaining variables in
    // order. Input must be homogeneous.
    Polynomial dehomogenize(std::size_t chart) const;
    Polynomial with_appended_vars(std::size_t count) const;

    // Leading term with respect to `order` (scan; canonical storage is
    // grevlex so the grevlex leader is just the front).
    const Term& leading_term(const OrderSpec& order) const;

    // Largest bit length over all coefficients (0 for the zero polynomial).
    std::size_t max_coefficient_bits() const;

    std::string to_string(const std::string& var_prefix = "X") const;

private:
    void normalize();

    std::size_t num_vars_ = 0;
    std::vector<Term> terms_;  // grevlex-descending, nonzero coefficients
};

// Quotient T with P = Q * T when Q divides P exactly; nullopt otherwise.
// Division with remainder against the single divisor under grevlex.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& q);

// Determinant of the Jacobian matrix of a square system of forms of common
// degree; homogeneous of degree (n+1)(m-1) or zero.
Polynomial jacobian_det(std::span<const Polynomial> maps);

// Determinant of a square rational matrix (Gaussian elimination).
Rational matrix_determinant(std::vector<std::vector<Rational>> m);

// Rank of a rational matrix (exact Gaussian elimination).
std::size_t matrix_rank(std::vector<std::vector<Rational>> m);

}  // namespace tidiv
