#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tidiv {

using Exponent = std::uint32_t;

// Exponent vector with cached total degree. Exponents are machine-width
// naturals; additions that would overflow throw instead of wrapping.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
    explicit Monomial(std::vector<Exponent> exps);

    std::size_t num_vars() const { return exps_.size(); }
    Exponent exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<Exponent>& exponents() const { return exps_; }
    std::uint64_t degree() const { return degree_; }
    bool is_constant() const { return degree_ == 0; }

    Monomial times(const Monomial& other) const;
    // Componentwise quotient; caller must check divides() first.
    Monomial quotient_by(const Monomial& other) const;
    bool divisible_by(const Monomial& other) const;
    Monomial lcm_with(const Monomial& other) const;
    bool coprime_with(const Monomial& other) const;

    // Drops the variable at `index`, shifting later variables down by one.
    Monomial without_variable(std::size_t index) const;
    // Appends `count` fresh variables with exponent zero.
    Monomial with_appended_vars(std::size_t count) const;

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

private:
    std::vector<Exponent> exps_;
    std::uint64_t degree_ = 0;
};

// Monomial orders. Grevlex and lex both take X0 > X1 > ... > Xn. An order
// with elim_tail = k compares the block of the last k variables first
// (grevlex within the block); any monomial involving those variables then
// dominates every monomial free of them, which is what elimination needs.
struct OrderSpec {
    enum class Kind { Grevlex, Lex };
    Kind kind = Kind::Grevlex;
    std::size_t elim_tail = 0;

    static OrderSpec grevlex() { return {Kind::Grevlex, 0}; }
    static OrderSpec lex() { return {Kind::Lex, 0}; }
    static OrderSpec eliminate_tail(std::size_t k) { return {Kind::Grevlex, k}; }

    bool operator==(const OrderSpec& o) const {
        return kind == o.kind && elim_tail == o.elim_tail;
    }
    bool operator<(const OrderSpec& o) const {
        if (kind != o.kind) return kind < o.kind;
        return elim_tail < o.elim_tail;
    }
};

// true when a < b in the given order.
bool monomial_less(const Monomial& a, const Monomial& b, const OrderSpec& order);

inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    return monomial_less(a, b, OrderSpec::grevlex());
}

}  // namespace tidiv
