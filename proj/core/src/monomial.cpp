#include "tidiv/monomial.hpp"

#include <algorithm>
#include <limits>

namespace tidiv {

namespace {

constexpr Exponent kExpCap = std::numeric_limits<Exponent>::max() / 2;

Exponent checked_add(Exponent a, Exponent b) {
    std::uint64_t s = std::uint64_t(a) + std::uint64_t(b);
    if (s > kExpCap) throw std::overflow_error("monomial exponent overflow");
    return static_cast<Exponent>(s);
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
    for (Exponent e : exps_) {
        if (e > kExpCap) throw std::overflow_error("monomial exponent overflow");
        degree_ += e;
    }
}

Monomial Monomial::times(const Monomial& other) const {
    if (num_vars() != other.num_vars())
        throw std::invalid_argument("monomial arity mismatch");
    std::vector<Exponent> out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        out[i] = checked_add(exps_[i], other.exps_[i]);
    return Monomial(std::move(out));
}

Monomial Monomial::quotient_by(const Monomial& other) const {
    std::vector<Exponent> out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] < other.exps_[i])
            throw std::invalid_argument("monomial quotient is not integral");
        out[i] = exps_[i] - other.exps_[i];
    }
    return Monomial(std::move(out));
}

bool Monomial::divisible_by(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] < other.exps_[i]) return false;
    return true;
}

Monomial Monomial::lcm_with(const Monomial& other) const {
    std::vector<Exponent> out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        out[i] = std::max(exps_[i], other.exps_[i]);
    return Monomial(std::move(out));
}

bool Monomial::coprime_with(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0 && other.exps_[i] > 0) return false;
    return true;
}

Monomial Monomial::without_variable(std::size_t index) const {
    std::vector<Exponent> out;
    out.reserve(exps_.size() - 1);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (i != index) out.push_back(exps_[i]);
    return Monomial(std::move(out));
}

Monomial Monomial::with_appended_vars(std::size_t count) const {
    std::vector<Exponent> out = exps_;
    out.insert(out.end(), count, 0);
    return Monomial(std::move(out));
}

namespace {

// a < b in grevlex over the index range [lo, hi): higher total degree wins;
// on ties the monomial whose rightmost nonzero difference is positive loses.
int grevlex_cmp_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a.exponent(i);
        db += b.exponent(i);
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        Exponent ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
}

int lex_cmp_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        Exponent ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

}  // namespace

bool monomial_less(const Monomial& a, const Monomial& b, const OrderSpec& order) {
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument("monomial arity mismatch in comparison");
    std::size_t n = a.num_vars();
    std::size_t head_end = n;
    if (order.elim_tail > 0) {
        if (order.elim_tail > n) throw std::invalid_argument("elimination block too large");
        head_end = n - order.elim_tail;
        int c = grevlex_cmp_range(a, b, head_end, n);
        if (c != 0) return c < 0;
    }
    int c = order.kind == OrderSpec::Kind::Grevlex ? grevlex_cmp_range(a, b, 0, head_end)
                                                   : lex_cmp_range(a, b, 0, head_end);
    return c < 0;
}

}  // namespace tidiv
