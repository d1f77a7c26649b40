#include "tidiv/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tidiv {

namespace {

bool grevlex_term_greater(const Term& a, const Term& b) {
    return grevlex_less(b.mono, a.mono);
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument("polynomials live in different rings");
}

}  // namespace

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
    Polynomial p(num_vars);
    if (c != 0) p.terms_.push_back({Monomial(num_vars), c});
    return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
    if (index >= num_vars) throw std::out_of_range("variable index out of range");
    std::vector<Exponent> e(num_vars, 0);
    e[index] = 1;
    Polynomial p(num_vars);
    p.terms_.push_back({Monomial(std::move(e)), rat(1)});
    return p;
}

Polynomial Polynomial::from_terms(std::size_t num_vars, std::vector<Term> terms) {
    Polynomial p(num_vars);
    for (auto& t : terms)
        if (t.mono.num_vars() != num_vars)
            throw std::invalid_argument("term arity mismatch");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), grevlex_term_greater);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
        } else {
            out.push_back(std::move(t));
        }
    }
    std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
    terms_ = std::move(out);
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
}

Rational Polynomial::constant_value() const {
    if (terms_.size() == 1 && terms_[0].mono.is_constant()) return terms_[0].coeff;
    throw std::logic_error("constant_value on a non-constant polynomial");
}

std::optional<std::int64_t> Polynomial::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    // grevlex-descending: the front term has maximal total degree.
    return static_cast<std::int64_t>(terms_.front().mono.degree());
}

std::optional<std::int64_t> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    std::uint64_t d = terms_.front().mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return std::nullopt;
    return static_cast<std::int64_t>(d);
}

Polynomial Polynomial::operator-() const {
    Polynomial out(num_vars_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, -t.coeff});
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_same_ring(*this, other);
    Polynomial out(num_vars_);
    out.terms_.reserve(terms_.size() + other.terms_.size());
    // merge two descending term lists
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        const Term& a = terms_[i];
        const Term& b = other.terms_[j];
        if (a.mono == b.mono) {
            Rational c = a.coeff + b.coeff;
            if (c != 0) out.terms_.push_back({a.mono, std::move(c)});
            ++i, ++j;
        } else if (grevlex_less(b.mono, a.mono)) {
            out.terms_.push_back(a);
            ++i;
        } else {
            out.terms_.push_back(b);
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) out.terms_.push_back(other.terms_[j]);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_same_ring(*this, other);
    if (terms_.empty() || other.terms_.empty()) return Polynomial(num_vars_);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : other.terms_)
            prod.push_back({a.mono.times(b.mono), a.coeff * b.coeff});
    return from_terms(num_vars_, std::move(prod));
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (num_vars_ != other.num_vars_ || terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != other.terms_[i].mono || terms_[i].coeff != other.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return Polynomial(num_vars_);
    Polynomial out(num_vars_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, t.coeff * c});
    return out;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
    if (c == 0) return Polynomial(num_vars_);
    Polynomial out(num_vars_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono.times(m), t.coeff * c});
    return out;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
    Polynomial acc = Polynomial::constant(num_vars_, rat(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

Polynomial Polynomial::monic(const OrderSpec& order) const {
    if (terms_.empty()) return *this;
    return scaled(1 / leading_term(order).coeff);
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= num_vars_) throw std::out_of_range("derivative variable out of range");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exponent e = t.mono.exponent(var);
        if (e == 0) continue;
        std::vector<Exponent> exps = t.mono.exponents();
        exps[var] = e - 1;
        out.push_back({Monomial(std::move(exps)), t.coeff * rat(static_cast<long>(e))});
    }
    return from_terms(num_vars_, std::move(out));
}

Polynomial Polynomial::compose(std::span<const Polynomial> maps) const {
    if (maps.size() != num_vars_)
        throw std::invalid_argument("compose: arity mismatch");
    std::size_t target_vars = maps.empty() ? 0 : maps[0].num_vars();
    for (const auto& m : maps)
        if (m.num_vars() != target_vars)
            throw std::invalid_argument("compose: maps live in different rings");

    // Cache powers of each map as they are needed.
    std::vector<std::vector<Polynomial>> powers(num_vars_);
    auto power_of = [&](std::size_t var, Exponent e) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(Polynomial::constant(target_vars, rat(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * maps[var]);
        return cache[e];
    };

    Polynomial acc(target_vars);
    for (const auto& t : terms_) {
        Polynomial factor = Polynomial::constant(target_vars, t.coeff);
        for (std::size_t v = 0; v < num_vars_; ++v) {
            Exponent e = t.mono.exponent(v);
            if (e > 0) factor = factor * power_of(v, e);
        }
        acc = acc + factor;
    }
    return acc;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != num_vars_)
        throw std::invalid_argument("evaluate: arity mismatch");
    Rational acc = 0;
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < num_vars_; ++i) {
            Exponent e = t.mono.exponent(i);
            for (Exponent k = 0; k < e; ++k) v *= point[i];
        }
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::dehomogenize(std::size_t chart) const {
    if (chart >= num_vars_) throw std::out_of_range("chart index out of range");
    if (!homogeneous_degree())
        throw std::invalid_argument("dehomogenize requires a homogeneous polynomial");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_)
        out.push_back({t.mono.without_variable(chart), t.coeff});
    return from_terms(num_vars_ - 1, std::move(out));
}

Polynomial Polynomial::with_appended_vars(std::size_t count) const {
    Polynomial out(num_vars_ + count);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({t.mono.with_appended_vars(count), t.coeff});
    return out;
}

const Term& Polynomial::leading_term(const OrderSpec& order) const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    if (order == OrderSpec::grevlex()) return terms_.front();
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (monomial_less(terms_[best].mono, terms_[i].mono, order)) best = i;
    return terms_[best];
}

std::size_t Polynomial::max_coefficient_bits() const {
    std::size_t bits = 0;
    for (const auto& t : terms_) bits = std::max(bits, coefficient_bits(t.coeff));
    return bits;
}

std::string Polynomial::to_string(const std::string& var_prefix) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        bool negative = c < 0;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        Rational abs_c = negative ? Rational(-c) : c;
        std::string vars;
        for (std::size_t i = 0; i < num_vars_; ++i) {
            Exponent e = t.mono.exponent(i);
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += var_prefix + std::to_string(i);
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            os << tidiv::to_string(abs_c);
        } else {
            if (abs_c != 1) os << tidiv::to_string(abs_c) << "*";
            os << vars;
        }
    }
    return os.str();
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (p.num_vars() != q.num_vars())
        throw std::invalid_argument("polynomials live in different rings");
    Polynomial quotient(p.num_vars());
    Polynomial rem = p;
    const Term& qlt = q.leading_term(OrderSpec::grevlex());
    while (!rem.is_zero()) {
        const Term& rlt = rem.leading_term(OrderSpec::grevlex());
        if (!rlt.mono.divisible_by(qlt.mono)) return std::nullopt;
        Monomial m = rlt.mono.quotient_by(qlt.mono);
        Rational c = rlt.coeff / qlt.coeff;
        quotient += Polynomial::from_terms(p.num_vars(), {{m, c}});
        rem -= q.times_term(m, c);
    }
    return quotient;
}

namespace {

// Minor expansion over column subsets, memoized per row depth.
Polynomial det_recursive(const std::vector<std::vector<Polynomial>>& m, std::size_t row,
                         std::uint32_t colmask, std::map<std::uint32_t, Polynomial>& memo,
                         std::size_t n) {
    if (row == n) return Polynomial::constant(m[0][0].num_vars(), rat(1));
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    Polynomial acc(m[0][0].num_vars());
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        if (!(colmask & (1u << c))) continue;
        if (!m[row][c].is_zero()) {
            Polynomial sub = det_recursive(m, row + 1, colmask & ~(1u << c), memo, n);
            Polynomial contrib = m[row][c] * sub;
            acc = sign > 0 ? acc + contrib : acc - contrib;
        }
        sign = -sign;
    }
    memo.emplace(colmask, acc);
    return acc;
}

}  // namespace

Polynomial jacobian_det(std::span<const Polynomial> maps) {
    std::size_t n = maps.size();
    if (n == 0) throw std::invalid_argument("jacobian of an empty system");
    if (n > 31) throw std::invalid_argument("jacobian system too large");
    std::optional<std::int64_t> common_degree;
    for (const auto& f : maps) {
        if (f.num_vars() != n)
            throw std::invalid_argument("jacobian requires a square system");
        auto d = f.homogeneous_degree();
        if (!d && !f.is_zero())
            throw std::invalid_argument("jacobian entries must be homogeneous");
        if (d) {
            if (common_degree && *common_degree != *d)
                throw std::invalid_argument("jacobian entries must share one degree");
            common_degree = d;
        }
    }
    std::vector<std::vector<Polynomial>> jac(n, std::vector<Polynomial>());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            jac[i].push_back(maps[i].derivative(j));
    // memo keyed by remaining-column mask; one map per recursion depth is
    // implied because the mask popcount fixes the depth
    std::map<std::uint32_t, Polynomial> memo;
    return det_recursive(jac, 0, (1u << n) - 1, memo, n);
}

Rational matrix_determinant(std::vector<std::vector<Rational>> m) {
    std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = 1 / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

std::size_t matrix_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        Rational inv = 1 / m[rank][col];
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational f = m[r][col] * inv;
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace tidiv
