#include "tidiv/ideal.hpp"

#include <algorithm>
#include <numeric>

#include "tidiv/prng.hpp"

namespace tidiv {

namespace {

// ---------------------------------------------------------------------
// reduction and Buchberger
// ---------------------------------------------------------------------

Polynomial term_poly(std::size_t nv, const Term& t) {
    return Polynomial::from_terms(nv, {t});
}

// Full normal form modulo a list of nonzero polynomials.
Polynomial reduce_full(Polynomial p, const std::vector<Polynomial>& basis,
                       const OrderSpec& order) {
    Polynomial remainder(p.num_vars());
    while (!p.is_zero()) {
        const Term lt = p.leading_term(order);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const Term& glt = g.leading_term(order);
            if (lt.mono.divisible_by(glt.mono)) {
                p -= g.times_term(lt.mono.quotient_by(glt.mono), lt.coeff / glt.coeff);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder += term_poly(p.num_vars(), lt);
            p -= term_poly(p.num_vars(), lt);
        }
    }
    return remainder;
}

// Scales to coprime integer coefficients with a positive leading
// coefficient; keeps numbers small across the run.
Polynomial content_normalized(const Polynomial& p, const OrderSpec& order) {
    if (p.is_zero()) return p;
    Integer den_lcm = 1;
    for (const auto& t : p.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    Integer num_gcd = 0;
    for (const auto& t : p.terms()) {
        Integer scaled_num = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
    }
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    Polynomial out = p.scaled(factor);
    if (out.leading_term(order).coeff < 0) out = -out;
    return out;
}

struct SPair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t sugar;
};

class Buchberger {
public:
    Buchberger(std::vector<Polynomial> gens, std::size_t num_vars, const OrderSpec& order,
               const Budget& budget)
        : num_vars_(num_vars), order_(order), budget_(budget) {
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            add(content_normalized(g, order_), g.total_degree() ? *g.total_degree() : 0);
        }
    }

    std::vector<Polynomial> run() {
        while (!pairs_.empty()) {
            std::size_t best = select_pair();
            SPair pair = pairs_[best];
            pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
            Polynomial h = reduce_full(s_polynomial(pair), basis_, order_);
            if (h.is_zero()) continue;
            h = content_normalized(h, order_);
            check_budget(h);
            add(std::move(h), pair.sugar);
        }
        return reduced_basis();
    }

private:
    const Monomial& lead(std::size_t i) const { return basis_[i].leading_term(order_).mono; }

    Polynomial s_polynomial(const SPair& p) const {
        const Term& a = basis_[p.i].leading_term(order_);
        const Term& b = basis_[p.j].leading_term(order_);
        Polynomial left = basis_[p.i].times_term(p.lcm.quotient_by(a.mono), 1 / a.coeff);
        Polynomial right = basis_[p.j].times_term(p.lcm.quotient_by(b.mono), 1 / b.coeff);
        return left - right;
    }

    std::size_t select_pair() const {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            const SPair& a = pairs_[k];
            const SPair& b = pairs_[best];
            if (a.sugar != b.sugar) {
                if (a.sugar < b.sugar) best = k;
            } else if (a.lcm != b.lcm) {
                if (monomial_less(a.lcm, b.lcm, order_)) best = k;
            } else if (std::tie(a.i, a.j) < std::tie(b.i, b.j)) {
                best = k;
            }
        }
        return best;
    }

    void check_budget(const Polynomial& h) const {
        std::size_t bits = h.max_coefficient_bits();
        if (basis_.size() + 1 > budget_.max_basis_size)
            throw BudgetError("groebner basis size cap exceeded", basis_.size() + 1, bits);
        if (bits > budget_.max_coefficient_bits)
            throw BudgetError("groebner coefficient bit cap exceeded", basis_.size() + 1, bits);
    }

    // Gebauer-Moller pair update for a freshly appended element.
    void add(Polynomial h, std::uint64_t sugar_hint) {
        std::size_t t = basis_.size();
        basis_.push_back(std::move(h));
        sugar_.push_back(std::max<std::uint64_t>(
            sugar_hint, basis_[t].total_degree() ? *basis_[t].total_degree() : 0));

        std::vector<bool> alive(t, true);
        std::vector<Monomial> lcms;
        lcms.reserve(t);
        for (std::size_t i = 0; i < t; ++i) lcms.push_back(lead(i).lcm_with(lead(t)));

        // criterion M: drop (i,t) when another new pair's lcm properly divides
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t && alive[i]; ++j)
                if (j != i && lcms[i] != lcms[j] && lcms[i].divisible_by(lcms[j]))
                    alive[i] = false;
        // criterion F: one pair per lcm value
        for (std::size_t i = 0; i < t; ++i) {
            if (!alive[i]) continue;
            for (std::size_t j = i + 1; j < t; ++j)
                if (alive[j] && lcms[i] == lcms[j]) alive[j] = false;
        }
        // criterion B: coprime leading monomials reduce to zero anyway
        std::vector<SPair> fresh;
        for (std::size_t i = 0; i < t; ++i) {
            if (!alive[i] || lead(i).coprime_with(lead(t))) continue;
            std::uint64_t s = std::max(sugar_[i] + lcms[i].degree() - lead(i).degree(),
                                       sugar_[t] + lcms[i].degree() - lead(t).degree());
            fresh.push_back({i, t, lcms[i], s});
        }

        // chain criterion against surviving old pairs
        std::erase_if(pairs_, [&](const SPair& p) {
            return p.lcm.divisible_by(lead(t)) && lead(p.i).lcm_with(lead(t)) != p.lcm &&
                   lead(p.j).lcm_with(lead(t)) != p.lcm;
        });
        pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());
    }

    std::vector<Polynomial> reduced_basis() const {
        // minimal generating leads
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
                if (i == j) continue;
                const Monomial& mi = lead(i);
                const Monomial& mj = lead(j);
                if (mi == mj) {
                    redundant = j < i;
                } else if (mi.divisible_by(mj)) {
                    redundant = true;
                }
            }
            if (!redundant) keep.push_back(i);
        }
        std::vector<Polynomial> minimal;
        minimal.reserve(keep.size());
        for (std::size_t i : keep) minimal.push_back(basis_[i]);

        // tail reduction; leading terms are pairwise non-divisible so they
        // survive, making the result the canonical reduced basis
        std::vector<Polynomial> reduced;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            reduced.push_back(reduce_full(minimal[i], others, order_).monic(order_));
        }
        std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
            return monomial_less(b.leading_term(order_).mono, a.leading_term(order_).mono, order_);
        });
        return reduced;
    }

    std::size_t num_vars_;
    OrderSpec order_;
    Budget budget_;
    std::vector<Polynomial> basis_;
    std::vector<std::uint64_t> sugar_;
    std::vector<SPair> pairs_;
};

std::vector<Polynomial> compute_groebner(const std::vector<Polynomial>& gens, std::size_t nv,
                                         const OrderSpec& order, const Budget& budget) {
    if (budget.modular_probe && order == OrderSpec::grevlex()) {
        // shape prediction; a cap overrun aborts before the exact run
        Budget probe_budget = budget;
        probe_budget.modular_probe = false;
        modular_probe(Ideal(nv, gens), order, 0, probe_budget);
    }
    std::vector<Polynomial> out = Buchberger(gens, nv, order, budget).run();
    if (out.empty()) out.push_back(Polynomial::zero(nv));  // zero ideal
    return out;
}

bool basis_is_unit(const std::vector<Polynomial>& basis) {
    return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
}

// ---------------------------------------------------------------------
// elimination helpers (one auxiliary variable appended last)
// ---------------------------------------------------------------------

std::vector<Polynomial> eliminate_last_var(const std::vector<Polynomial>& ext_gens,
                                           std::size_t ext_nv, const Budget& budget) {
    Ideal ext(ext_nv, ext_gens);
    const auto& basis = ext.groebner_basis(OrderSpec::eliminate_tail(1), budget);
    std::vector<Polynomial> kept;
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        bool uses_tail = false;
        for (const auto& t : g.terms())
            if (t.mono.exponent(ext_nv - 1) > 0) uses_tail = true;
        if (uses_tail) continue;
        std::vector<Term> contracted;
        contracted.reserve(g.terms().size());
        for (const auto& t : g.terms())
            contracted.push_back({t.mono.without_variable(ext_nv - 1), t.coeff});
        kept.push_back(Polynomial::from_terms(ext_nv - 1, std::move(contracted)));
    }
    return kept;
}

Ideal saturate_single(const Ideal& ideal, const Polynomial& g, const Budget& budget) {
    std::size_t nv = ideal.num_vars();
    std::vector<Polynomial> ext;
    for (const auto& f : ideal.generators())
        if (!f.is_zero()) ext.push_back(f.with_appended_vars(1));
    Polynomial t = Polynomial::variable(nv + 1, nv);
    ext.push_back(Polynomial::constant(nv + 1, rat(1)) - t * g.with_appended_vars(1));
    return Ideal(nv, eliminate_last_var(ext, nv + 1, budget));
}

// ---------------------------------------------------------------------
// Hilbert series numerator of a monomial ideal
// ---------------------------------------------------------------------

using UniPoly = std::vector<long long>;  // index = power of t

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// a -= t^shift * b
void uni_sub_shifted(UniPoly& a, const UniPoly& b, std::uint64_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= b[i];
    uni_trim(a);
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& kept : out)
            if (m.divisible_by(kept)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    return out;
}

UniPoly hilbert_numerator(std::vector<Monomial> gens) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return {1};
    if (gens[0].is_constant()) return {};  // unit ideal: empty quotient
    if (gens.size() == 1) {
        UniPoly n{1};
        uni_sub_shifted(n, {1}, gens[0].degree());
        return n;
    }
    // split off the last generator m:
    // HN(G) = HN(G') - t^deg(m) * HN(G' : m)
    Monomial pivot = gens.back();
    gens.pop_back();
    UniPoly without = hilbert_numerator(gens);
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) colon.push_back(g.lcm_with(pivot).quotient_by(pivot));
    UniPoly quotient_part = hilbert_numerator(std::move(colon));
    uni_sub_shifted(without, quotient_part, pivot.degree());
    return without;
}

long long uni_eval_one(const UniPoly& p) {
    long long s = 0;
    for (long long c : p) s += c;
    return s;
}

// q with p = (1 - t) q; caller must know p(1) == 0
UniPoly uni_divide_one_minus_t(const UniPoly& p) {
    UniPoly q(p.size() > 0 ? p.size() - 1 : 0, 0);
    long long carry = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        carry += p[i];
        q[i] = carry;
    }
    uni_trim(q);
    return q;
}

}  // namespace

// ---------------------------------------------------------------------
// Ideal
// ---------------------------------------------------------------------

Ideal::Ideal(std::size_t num_vars, std::vector<Polynomial> generators)
    : num_vars_(num_vars), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_)
        if (g.num_vars() != num_vars_)
            throw std::invalid_argument("ideal generator arity mismatch");
    if (gens_.empty()) gens_.push_back(Polynomial::zero(num_vars_));
}

Ideal Ideal::zero(std::size_t num_vars) {
    return Ideal(num_vars, {Polynomial::zero(num_vars)});
}

Ideal Ideal::unit(std::size_t num_vars) {
    return Ideal(num_vars, {Polynomial::constant(num_vars, rat(1))});
}

Ideal Ideal::irrelevant(std::size_t num_vars) {
    std::vector<Polynomial> gens;
    gens.reserve(num_vars);
    for (std::size_t i = 0; i < num_vars; ++i)
        gens.push_back(Polynomial::variable(num_vars, i));
    return Ideal(num_vars, std::move(gens));
}

const std::vector<Polynomial>& Ideal::groebner_basis(const OrderSpec& order,
                                                     const Budget& budget) const {
    {
        std::scoped_lock lock(cache_->mutex);
        auto it = cache_->bases.find(order);
        if (it != cache_->bases.end()) return *it->second;
    }
    auto computed = std::make_shared<const std::vector<Polynomial>>(
        compute_groebner(gens_, num_vars_, order, budget));
    std::scoped_lock lock(cache_->mutex);
    auto [it, inserted] = cache_->bases.emplace(order, std::move(computed));
    return *it->second;
}

bool Ideal::is_unit_ideal(const Budget& budget) const {
    return basis_is_unit(groebner_basis(OrderSpec::grevlex(), budget));
}

bool Ideal::is_zero_ideal() const {
    for (const auto& g : gens_)
        if (!g.is_zero()) return false;
    return true;
}

bool Ideal::all_generators_homogeneous() const {
    for (const auto& g : gens_)
        if (!g.is_zero() && !g.homogeneous_degree()) return false;
    return true;
}

// ---------------------------------------------------------------------
// free operations
// ---------------------------------------------------------------------

Polynomial normal_form(const Polynomial& p, const Ideal& ideal, const OrderSpec& order,
                       const Budget& budget) {
    if (p.num_vars() != ideal.num_vars())
        throw std::invalid_argument("normal_form arity mismatch");
    return reduce_full(p, ideal.groebner_basis(order, budget), order);
}

bool ideal_contains(const Ideal& ideal, const Polynomial& p, const Budget& budget) {
    return normal_form(p, ideal, OrderSpec::grevlex(), budget).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b, const Budget& budget) {
    for (const auto& g : a.generators())
        if (!ideal_contains(b, g, budget)) return false;
    for (const auto& g : b.generators())
        if (!ideal_contains(a, g, budget)) return false;
    return true;
}

Ideal intersect(const Ideal& a, const Ideal& b, const Budget& budget) {
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument("intersect arity mismatch");
    std::size_t nv = a.num_vars();
    Polynomial t = Polynomial::variable(nv + 1, nv);
    Polynomial one_minus_t = Polynomial::constant(nv + 1, rat(1)) - t;
    std::vector<Polynomial> ext;
    for (const auto& f : a.generators())
        if (!f.is_zero()) ext.push_back(t * f.with_appended_vars(1));
    for (const auto& g : b.generators())
        if (!g.is_zero()) ext.push_back(one_minus_t * g.with_appended_vars(1));
    return Ideal(nv, eliminate_last_var(ext, nv + 1, budget));
}

Ideal saturate(const Ideal& ideal, const Ideal& j, const Budget& budget) {
    if (ideal.num_vars() != j.num_vars())
        throw std::invalid_argument("saturate arity mismatch");
    bool first = true;
    Ideal acc = Ideal::unit(ideal.num_vars());
    for (const auto& g : j.generators()) {
        Ideal part = saturate_single(ideal, g, budget);
        acc = first ? part : intersect(acc, part, budget);
        first = false;
    }
    return acc;
}

bool radical_member(const Polynomial& p, const Ideal& ideal, const Budget& budget) {
    if (p.num_vars() != ideal.num_vars())
        throw std::invalid_argument("radical_member arity mismatch");
    if (p.is_zero()) return true;
    std::size_t nv = ideal.num_vars();
    std::vector<Polynomial> ext;
    for (const auto& f : ideal.generators())
        if (!f.is_zero()) ext.push_back(f.with_appended_vars(1));
    Polynomial t = Polynomial::variable(nv + 1, nv);
    ext.push_back(Polynomial::constant(nv + 1, rat(1)) - t * p.with_appended_vars(1));
    Ideal trick(nv + 1, std::move(ext));
    return trick.is_unit_ideal(budget);
}

ProjectiveProfile proj_profile(const Ideal& ideal, const Budget& budget) {
    if (!ideal.all_generators_homogeneous())
        throw std::invalid_argument("proj_profile requires homogeneous generators");
    std::size_t v = ideal.num_vars();
    const auto& basis = ideal.groebner_basis(OrderSpec::grevlex(), budget);
    std::vector<Monomial> leads;
    for (const auto& g : basis)
        if (!g.is_zero()) leads.push_back(g.leading_term(OrderSpec::grevlex()).mono);

    UniPoly numerator = hilbert_numerator(std::move(leads));
    if (numerator.empty()) return {-1, 0};  // unit ideal
    std::size_t strips = 0;
    while (strips < v && uni_eval_one(numerator) == 0) {
        numerator = uni_divide_one_minus_t(numerator);
        ++strips;
    }
    // Hilbert series = numerator / (1-t)^(v - strips) with numerator(1) != 0
    std::int64_t cone_dim = static_cast<std::int64_t>(v - strips);
    if (cone_dim == 0) return {-1, 0};  // finite-length quotient: empty in projective space
    return {cone_dim - 1, uni_eval_one(numerator)};
}

// ---------------------------------------------------------------------
// distinct point counting
// ---------------------------------------------------------------------

namespace {

struct QuotientBasis {
    bool finite = false;
    std::vector<Monomial> monomials;  // standard monomials, grevlex ascending
};

QuotientBasis quotient_basis(const std::vector<Polynomial>& gb, std::size_t nv) {
    QuotientBasis out;
    if (basis_is_unit(gb)) {
        out.finite = true;  // zero-dimensional as the empty scheme
        return out;
    }
    std::vector<Monomial> leads;
    for (const auto& g : gb)
        if (!g.is_zero()) leads.push_back(g.leading_term(OrderSpec::grevlex()).mono);
    std::vector<Exponent> caps(nv, 0);
    for (std::size_t j = 0; j < nv; ++j) {
        bool found = false;
        for (const auto& m : leads) {
            if (m.exponent(j) == 0 || m.degree() != m.exponent(j)) continue;
            if (!found || m.exponent(j) < caps[j]) caps[j] = m.exponent(j);
            found = true;
        }
        if (!found) return out;  // quotient not finite-dimensional
    }
    std::vector<Exponent> current(nv, 0);
    std::vector<Monomial> cells;
    for (;;) {
        Monomial m(current);
        bool standard = true;
        for (const auto& lead : leads)
            if (m.divisible_by(lead)) {
                standard = false;
                break;
            }
        if (standard) cells.push_back(m);
        std::size_t k = 0;
        while (k < nv) {
            if (++current[k] < caps[k]) break;
            current[k] = 0;
            ++k;
        }
        if (k == nv) break;
    }
    std::sort(cells.begin(), cells.end(), grevlex_less);
    out.finite = true;
    out.monomials = std::move(cells);
    return out;
}

// ---- tiny dense univariate layer (coefficient vectors, index = power) ----

using RatPoly = std::vector<Rational>;

void rat_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rat_derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * rat(static_cast<long>(i)));
    rat_trim(d);
    return d;
}

RatPoly rat_monic(RatPoly p) {
    rat_trim(p);
    if (p.empty()) return p;
    Rational inv = 1 / p.back();
    for (auto& c : p) c *= inv;
    return p;
}

RatPoly rat_mod(RatPoly a, const RatPoly& b) {
    rat_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        rat_trim(a);
    }
    return a;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
    rat_trim(a);
    rat_trim(b);
    while (!b.empty()) {
        RatPoly r = rat_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return rat_monic(std::move(a));
}

RatPoly rat_exact_quotient(RatPoly a, const RatPoly& b) {
    RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        rat_trim(a);
    }
    if (!a.empty()) throw std::logic_error("inexact univariate division");
    rat_trim(q);
    return q;
}

RatPoly rat_squarefree_part(const RatPoly& p) {
    RatPoly d = rat_derivative(p);
    if (d.empty()) return rat_monic(p);
    RatPoly g = rat_gcd(p, d);
    if (g.size() <= 1) return rat_monic(p);
    return rat_monic(rat_exact_quotient(p, g));
}

Polynomial rat_to_polynomial(const RatPoly& p, std::size_t nv, std::size_t var) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        std::vector<Exponent> e(nv, 0);
        e[var] = static_cast<Exponent>(i);
        terms.push_back({Monomial(std::move(e)), p[i]});
    }
    return Polynomial::from_terms(nv, std::move(terms));
}

// Minimal monic univariate polynomial of the coordinate `var` in the
// finite-dimensional quotient ring described by (gb, cells).
RatPoly coordinate_minimal_poly(const std::vector<Polynomial>& gb,
                                const std::vector<Monomial>& cells, std::size_t nv,
                                std::size_t var, const OrderSpec& order) {
    std::map<std::vector<Exponent>, std::size_t> cell_index;
    for (std::size_t i = 0; i < cells.size(); ++i) cell_index[cells[i].exponents()] = i;
    auto to_vector = [&](const Polynomial& p) {
        std::vector<Rational> v(cells.size(), Rational(0));
        for (const auto& t : p.terms()) {
            auto it = cell_index.find(t.mono.exponents());
            if (it == cell_index.end())
                throw std::logic_error("normal form outside the standard monomial basis");
            v[it->second] = t.coeff;
        }
        return v;
    };

    // forward elimination rows with their expressions over the power basis
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> pivots;
    std::vector<RatPoly> combos;

    Polynomial x = Polynomial::variable(nv, var);
    Polynomial power = Polynomial::constant(nv, rat(1));
    for (std::size_t k = 0;; ++k) {
        std::vector<Rational> v = to_vector(power);
        RatPoly combo(k + 1, Rational(0));
        combo[k] = 1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (v[pivots[r]] == 0) continue;
            Rational f = v[pivots[r]];
            for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * rows[r][c];
            for (std::size_t c = 0; c < combos[r].size(); ++c) {
                if (combo.size() <= c) combo.resize(c + 1, Rational(0));
                combo[c] -= f * combos[r][c];
            }
        }
        std::size_t pivot = v.size();
        for (std::size_t c = 0; c < v.size(); ++c)
            if (v[c] != 0) {
                pivot = c;
                break;
            }
        if (pivot == v.size()) return rat_monic(std::move(combo));  // dependency found
        Rational inv = 1 / v[pivot];
        for (auto& c : v) c *= inv;
        for (auto& c : combo) c *= inv;
        rows.push_back(std::move(v));
        pivots.push_back(pivot);
        combos.push_back(std::move(combo));
        power = reduce_full(power * x, gb, order);
        if (k > cells.size() + 1) throw std::logic_error("minimal polynomial search overran");
    }
}

}  // namespace

std::size_t count_distinct_points(const Ideal& ideal, std::uint64_t seed, const Budget& budget) {
    ProjectiveProfile prof = proj_profile(ideal, budget);
    if (prof.dimension != 0)
        throw std::invalid_argument("count_distinct_points requires a zero-dimensional locus");
    std::size_t v = ideal.num_vars();
    OrderSpec grevlex = OrderSpec::grevlex();

    for (std::size_t attempt = 0; attempt < budget.max_section_retries; ++attempt) {
        Rng rng(Rng::derive(seed, attempt));
        std::vector<Rational> coeffs(v);
        bool any = false;
        for (auto& c : coeffs) {
            c = rng.box_coefficient();
            if (c != 0) any = true;
        }
        if (!any) continue;
        std::vector<Term> lterms;
        for (std::size_t i = 0; i < v; ++i) {
            if (coeffs[i] == 0) continue;
            std::vector<Exponent> e(v, 0);
            e[i] = 1;
            lterms.push_back({Monomial(std::move(e)), coeffs[i]});
        }
        Polynomial hyperplane = Polynomial::from_terms(v, std::move(lterms));

        // the hyperplane must miss every point of V(I)
        std::vector<Polynomial> with_h = ideal.generators();
        with_h.push_back(hyperplane);
        if (proj_profile(Ideal(v, with_h), budget).dimension != -1) continue;

        // dehomogenize on the chart {hyperplane = 1}
        std::size_t k = 0;
        while (coeffs[k] == 0) ++k;
        std::vector<Polynomial> maps(v, Polynomial(v - 1));
        Polynomial solve = Polynomial::constant(v - 1, rat(1));
        for (std::size_t i = 0, pos = 0; i < v; ++i) {
            if (i == k) continue;
            maps[i] = Polynomial::variable(v - 1, pos);
            solve -= maps[i].scaled(coeffs[i]);
            ++pos;
        }
        maps[k] = solve.scaled(1 / coeffs[k]);

        std::vector<Polynomial> affine_gens;
        for (const auto& g : ideal.generators()) {
            if (g.is_zero()) continue;
            Polynomial a = g.compose(maps);
            if (!a.is_zero()) affine_gens.push_back(a);
        }
        Ideal affine(v - 1, affine_gens);
        const auto& gb = affine.groebner_basis(grevlex, budget);
        QuotientBasis q = quotient_basis(gb, v - 1);
        if (!q.finite || q.monomials.empty()) continue;  // degenerate chart

        // radical via squarefree coordinate eliminants
        std::vector<Polynomial> rad_gens = affine_gens;
        for (std::size_t j = 0; j < v - 1; ++j) {
            RatPoly m = coordinate_minimal_poly(gb, q.monomials, v - 1, j, grevlex);
            rad_gens.push_back(rat_to_polynomial(rat_squarefree_part(m), v - 1, j));
        }
        Ideal radical(v - 1, rad_gens);
        QuotientBasis rq = quotient_basis(radical.groebner_basis(grevlex, budget), v - 1);
        if (!rq.finite) continue;
        return rq.monomials.size();
    }
    throw BudgetError("no nondegenerate chart found for point counting", 0, 0);
}

// ---------------------------------------------------------------------
// modular probe
// ---------------------------------------------------------------------

namespace {

constexpr std::uint64_t kProbePrimes[] = {2147483629ULL, 2147483587ULL, 2147483579ULL,
                                          2147483563ULL};

struct ModPoly {
    std::vector<std::pair<Monomial, std::uint64_t>> terms;  // grevlex descending
};

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

std::uint64_t rational_mod_p(const Rational& c, std::uint64_t p, bool& bad) {
    Integer num = c.get_num() % static_cast<long>(p);
    Integer den = c.get_den() % static_cast<long>(p);
    std::uint64_t n = (num.get_si() % static_cast<long>(p) + static_cast<long>(p)) % p;
    std::uint64_t d = (den.get_si() % static_cast<long>(p) + static_cast<long>(p)) % p;
    if (d == 0) {
        bad = true;
        return 0;
    }
    return n * mod_inv(d, p) % p;
}

bool mod_convert(const Polynomial& f, std::uint64_t p, ModPoly& out) {
    bool bad = false;
    out.terms.clear();
    for (const auto& t : f.terms()) {
        std::uint64_t c = rational_mod_p(t.coeff, p, bad);
        if (bad) return false;
        if (c != 0) out.terms.push_back({t.mono, c});
    }
    return true;
}

ModPoly mod_sub_scaled(const ModPoly& a, const ModPoly& b, const Monomial& shift,
                       std::uint64_t factor, std::uint64_t p) {
    // a - factor * shift * b, merging descending grevlex term lists
    ModPoly out;
    std::size_t i = 0, j = 0;
    auto bterm = [&](std::size_t idx) {
        return std::pair<Monomial, std::uint64_t>{b.terms[idx].first.times(shift),
                                                  b.terms[idx].second * factor % p};
    };
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j >= b.terms.size()) {
            out.terms.push_back(a.terms[i++]);
            continue;
        }
        auto bt = bterm(j);
        if (i >= a.terms.size()) {
            if (bt.second) out.terms.push_back({bt.first, (p - bt.second) % p});
            ++j;
            continue;
        }
        if (a.terms[i].first == bt.first) {
            std::uint64_t c = (a.terms[i].second + p - bt.second) % p;
            if (c) out.terms.push_back({a.terms[i].first, c});
            ++i, ++j;
        } else if (grevlex_less(bt.first, a.terms[i].first)) {
            out.terms.push_back(a.terms[i++]);
        } else {
            if (bt.second) out.terms.push_back({bt.first, (p - bt.second) % p});
            ++j;
        }
    }
    return out;
}

ModPoly mod_reduce(ModPoly f, const std::vector<ModPoly>& basis, std::uint64_t p) {
    std::size_t guard = 0;
    for (;;) {
        if (f.terms.empty()) return f;
        bool reduced = false;
        // reduce the leading term only; shape prediction does not need tails
        for (const auto& g : basis) {
            if (g.terms.empty()) continue;
            if (f.terms.front().first.divisible_by(g.terms.front().first)) {
                Monomial shift = f.terms.front().first.quotient_by(g.terms.front().first);
                std::uint64_t factor =
                    f.terms.front().second * mod_inv(g.terms.front().second, p) % p;
                f = mod_sub_scaled(f, g, shift, factor, p);
                reduced = true;
                break;
            }
        }
        if (!reduced) return f;
        if (++guard > 1u << 20) throw std::logic_error("modular reduction did not terminate");
    }
}

}  // namespace

ModularProbeResult modular_probe(const Ideal& ideal, const OrderSpec& order, std::uint64_t seed,
                                 const Budget& budget) {
    if (order.kind != OrderSpec::Kind::Grevlex || order.elim_tail != 0)
        throw std::invalid_argument("modular probe supports the grevlex order only");
    ModularProbeResult result;
    for (std::size_t pi = 0; pi < std::size(kProbePrimes); ++pi) {
        std::uint64_t p = kProbePrimes[(seed + pi) % std::size(kProbePrimes)];
        std::vector<ModPoly> basis;
        bool bad = false;
        for (const auto& g : ideal.generators()) {
            if (g.is_zero()) continue;
            ModPoly m;
            if (!mod_convert(g, p, m)) {
                bad = true;
                break;
            }
            if (!m.terms.empty()) basis.push_back(std::move(m));
        }
        if (bad) continue;  // prime divides a denominator; try the next one

        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});
        while (!pairs.empty()) {
            auto [i, j] = pairs.back();
            pairs.pop_back();
            const Monomial& mi = basis[i].terms.front().first;
            const Monomial& mj = basis[j].terms.front().first;
            if (mi.coprime_with(mj)) continue;
            Monomial l = mi.lcm_with(mj);
            std::uint64_t inv_i = mod_inv(basis[i].terms.front().second, p);
            std::uint64_t inv_j = mod_inv(basis[j].terms.front().second, p);
            // spoly = (l/mi) fi / lc_i - (l/mj) fj / lc_j
            ModPoly lifted =
                mod_sub_scaled(ModPoly{}, basis[i], l.quotient_by(mi), (p - inv_i) % p, p);
            ModPoly spoly = mod_sub_scaled(lifted, basis[j], l.quotient_by(mj), inv_j, p);
            ModPoly h = mod_reduce(std::move(spoly), basis, p);
            if (h.terms.empty()) continue;
            if (basis.size() + 1 > budget.max_basis_size)
                throw BudgetError("modular probe exceeded the basis size cap",
                                  basis.size() + 1, 0);
            std::size_t t = basis.size();
            basis.push_back(std::move(h));
            for (std::size_t k = 0; k < t; ++k) pairs.push_back({k, t});
        }

        result.prime = p;
        std::vector<Monomial> leads;
        for (const auto& g : basis) leads.push_back(g.terms.front().first);
        leads = minimalize_monomials(std::move(leads));
        result.predicted_basis_size = leads.empty() ? 1 : leads.size();
        for (const auto& m : leads)
            result.predicted_max_degree = std::max(result.predicted_max_degree, m.degree());
        return result;
    }
    throw std::runtime_error("no usable probe prime for the given coefficients");
}

}  // namespace tidiv
