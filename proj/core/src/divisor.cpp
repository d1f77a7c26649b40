#include "tidiv/divisor.hpp"

#include <algorithm>

#include "tidiv/prng.hpp"

namespace tidiv {

ProjPoint proj_normalize(ProjPoint p) {
    for (const auto& c : p) {
        if (c == 0) continue;
        Rational inv = 1 / c;
        for (auto& x : p) x *= inv;
        return p;
    }
    throw std::invalid_argument("projective point has all coordinates zero");
}

Ideal singular_locus(const Polynomial& form) {
    auto d = form.homogeneous_degree();
    if (!d || *d < 1)
        throw std::invalid_argument("singular locus needs a nonconstant homogeneous form");
    std::size_t nv = form.num_vars();
    std::vector<Polynomial> partials;
    partials.reserve(nv);
    for (std::size_t i = 0; i < nv; ++i) partials.push_back(form.derivative(i));
    return Ideal(nv, std::move(partials));
}

namespace {

Polynomial random_hyperplane(std::size_t nv, Rng& rng) {
    for (;;) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < nv; ++i) {
            Rational c = rng.box_coefficient();
            if (c == 0) continue;
            std::vector<Exponent> e(nv, 0);
            e[i] = 1;
            terms.push_back({Monomial(std::move(e)), c});
        }
        if (!terms.empty()) return Polynomial::from_terms(nv, std::move(terms));
    }
}

// Slices the ideal down to dimension zero with `cuts` seeded hyperplanes;
// retries with fresh seeds on degenerate sections.
std::pair<Ideal, std::uint64_t> generic_section(const Ideal& ideal, std::size_t cuts,
                                                std::uint64_t seed, const Budget& budget) {
    if (cuts == 0) return {ideal, seed};
    for (std::size_t attempt = 0; attempt < budget.max_section_retries; ++attempt) {
        std::uint64_t section_seed = Rng::derive(seed, attempt);
        Rng rng(section_seed);
        std::vector<Polynomial> gens = ideal.generators();
        for (std::size_t c = 0; c < cuts; ++c)
            gens.push_back(random_hyperplane(ideal.num_vars(), rng));
        Ideal sliced(ideal.num_vars(), std::move(gens));
        if (proj_profile(sliced, budget).dimension == 0) return {sliced, section_seed};
    }
    throw BudgetError("generic linear section stayed degenerate across retries", 0, 0);
}

}  // namespace

SingularityReport nonnormal_degree(const Polynomial& form, std::uint64_t seed,
                                   const Budget& budget) {
    std::size_t nv = form.num_vars();
    std::int64_t n = static_cast<std::int64_t>(nv) - 1;
    SingularityReport report{singular_locus(form), {}, 0, true, seed};
    report.sing_profile = proj_profile(report.sing_ideal, budget);

    std::int64_t expected = n - 2;
    std::int64_t dim = report.sing_profile.dimension;
    if (dim < expected) return report;  // Z empty, z_degree = 0
    if (dim > expected) report.z_is_pure_expected_dim = false;

    // distinct points of a generic complementary-dimension linear section
    auto [sliced, section_seed] =
        generic_section(report.sing_ideal, static_cast<std::size_t>(dim), seed, budget);
    report.section_seed = section_seed;
    report.z_degree = count_distinct_points(sliced, Rng::derive(section_seed, 0x5ec7), budget);
    return report;
}

// ---------------------------------------------------------------------
// normal-crossing certificate
// ---------------------------------------------------------------------

namespace {

// Congruent diagonalization of a symmetric rational matrix; returns the
// nonzero diagonal entries.
std::vector<Rational> symmetric_diagonal(std::vector<std::vector<Rational>> a) {
    std::size_t n = a.size();
    std::vector<Rational> diag;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = n;
            for (std::size_t j = k + 1; j < n; ++j)
                if (a[j][j] != 0) {
                    swap_row = j;
                    break;
                }
            if (swap_row < n) {
                std::swap(a[k], a[swap_row]);
                for (auto& row : a) std::swap(row[k], row[swap_row]);
            } else {
                std::size_t partner = n;
                for (std::size_t j = k + 1; j < n; ++j)
                    if (a[k][j] != 0) {
                        partner = j;
                        break;
                    }
                if (partner == n) continue;  // row and column already clear
                // char 0: add the partner row/column to make the pivot nonzero
                for (std::size_t c = 0; c < n; ++c) a[k][c] += a[partner][c];
                for (std::size_t r = 0; r < n; ++r) a[r][k] += a[r][partner];
            }
        }
        if (a[k][k] == 0) continue;
        Rational inv = 1 / a[k][k];
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a[r][k] == 0) continue;
            Rational f = a[r][k] * inv;
            for (std::size_t c = 0; c < n; ++c) a[r][c] -= f * a[k][c];       // row op
            for (std::size_t rr = 0; rr < n; ++rr) a[rr][r] -= f * a[rr][k];  // paired column op
        }
        diag.push_back(a[k][k]);
    }
    return diag;
}

}  // namespace

NCCertificate nc_certificate(const Polynomial& form, const ProjPoint& p) {
    std::size_t nv = form.num_vars();
    if (p.size() != nv) throw std::invalid_argument("point arity mismatch");
    if (!form.homogeneous_degree())
        throw std::invalid_argument("nc_certificate needs a homogeneous form");
    if (form.evaluate(p) != 0)
        throw std::invalid_argument("point does not lie on the divisor");

    NCCertificate cert;
    cert.point = proj_normalize(p);

    std::size_t chart = 0;
    while (cert.point[chart] == 0) ++chart;

    Polynomial affine = form.dehomogenize(chart);
    std::size_t s = nv - 1;
    // translate the point to the origin
    std::vector<Polynomial> shift;
    shift.reserve(s);
    for (std::size_t i = 0, pos = 0; i < nv; ++i) {
        if (i == chart) continue;
        shift.push_back(Polynomial::variable(s, pos) +
                        Polynomial::constant(s, cert.point[i] / cert.point[chart]));
        ++pos;
    }
    Polynomial local = affine.compose(shift);

    std::uint64_t mult = std::uint64_t(-1);
    for (const auto& t : local.terms()) mult = std::min(mult, t.mono.degree());
    cert.multiplicity = mult;

    if (mult == 1) {
        cert.status = NCStatus::Smooth;
        return cert;
    }
    if (mult >= 3) {
        cert.status = NCStatus::NotNormalCrossing;
        return cert;
    }

    // multiplicity 2: rank of the quadratic part decides
    std::vector<std::vector<Rational>> quad(s, std::vector<Rational>(s, Rational(0)));
    for (const auto& t : local.terms()) {
        if (t.mono.degree() != 2) continue;
        std::size_t a = s, b = s;
        for (std::size_t i = 0; i < s; ++i) {
            if (t.mono.exponent(i) == 2) a = b = i;
            if (t.mono.exponent(i) == 1) (a == s ? a : b) = i;
        }
        if (a == b) {
            quad[a][a] += t.coeff;
        } else {
            quad[a][b] += t.coeff / 2;
            quad[b][a] += t.coeff / 2;
        }
    }
    std::vector<Rational> diag = symmetric_diagonal(quad);
    cert.tangent_cone_rank = diag.size();
    if (diag.size() == 2) {
        cert.status = NCStatus::NormalCrossing;
        cert.branch_disc = -diag[0] * diag[1];
    } else {
        cert.status = NCStatus::NotNormalCrossing;
    }
    return cert;
}

const char* nc_status_name(NCStatus s) {
    switch (s) {
        case NCStatus::Smooth: return "Smooth";
        case NCStatus::NormalCrossing: return "NormalCrossing";
        case NCStatus::NotNormalCrossing: return "NotNormalCrossing";
        case NCStatus::Indeterminate: return "Indeterminate";
    }
    return "Indeterminate";
}

// ---------------------------------------------------------------------
// rational point extraction
// ---------------------------------------------------------------------

namespace {

using RatPoly = std::vector<Rational>;  // index = power

void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rp_from_univariate(const Polynomial& p, std::size_t var) {
    RatPoly out;
    for (const auto& t : p.terms()) {
        Exponent e = t.mono.exponent(var);
        if (t.mono.degree() != e) throw std::logic_error("polynomial is not univariate");
        if (out.size() <= e) out.resize(e + 1, Rational(0));
        out[e] += t.coeff;
    }
    rp_trim(out);
    return out;
}

RatPoly rp_derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * rat(static_cast<long>(i)));
    rp_trim(d);
    return d;
}

RatPoly rp_monic(RatPoly p) {
    rp_trim(p);
    if (p.empty()) return p;
    Rational inv = 1 / p.back();
    for (auto& c : p) c *= inv;
    return p;
}

RatPoly rp_mod(RatPoly a, const RatPoly& b) {
    rp_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        rp_trim(a);
    }
    return a;
}

RatPoly rp_gcd(RatPoly a, RatPoly b) {
    rp_trim(a);
    rp_trim(b);
    while (!b.empty()) {
        RatPoly r = rp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return rp_monic(std::move(a));
}

RatPoly rp_quotient(RatPoly a, const RatPoly& b) {
    RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        q[a.size() - b.size()] = f;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        rp_trim(a);
    }
    rp_trim(q);
    return q;
}

RatPoly rp_squarefree(const RatPoly& p) {
    RatPoly d = rp_derivative(p);
    if (d.empty()) return rp_monic(p);
    RatPoly g = rp_gcd(p, d);
    if (g.size() <= 1) return rp_monic(p);
    return rp_monic(rp_quotient(p, g));
}

Rational rp_eval(const RatPoly& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// synthetic division by (t - r); remainder must vanish
RatPoly rp_deflate(const RatPoly& p, const Rational& r) {
    RatPoly q(p.size() - 1, Rational(0));
    Rational carry = p.back();
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = p[i] + carry * r;
    }
    if (carry != 0) throw std::logic_error("deflation by a non-root");
    return q;
}

// Divisors of |n| by trial division; `complete` reports whether the list
// is exhaustive (large prime cofactors give up honestly).
std::vector<Integer> integer_divisors(Integer n, bool& complete) {
    complete = true;
    if (n < 0) n = -n;
    std::vector<std::pair<Integer, unsigned>> factors;
    Integer d = 2;
    while (d * d <= n && d < 1000000) {
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            factors.push_back({d, e});
        }
        d += (d == 2 ? 1 : 2);
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 25) > 0 || n < Integer(1000000) * 1000000) {
            factors.push_back({n, 1});
        } else {
            complete = false;  // composite cofactor we decline to factor
            factors.push_back({n, 1});
        }
    }
    std::vector<Integer> divisors{1};
    for (const auto& [prime, count] : factors) {
        std::size_t before = divisors.size();
        Integer pw = 1;
        for (unsigned e = 1; e <= count; ++e) {
            pw *= prime;
            for (std::size_t i = 0; i < before; ++i) divisors.push_back(divisors[i] * pw);
        }
        if (divisors.size() > 4096) {
            complete = false;
            break;
        }
    }
    return divisors;
}

// All rational roots of p. `all_found` is false when the candidate search
// could not be exhaustive.
std::vector<Rational> rational_roots(RatPoly p, bool& all_found) {
    all_found = true;
    std::vector<Rational> roots;
    p = rp_squarefree(p);
    if (p.size() <= 1) return roots;

    // strip roots at zero
    while (p.size() > 1 && p[0] == 0) {
        roots.push_back(Rational(0));
        p.erase(p.begin());
        break;  // squarefree: at most one
    }
    while (p.size() > 1) {
        if (p.size() == 2) {  // linear: -a0/a1
            roots.push_back(-p[0] / p[1]);
            return roots;
        }
        if (p.size() == 3) {  // quadratic: exact discriminant test
            Rational a = p[2], b = p[1], c = p[0];
            Rational disc = b * b - 4 * a * c;
            Integer num = disc.get_num(), den = disc.get_den(), rn, rd;
            if (disc < 0 || !perfect_square(num, rn) || !perfect_square(den, rd)) return roots;
            Rational root_disc(rn, rd);
            roots.push_back((-b + root_disc) / (2 * a));
            roots.push_back((-b - root_disc) / (2 * a));
            return roots;
        }
        // clear denominators, search candidates p/q with p | a0, q | lead
        Integer den_lcm = 1;
        for (const auto& c : p)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        std::vector<Integer> zs;
        zs.reserve(p.size());
        for (const auto& c : p) {
            Rational scaled = c * Rational(den_lcm);
            zs.push_back(scaled.get_num());
        }
        bool c0 = true, c1 = true;
        std::vector<Integer> ps = integer_divisors(zs.front(), c0);
        std::vector<Integer> qs = integer_divisors(zs.back(), c1);
        if (!c0 || !c1) all_found = false;
        Rational found;
        bool hit = false;
        for (const auto& num : ps) {
            for (const auto& den : qs) {
                for (int sign = 1; sign >= -1 && !hit; sign -= 2) {
                    Rational cand(sign * num, den);
                    cand.canonicalize();
                    if (rp_eval(p, cand) == 0) {
                        found = cand;
                        hit = true;
                    }
                }
                if (hit) break;
            }
            if (hit) break;
        }
        if (!hit) return roots;
        roots.push_back(found);
        p = rp_deflate(p, found);
    }
    return roots;
}

// Rational solutions of a zero-dimensional affine ideal via the lex
// triangularization. `missed` becomes true whenever a root search was
// inexhaustive.
void solve_affine(const Ideal& ideal, std::vector<std::vector<Rational>>& out, bool& missed,
                  const Budget& budget) {
    std::size_t s = ideal.num_vars();
    const auto& gb = ideal.groebner_basis(OrderSpec::lex(), budget);
    if (gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero()) return;  // no solutions

    // generator of the elimination ideal in the last (lex-smallest) variable
    const Polynomial* eliminant = nullptr;
    for (const auto& g : gb) {
        bool univariate = true;
        for (const auto& t : g.terms())
            if (t.mono.degree() != t.mono.exponent(s - 1)) univariate = false;
        if (univariate && !g.is_zero()) {
            eliminant = &g;
            break;
        }
    }
    if (!eliminant) throw std::logic_error("zero-dimensional lex basis lacks an eliminant");

    bool complete = true;
    std::vector<Rational> roots = rational_roots(rp_from_univariate(*eliminant, s - 1), complete);
    if (!complete) missed = true;

    for (const auto& r : roots) {
        if (s == 1) {
            out.push_back({r});
            continue;
        }
        // substitute and recurse on the remaining variables
        std::vector<Polynomial> maps;
        maps.reserve(s);
        for (std::size_t i = 0; i + 1 < s; ++i) maps.push_back(Polynomial::variable(s - 1, i));
        maps.push_back(Polynomial::constant(s - 1, r));
        std::vector<Polynomial> reduced_gens;
        for (const auto& g : gb) {
            Polynomial sub = g.compose(maps);
            if (!sub.is_zero()) reduced_gens.push_back(sub);
        }
        std::vector<std::vector<Rational>> partial;
        solve_affine(Ideal(s - 1, reduced_gens), partial, missed, budget);
        for (auto& pt : partial) {
            pt.push_back(r);
            out.push_back(std::move(pt));
        }
    }
}

}  // namespace

RationalPointSet rational_points(const Ideal& zero_dim, std::uint64_t seed,
                                 const Budget& budget) {
    std::size_t total = count_distinct_points(zero_dim, seed, budget);
    RationalPointSet result;
    std::size_t v = zero_dim.num_vars();

    for (std::size_t attempt = 0; attempt < budget.max_section_retries; ++attempt) {
        Rng rng(Rng::derive(seed, 0xbead + attempt));
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
        std::vector<Polynomial> with_h = zero_dim.generators();
        with_h.push_back(Polynomial::from_terms(v, std::move(lterms)));
        if (proj_profile(Ideal(v, with_h), budget).dimension != -1) continue;

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
        for (const auto& g : zero_dim.generators()) {
            if (g.is_zero()) continue;
            Polynomial a = g.compose(maps);
            if (!a.is_zero()) affine_gens.push_back(a);
        }
        bool missed = false;
        std::vector<std::vector<Rational>> affine_points;
        solve_affine(Ideal(v - 1, affine_gens), affine_points, missed, budget);

        for (const auto& ap : affine_points) {
            ProjPoint p(v);
            for (std::size_t i = 0, pos = 0; i < v; ++i) {
                if (i == k) continue;
                p[i] = ap[pos++];
            }
            // chart equation L = 1 recovers the remaining coordinate
            Rational acc = 1;
            for (std::size_t i = 0; i < v; ++i)
                if (i != k) acc -= coeffs[i] * p[i];
            p[k] = acc / coeffs[k];
            result.points.push_back(proj_normalize(std::move(p)));
        }
        result.unresolved = total - result.points.size();
        return result;
    }
    throw BudgetError("no usable chart for rational point extraction", 0, 0);
}

AssumptionReport sample_assumption(const Polynomial& form, std::size_t trials,
                                   std::uint64_t seed, const Budget& budget) {
    AssumptionReport report;
    report.seed = seed;
    std::size_t nv = form.num_vars();
    std::int64_t expected = static_cast<std::int64_t>(nv) - 3;  // n - 2

    Ideal sing = singular_locus(form);
    ProjectiveProfile prof = proj_profile(sing, budget);
    if (prof.dimension != expected) {
        report.vacuous = true;
        return report;
    }

    std::size_t slices = 0;
    std::size_t max_slices = trials + budget.max_section_retries;
    while (report.samples < trials && slices < max_slices) {
        std::uint64_t slice_seed = Rng::derive(seed, 0xa55e + slices);
        ++slices;
        Ideal sliced = sing;
        if (expected > 0) {
            Rng rng(slice_seed);
            std::vector<Polynomial> gens = sing.generators();
            for (std::int64_t c = 0; c < expected; ++c)
                gens.push_back(random_hyperplane(nv, rng));
            sliced = Ideal(nv, std::move(gens));
            if (proj_profile(sliced, budget).dimension != 0) continue;
        }
        RationalPointSet pts = rational_points(sliced, slice_seed, budget);
        report.indeterminate += pts.unresolved;
        for (const auto& p : pts.points) {
            if (report.samples >= trials) break;
            NCCertificate cert = nc_certificate(form, p);
            ++report.samples;
            if (cert.status == NCStatus::NormalCrossing) {
                ++report.normal_crossing;
            } else if (cert.status == NCStatus::NotNormalCrossing) {
                report.failures.push_back(cert);
            } else {
                ++report.indeterminate;  // smooth point can only mean a degenerate sample
            }
        }
        if (expected == 0) break;  // dimension zero: one pass sees every point
    }
    return report;
}

}  // namespace tidiv
