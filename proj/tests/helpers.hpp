#pragma once

#include <random>
#include <vector>

#include "tidiv/endomorphism.hpp"
#include "tidiv/ideal.hpp"
#include "tidiv/parse.hpp"
#include "tidiv/polynomial.hpp"

namespace tidiv::testing {

inline Polynomial P(const std::string& text, std::size_t nv) {
    return parse_polynomial(text, nv);
}

// Deterministic test generator: only the raw mt19937_64 stream is used.
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : engine_(seed) {}

    std::int64_t pick(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    Rational coefficient() {
        std::int64_t v = 0;
        while (v == 0) v = pick(-9, 9);
        return rat(v);
    }

    // Random polynomial with up to `max_terms` terms of degree <= max_degree.
    Polynomial poly(std::size_t nv, std::size_t max_degree, std::size_t max_terms) {
        std::vector<Term> terms;
        std::size_t count = static_cast<std::size_t>(pick(1, static_cast<std::int64_t>(max_terms)));
        for (std::size_t t = 0; t < count; ++t) {
            std::vector<Exponent> e(nv, 0);
            std::size_t deg = static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(max_degree)));
            for (std::size_t k = 0; k < deg; ++k)
                e[static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(nv) - 1))]++;
            terms.push_back({Monomial(std::move(e)), coefficient()});
        }
        return Polynomial::from_terms(nv, std::move(terms));
    }

    Polynomial nonzero_poly(std::size_t nv, std::size_t max_degree, std::size_t max_terms) {
        for (;;) {
            Polynomial p = poly(nv, max_degree, max_terms);
            if (!p.is_zero()) return p;
        }
    }

    // Random nonzero homogeneous polynomial of exact degree `degree`.
    Polynomial homogeneous(std::size_t nv, std::size_t degree, std::size_t max_terms) {
        for (;;) {
            std::vector<Term> terms;
            std::size_t count =
                static_cast<std::size_t>(pick(1, static_cast<std::int64_t>(max_terms)));
            for (std::size_t t = 0; t < count; ++t) {
                std::vector<Exponent> e(nv, 0);
                for (std::size_t k = 0; k < degree; ++k)
                    e[static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(nv) - 1))]++;
                terms.push_back({Monomial(std::move(e)), coefficient()});
            }
            Polynomial p = Polynomial::from_terms(nv, std::move(terms));
            if (!p.is_zero()) return p;
        }
    }

    // Random invertible rational square matrix with small integer entries.
    std::vector<std::vector<Rational>> invertible_matrix(std::size_t n) {
        for (;;) {
            std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
            for (auto& row : m)
                for (auto& c : row) c = rat(pick(-5, 5));
            if (matrix_determinant(m) != 0) return m;
        }
    }

private:
    std::mt19937_64 engine_;
};

// form composed with the linear change X = M * X'
inline Polynomial apply_coordinate_change(const Polynomial& form,
                                          const std::vector<std::vector<Rational>>& m) {
    std::size_t nv = form.num_vars();
    std::vector<Polynomial> maps;
    maps.reserve(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        Polynomial row(nv);
        for (std::size_t j = 0; j < nv; ++j)
            row += Polynomial::variable(nv, j).scaled(m[i][j]);
        maps.push_back(row);
    }
    return form.compose(maps);
}

// p' = M^{-1} p, so that changed_form(p') = form(p)
inline std::vector<Rational> apply_inverse_to_point(const std::vector<std::vector<Rational>>& m,
                                                    const std::vector<Rational>& p) {
    std::size_t n = p.size();
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug[r][c] = m[r][c];
        aug[r][n] = p[r];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (aug[pivot][col] == 0) ++pivot;
        std::swap(aug[pivot], aug[col]);
        Rational inv = 1 / aug[col][col];
        for (auto& v : aug[col]) v *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            Rational f = aug[r][col];
            for (std::size_t c = 0; c <= n; ++c) aug[r][c] -= f * aug[col][c];
        }
    }
    std::vector<Rational> out(n);
    for (std::size_t r = 0; r < n; ++r) out[r] = aug[r][n];
    return out;
}

inline Endomorphism coordinate_power_map(std::size_t nv, unsigned e) {
    std::vector<Polynomial> forms;
    for (std::size_t i = 0; i < nv; ++i) forms.push_back(Polynomial::variable(nv, i).pow(e));
    return Endomorphism::validate(std::move(forms));
}

}  // namespace tidiv::testing
