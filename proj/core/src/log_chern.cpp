#include "tidiv/log_chern.hpp"

#include <algorithm>

namespace tidiv {

void ChernParams::check() const {
    if (n < 2) throw std::invalid_argument("chern parameters need n >= 2");
    if (d < 1) throw std::invalid_argument("chern parameters need d >= 1");
    if (deg_z < 0) throw std::invalid_argument("deg Z is a natural number");
}

namespace {

std::int64_t exact_half(std::int64_t v) {
    if (v % 2 != 0) throw std::logic_error("integrality failure in a c2 coefficient");
    return v / 2;
}

std::int64_t checked_pow(std::int64_t base, std::int64_t e) {
    Integer acc = 1;
    for (std::int64_t k = 0; k < e; ++k) acc *= base;
    if (!acc.fits_slong_p()) throw std::overflow_error("m^n exceeds the integer range");
    return acc.get_si();
}

}  // namespace

C2Twist c2_log_twist(const ChernParams& p) {
    p.check();
    std::int64_t constant = exact_half((p.n + 1) * (p.n - 2 * p.d)) + p.d * p.d;
    std::int64_t linear = (p.n - 1) * (p.n + 1 - p.d);
    std::int64_t quadratic = exact_half(p.n * (p.n - 1));
    return {constant - linear * p.m + quadratic * p.m * p.m, p.deg_z};
}

std::int64_t c2_pullback_restricted(const ChernParams& p) {
    p.check();
    if (p.m < 1) throw std::invalid_argument("pullback twist needs m >= 1");
    return ((p.d - 1) * (p.d - 1) - p.deg_z) * checked_pow(p.m, p.n);
}

C2Comparison c2_comparison(std::int64_t n, std::int64_t d, std::int64_t deg_z) {
    if (n < 2) throw std::invalid_argument("c2 comparison needs n >= 2");
    if (d == n + 1)
        throw std::invalid_argument("d = n+1 is excluded for prime divisors");
    if (d < 1 || d > n) throw std::invalid_argument("c2 comparison needs 1 <= d <= n");
    if (deg_z < 0) throw std::invalid_argument("deg Z is a natural number");

    C2Comparison out;
    std::size_t un = static_cast<std::size_t>(n);
    out.lhs_m_poly.assign(un + 1, 0);
    out.rhs_m_poly.assign(un + 1, 0);
    out.lhs_m_poly[un] = (d - 1) * (d - 1) - deg_z;
    out.rhs_m_poly[un - 2] = exact_half((n + 1) * (n - 2 * d)) + d * d - deg_z;
    out.rhs_m_poly[un - 1] = -(n - 1) * (n + 1 - d);
    out.rhs_m_poly[un] = exact_half(n * (n - 1));

    out.lhs_leading = out.lhs_m_poly[un];
    out.rhs_leading_cap = out.rhs_m_poly[un];
    out.leading_le = out.lhs_leading <= out.rhs_leading_cap;
    out.leading_equal = out.lhs_leading == out.rhs_leading_cap;
    out.subleading = out.rhs_m_poly[un - 1];

    if (!out.leading_le) {
        out.contradiction = true;  // the m^n comparison already fails
    } else if (out.leading_equal) {
        // equality branch: the m^(n-1) coefficient decides for large m
        out.strictness_checked = true;
        out.contradiction = out.subleading < 0;
    }
    return out;
}

bool chern_identity_check(std::int64_t n_lo, std::int64_t n_hi, std::int64_t d_lo,
                          std::int64_t d_hi) {
    if (n_lo > n_hi || d_lo > d_hi) throw std::invalid_argument("empty identity range");
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        for (std::int64_t d = d_lo; d <= d_hi; ++d) {
            std::int64_t lhs = exact_half((n + 1) * (n - 2 * d)) + d * d -
                               (n - 1) * (n + 1 - d) + exact_half(n * (n - 1));
            if (lhs != (d - 1) * (d - 1)) return false;
        }
    }
    // formal expansion in two symbols: the difference must vanish identically
    Polynomial N = Polynomial::variable(2, 0);
    Polynomial D = Polynomial::variable(2, 1);
    Polynomial one = Polynomial::constant(2, rat(1));
    Polynomial half = Polynomial::constant(2, rat(1, 2));
    Polynomial expr = half * (N + one) * (N - D.scaled(rat(2))) + D * D -
                      (N - one) * (N + one - D) + half * N * (N - one) -
                      (D - one) * (D - one);
    return expr.is_zero();
}

// ---------------------------------------------------------------------
// evaluation matrix of the global log sections
// ---------------------------------------------------------------------

namespace {

// coefficient matrix of the quadratic part of a local (translated) equation
std::vector<std::vector<Rational>> quadratic_matrix(const Polynomial& local, std::size_t s) {
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
    return quad;
}

std::vector<Rational> solve_square(std::vector<std::vector<Rational>> m,
                                   std::vector<Rational> rhs) {
    std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::logic_error("singular system in stalk basis solve");
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        Rational inv = 1 / m[col][col];
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = rhs[i] / m[i][i];
    return out;
}

}  // namespace

LogSectionMatrix log_section_matrix(const Polynomial& form, const ProjPoint& p) {
    std::size_t nv = form.num_vars();
    if (p.size() != nv) throw std::invalid_argument("point arity mismatch");
    auto deg = form.homogeneous_degree();
    if (!deg || *deg < 1)
        throw std::invalid_argument("log sections need a nonconstant homogeneous form");

    LogSectionMatrix out;
    ProjPoint np = proj_normalize(p);
    std::size_t s = nv - 1;  // affine dimension n

    while (np[out.chart] == 0) ++out.chart;
    std::size_t chart = out.chart;

    out.point.reserve(s);
    for (std::size_t i = 0; i < nv; ++i)
        if (i != chart) out.point.push_back(np[i] / np[chart]);

    Polynomial affine = form.dehomogenize(chart);
    Rational value = affine.evaluate(out.point);
    std::vector<Rational> grad(s);
    for (std::size_t j = 0; j < s; ++j) grad[j] = affine.derivative(j).evaluate(out.point);

    // section order: row i corresponds to d(X_i f)/f; in the chart the
    // chart row is df_b/f_b and row i is Y_k df_b/f_b + dY_k
    auto affine_pos = [&](std::size_t i) { return i < chart ? i : i - 1; };

    if (value != 0) {
        out.basis_tag = StalkBasis::OffDivisor;
        Rational inv = 1 / value;
        std::vector<Rational> logdiff(s);
        for (std::size_t j = 0; j < s; ++j) logdiff[j] = grad[j] * inv;
        for (std::size_t i = 0; i < nv; ++i) {
            std::vector<Rational> row(s, Rational(0));
            if (i == chart) {
                row = logdiff;
            } else {
                std::size_t k = affine_pos(i);
                for (std::size_t j = 0; j < s; ++j) row[j] = out.point[k] * logdiff[j];
                row[k] += 1;
            }
            out.rows.push_back(std::move(row));
        }
        out.rank = matrix_rank(out.rows);
        return out;
    }

    NCCertificate cert = nc_certificate(form, np);
    if (cert.status == NCStatus::Smooth) {
        out.basis_tag = StalkBasis::SmoothPoint;
        std::size_t pivot = 0;
        while (grad[pivot] == 0) ++pivot;
        out.pivot = pivot;
        // basis: (df_b/f_b, dY_j for j != pivot); on the divisor
        // dY_pivot = -sum_j (d_j f_b / d_pivot f_b) dY_j
        auto column_of = [&](std::size_t j) { return j < pivot ? 1 + j : j; };  // j != pivot
        for (std::size_t i = 0; i < nv; ++i) {
            std::vector<Rational> row(s, Rational(0));
            if (i == chart) {
                row[0] = 1;
            } else {
                std::size_t k = affine_pos(i);
                row[0] = out.point[k];
                if (k == pivot) {
                    Rational inv = 1 / grad[pivot];
                    for (std::size_t j = 0; j < s; ++j)
                        if (j != pivot) row[column_of(j)] = -grad[j] * inv;
                } else {
                    row[column_of(k)] += 1;
                }
            }
            out.rows.push_back(std::move(row));
        }
        out.rank = matrix_rank(out.rows);
        return out;
    }
    if (cert.status != NCStatus::NormalCrossing)
        throw std::invalid_argument(
            "log sections are only evaluated at smooth or normal-crossing points");

    // normal-crossing point: residue pair plus the directions along the
    // radical of the tangent cone; exact from first-order data, and a
    // certified lower bound for the full stalk rank
    out.basis_tag = StalkBasis::NCPoint;
    out.rank_is_lower_bound = true;

    std::vector<Polynomial> shift;
    shift.reserve(s);
    for (std::size_t j = 0; j < s; ++j)
        shift.push_back(Polynomial::variable(s, j) + Polynomial::constant(s, out.point[j]));
    Polynomial local = affine.compose(shift);
    auto quad = quadratic_matrix(local, s);

    // two independent columns of the rank-2 quadratic matrix span the
    // branch-covector plane
    std::vector<std::vector<Rational>> plane;
    for (std::size_t c = 0; c < s && plane.size() < 2; ++c) {
        std::vector<Rational> col(s);
        for (std::size_t r = 0; r < s; ++r) col[r] = quad[r][c];
        auto trial = plane;
        trial.push_back(col);
        if (matrix_rank(trial) == trial.size()) plane = std::move(trial);
    }
    if (plane.size() != 2) throw std::logic_error("rank-2 tangent cone lost its plane");

    // greedily extend by coordinate covectors to a full rational basis
    std::vector<std::size_t> transverse;
    std::vector<std::vector<Rational>> basis = plane;
    for (std::size_t j = 0; j < s && transverse.size() < s - 2; ++j) {
        std::vector<Rational> ej(s, Rational(0));
        ej[j] = 1;
        auto trial = basis;
        trial.push_back(ej);
        if (matrix_rank(trial) == trial.size()) {
            basis = std::move(trial);
            transverse.push_back(j);
        }
    }
    if (transverse.size() != s - 2) throw std::logic_error("tangent cone basis extension failed");

    // coordinates of each e_k over (plane | transverse coordinates): the
    // transverse components of dY_k
    std::vector<std::vector<Rational>> basis_matrix(s, std::vector<Rational>(s));
    for (std::size_t c = 0; c < s; ++c)
        for (std::size_t r = 0; r < s; ++r) basis_matrix[r][c] = basis[c][r];
    std::vector<std::vector<Rational>> transverse_of(s);
    for (std::size_t k = 0; k < s; ++k) {
        std::vector<Rational> ek(s, Rational(0));
        ek[k] = 1;
        std::vector<Rational> coords = solve_square(basis_matrix, ek);
        transverse_of[k] = std::vector<Rational>(coords.begin() + 2, coords.end());
    }

    for (std::size_t i = 0; i < nv; ++i) {
        std::vector<Rational> row(s, Rational(0));
        if (i == chart) {
            row[0] = 1;  // residue pair (1, 1)
            row[1] = 1;
        } else {
            std::size_t k = affine_pos(i);
            row[0] = out.point[k];
            row[1] = out.point[k];
            for (std::size_t j = 0; j + 2 < s; ++j) row[2 + j] = transverse_of[k][j];
        }
        out.rows.push_back(std::move(row));
    }
    out.rank = matrix_rank(out.rows);
    return out;
}

const char* stalk_basis_name(StalkBasis b) {
    switch (b) {
        case StalkBasis::OffDivisor: return "OffDivisor";
        case StalkBasis::SmoothPoint: return "SmoothPoint";
        case StalkBasis::NCPoint: return "NCPoint";
    }
    return "OffDivisor";
}

}  // namespace tidiv
