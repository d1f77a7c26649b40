#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tidiv/divisor.hpp"
#include "tidiv/polynomial.hpp"

namespace tidiv {

// All Chern quantities live on P^n and are plain integers: coefficients of
// H^2 for c2, with the class [Z] carried separately as its degree.
struct ChernParams {
    std::int64_t n = 2;   // ambient dimension, >= 2
    std::int64_t d = 1;   // divisor degree, >= 1
    std::int64_t m = 0;   // twist
    std::int64_t deg_z = 0;

    void check() const;
};

// c2 of the twisted logarithmic cotangent sheaf: the free coefficient and
// the subtracted cycle degree. The H^2 coefficient is coefficient - deg_z.
struct C2Twist {
    std::int64_t coefficient = 0;
    std::int64_t deg_z = 0;

    std::int64_t h2_coefficient() const { return coefficient - deg_z; }
    bool operator==(const C2Twist&) const = default;
};

// ((n+1)(n-2d)/2 + d^2) - (n-1)(n+1-d) m + n(n-1)/2 m^2, minus [Z].
C2Twist c2_log_twist(const ChernParams& p);

// ((d-1)^2 - deg_z) * m^n: c2 of the pulled-back twist-one sheaf restricted
// to the preimage surface of a general plane. Requires m >= 1.
std::int64_t c2_pullback_restricted(const ChernParams& p);

// The two sides of the final c2 comparison as integer polynomials in m,
// with the leading-coefficient inequality and its strictness analysis.
struct C2Comparison {
    std::vector<std::int64_t> lhs_m_poly;  // index = power of m
    std::vector<std::int64_t> rhs_m_poly;
    std::int64_t lhs_leading = 0;        // (d-1)^2 - deg_z
    std::int64_t rhs_leading_cap = 0;    // n(n-1)/2
    bool leading_le = false;             // lhs <= cap
    bool leading_equal = false;
    std::int64_t subleading = 0;         // -(n-1)(n+1-d), the m^(n-1) coefficient gap
    bool strictness_checked = false;     // subleading examined (equality branch)
    bool contradiction = false;          // bound violated, or equality with negative gap
};

// Requires 1 <= d <= n; d = n+1 is rejected (prime divisors of that degree
// are excluded upstream).
C2Comparison c2_comparison(std::int64_t n, std::int64_t d, std::int64_t deg_z);

// Exhaustive integer check of the twist-one simplification
// (n+1)(n-2d)/2 + d^2 - (n-1)(n+1-d) + n(n-1)/2 = (d-1)^2 over the given
// ranges, plus a formal two-variable expansion that must vanish identically.
bool chern_identity_check(std::int64_t n_lo, std::int64_t n_hi, std::int64_t d_lo,
                          std::int64_t d_hi);

// Evaluation matrix of the n+1 global log-differential sections at a point,
// in an exact stalk basis. At normal-crossing points only first-order data
// of the form is available, so the matrix is restricted to the residue pair
// and the directions along the radical of the tangent cone; its rank is
// then a certified lower bound for the true stalk rank.
enum class StalkBasis { OffDivisor, SmoothPoint, NCPoint };

struct LogSectionMatrix {
    std::size_t chart = 0;
    std::vector<Rational> point;  // affine coordinates in the chart
    std::vector<std::vector<Rational>> rows;  // n+1 rows of length n
    StalkBasis basis_tag = StalkBasis::OffDivisor;
    std::size_t pivot = 0;        // nonvanishing-partial index (SmoothPoint)
    std::size_t rank = 0;
    bool rank_is_lower_bound = false;
};

// form must be homogeneous and squarefree; p on the divisor must be a
// smooth or normal-crossing point (NotNormalCrossing is refused).
LogSectionMatrix log_section_matrix(const Polynomial& form, const ProjPoint& p);

const char* stalk_basis_name(StalkBasis b);

}  // namespace tidiv
