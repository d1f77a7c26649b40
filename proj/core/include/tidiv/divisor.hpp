#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tidiv/ideal.hpp"
#include "tidiv/polynomial.hpp"

namespace tidiv {

// Projective point with exact rational coordinates, not all zero.
using ProjPoint = std::vector<Rational>;

// Scales so the first nonzero coordinate is 1.
ProjPoint proj_normalize(ProjPoint p);

// Ideal generated by the n+1 partial derivatives. The form itself is
// redundant by the Euler relation in characteristic zero.
Ideal singular_locus(const Polynomial& form);

// Dimension/degree data of Sing(D) and of the non-normal locus Z, the
// pure (n-2)-dimensional part. z_degree counts distinct points of a seeded
// generic linear section, i.e. the reduced cycle degree.
struct SingularityReport {
    Ideal sing_ideal;
    ProjectiveProfile sing_profile;
    std::uint64_t z_degree = 0;
    bool z_is_pure_expected_dim = true;  // false when Sing has excess dimension
    std::uint64_t section_seed = 0;      // seed of the accepted generic section
};

SingularityReport nonnormal_degree(const Polynomial& form, std::uint64_t seed,
                                   const Budget& budget = Budget::defaults());

// First-order normal-crossing certificate at a point of the divisor.
// Multiplicity 2 with a rank-2 tangent cone is the local model u1*u2 = 0
// to first order; this is necessary for normal crossings and is what the
// generic-point arguments need, but it does not certify analytic
// triviality along the whole component.
enum class NCStatus { Smooth, NormalCrossing, NotNormalCrossing, Indeterminate };

struct NCCertificate {
    ProjPoint point;
    NCStatus status = NCStatus::Indeterminate;
    std::uint64_t multiplicity = 0;
    std::size_t tangent_cone_rank = 0;  // rank of the quadratic part at multiplicity 2
    // Square-class representative for the two branch forms at a rank-2
    // point: the branches are rational iff this is a perfect square.
    std::optional<Rational> branch_disc;
};

// Requires form(p) = 0.
NCCertificate nc_certificate(const Polynomial& form, const ProjPoint& p);

const char* nc_status_name(NCStatus s);

// Empirical sampling check of the codimension-two normal-crossing
// behaviour: rational points are harvested from seeded generic linear
// sections of Sing(D); irrational intersection points are skipped and
// tallied, never silently dropped.
struct AssumptionReport {
    bool vacuous = false;  // Sing(D) has dimension != n-2: nothing to sample
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::size_t normal_crossing = 0;
    std::size_t indeterminate = 0;
    std::vector<NCCertificate> failures;  // NotNormalCrossing witnesses

    bool passed() const { return failures.empty(); }
};

AssumptionReport sample_assumption(const Polynomial& form, std::size_t trials,
                                   std::uint64_t seed,
                                   const Budget& budget = Budget::defaults());

// Rational points of a zero-dimensional projective locus, found by lex
// triangularization; `unresolved` counts the complex points that were not
// reached rationally (or whose eliminant resisted rational root search).
struct RationalPointSet {
    std::vector<ProjPoint> points;
    std::size_t unresolved = 0;
};

RationalPointSet rational_points(const Ideal& zero_dim, std::uint64_t seed,
                                 const Budget& budget = Budget::defaults());

}  // namespace tidiv
