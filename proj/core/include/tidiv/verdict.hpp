#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tidiv/divisor.hpp"
#include "tidiv/endomorphism.hpp"
#include "tidiv/log_chern.hpp"

namespace tidiv {

// (d-1)^2 - n(n-1)/2: deg Z of a totally invariant prime divisor must
// exceed this strictly.
Rational bound_threshold(std::int64_t n, std::int64_t d);

// (k-1)(k-2)/2: the classical cap on the number of singular points of an
// irreducible plane curve of degree k.
std::int64_t plane_curve_delta_bound(std::int64_t k);

// True iff (d-1)^2 >= n(n-1)/2 in exact integers: the bound then forces a
// nonempty non-normal locus.
bool normality_obstruction(std::int64_t n, std::int64_t d);

// For d = n the required strict inequality deg Z > threshold collides with
// the delta cap of a generic plane section: threshold(n, n) >= cap already
// rules the divisor out. Independent of any measured deg Z, which callers
// keep only for reporting.
bool degree_n_exclusion(std::int64_t n);

enum class Conclusion {
    HyperplaneOK,
    NotInvariant,
    ContradictionByBound,
    ContradictionByDeltaBound,
    ExcludedDegreeNPlusOne,  // cited-external
    ExcludedP3Quadric,       // cited-external
    Inconclusive,
};

const char* conclusion_name(Conclusion c);
bool conclusive(Conclusion c);

enum class Provenance { ComputedHere, CitedExternal };

struct FiredRule {
    std::string tag;
    Provenance provenance = Provenance::ComputedHere;
    std::string detail;
};

struct Verdict {
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::uint64_t m = 0;
    std::uint64_t iterate_used = 1;
    InvarianceCertificate invariance;
    std::optional<std::uint64_t> deg_z;
    Rational threshold = 0;
    std::vector<FiredRule> rules;
    Conclusion conclusion = Conclusion::Inconclusive;

    // report annotations, filled for invariant inputs
    std::optional<RamificationData> ramification;
    std::optional<SingularityReport> singularity;
    std::optional<bool> z_avoids_ramification;
    std::optional<C2Comparison> comparison;
};

struct AnalyzeConfig {
    std::uint64_t seed = 0;
    std::uint64_t iterate = 1;
    Budget budget = Budget::defaults();
};

// Theorem pipeline: invariance, then the degree rules, then the non-normal
// degree against the bound. The inequality is necessary, not sufficient,
// so surviving all rules means Inconclusive. The divisor form must be
// squarefree; irreducibility stays a caller contract and is noted by the
// delta-bound rule.
Verdict analyze(const Endomorphism& f, const Polynomial& form,
                const AnalyzeConfig& config = {});

// Corollary decision table on P^3: d = 1 hyperplane, d = 2 and d = 4
// excluded by cited results, d = 3 by the delta bound. Fires only after
// invariance is confirmed.
Verdict classify_p3(const Endomorphism& f, const Polynomial& form,
                    const AnalyzeConfig& config = {});

}  // namespace tidiv
