#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "tidiv/budget.hpp"
#include "tidiv/polynomial.hpp"

namespace tidiv {

// Dimension and degree of a projective scheme, read off the Hilbert
// polynomial of the initial ideal. dimension = -1 means empty; degree is
// the degree of the top-dimensional part and is defined for dimension >= 0.
struct ProjectiveProfile {
    std::int64_t dimension = -1;
    std::int64_t degree = 0;

    bool operator==(const ProjectiveProfile&) const = default;
};

// Homogeneous or affine polynomial ideal with a lazily computed reduced
// Groebner basis per monomial order. Ideals are immutable; the cache is
// filled at most once per order behind a mutex, so concurrent readers see
// either nothing (and compute locally) or the finished basis.
class Ideal {
public:
    Ideal(std::size_t num_vars, std::vector<Polynomial> generators);

    static Ideal zero(std::size_t num_vars);
    static Ideal unit(std::size_t num_vars);
    // The irrelevant ideal (X0, .., Xn).
    static Ideal irrelevant(std::size_t num_vars);

    std::size_t num_vars() const { return num_vars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    // Reduced Groebner basis: unique for a fixed order, sorted with leading
    // monomials descending. The zero ideal yields {0}.
    const std::vector<Polynomial>& groebner_basis(
        const OrderSpec& order = OrderSpec::grevlex(),
        const Budget& budget = Budget::defaults()) const;

    bool is_unit_ideal(const Budget& budget = Budget::defaults()) const;
    bool is_zero_ideal() const;
    bool all_generators_homogeneous() const;

private:
    struct Cache {
        std::mutex mutex;
        std::map<OrderSpec, std::shared_ptr<const std::vector<Polynomial>>> bases;
    };

    std::size_t num_vars_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

// Remainder of p under full reduction by the reduced basis of I; zero iff
// p lies in I.
Polynomial normal_form(const Polynomial& p, const Ideal& ideal,
                       const OrderSpec& order = OrderSpec::grevlex(),
                       const Budget& budget = Budget::defaults());

bool ideal_contains(const Ideal& ideal, const Polynomial& p,
                    const Budget& budget = Budget::defaults());

// Equality as ideals, decided by mutual membership of generators.
bool ideal_equal(const Ideal& a, const Ideal& b,
                 const Budget& budget = Budget::defaults());

Ideal intersect(const Ideal& a, const Ideal& b,
                const Budget& budget = Budget::defaults());

// The saturation (I : J^infinity).
Ideal saturate(const Ideal& ideal, const Ideal& j,
               const Budget& budget = Budget::defaults());

// True iff p vanishes on V(I): the ideal I + (1 - t*p) in one extra
// variable is the unit ideal.
bool radical_member(const Polynomial& p, const Ideal& ideal,
                    const Budget& budget = Budget::defaults());

// Requires homogeneous generators.
ProjectiveProfile proj_profile(const Ideal& ideal,
                               const Budget& budget = Budget::defaults());

// Number of distinct points of a zero-dimensional projective scheme over
// the complex numbers. A seeded generic hyperplane moves every point into
// one affine chart (verified exactly, bounded reseeding); the squarefree
// parts of the per-coordinate eliminants then cut out the radical, whose
// quotient dimension is the point count.
std::size_t count_distinct_points(const Ideal& ideal, std::uint64_t seed,
                                  const Budget& budget = Budget::defaults());

// Shape prediction over a word-sized prime before an exact run. Advisory
// only; the rational computation stays the source of truth.
struct ModularProbeResult {
    std::uint64_t prime = 0;
    std::size_t predicted_basis_size = 0;
    std::uint64_t predicted_max_degree = 0;
};

ModularProbeResult modular_probe(const Ideal& ideal,
                                 const OrderSpec& order = OrderSpec::grevlex(),
                                 std::uint64_t seed = 0,
                                 const Budget& budget = Budget::defaults());

}  // namespace tidiv
