#include <doctest.h>

#include "catalog.hpp"
#include "helpers.hpp"

using namespace tidiv;
using tidiv::testing::P;
using tidiv::testing::TestRng;

namespace {

Ideal I(std::size_t nv, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> v;
    for (const char* g : gens) v.push_back(P(g, nv));
    return Ideal(nv, std::move(v));
}

}  // namespace

TEST_CASE("groebner basis examples") {
    Ideal lines = I(4, {"X0", "X1"});
    CHECK(lines.groebner_basis() == std::vector<Polynomial>{P("X0", 4), P("X1", 4)});

    // redundant zero generator drops out
    Ideal pair = I(3, {"X0*X1", "X0*X2", "X1*X2 - X1*X2"});
    CHECK(pair.groebner_basis() == std::vector<Polynomial>{P("X0*X1", 3), P("X0*X2", 3)});

    Ideal zero = Ideal::zero(3);
    CHECK(zero.groebner_basis() == std::vector<Polynomial>{Polynomial::zero(3)});
}

TEST_CASE("groebner basis in lex order matches the hand elimination") {
    // x = 1/y on the circle forces y^4 - y^2 + 1 = 0 and x = y - y^3
    Ideal circle = I(2, {"X0^2 + X1^2 - 1", "X0*X1 - 1"});
    const auto& basis = circle.groebner_basis(OrderSpec::lex());
    std::vector<Polynomial> expected = {P("X0 + X1^3 - X1", 2), P("X1^4 - X1^2 + 1", 2)};
    CHECK(basis == expected);
}

TEST_CASE("cached basis generates the same ideal") {
    Ideal ideal = I(3, {"X0^2 + X1*X2", "X0*X1 - X2^2"});
    const auto& basis = ideal.groebner_basis();
    Ideal from_basis(3, basis);
    CHECK(ideal_equal(ideal, from_basis));
}

TEST_CASE("normal form examples") {
    CHECK(normal_form(P("X0^2", 3), I(3, {"X0"})).is_zero());
    CHECK(normal_form(P("X1", 3), I(3, {"X0"})) == P("X1", 3));
    CHECK(normal_form(P("X0*X2 + X1^2", 3), I(3, {"X0*X2 - X1^2"})) == P("2*X1^2", 3));
}

TEST_CASE("normal form is idempotent") {
    TestRng rng(53);
    Ideal ideal = I(3, {"X0*X2 - X1^2", "X0^2 - X1*X2"});
    for (int round = 0; round < 40; ++round) {
        Polynomial p = rng.poly(3, 4, 5);
        Polynomial r = normal_form(p, ideal);
        CHECK(normal_form(r, ideal) == r);
    }
}

TEST_CASE("membership implies radical membership and survives extra generators") {
    TestRng rng(59);
    Ideal ideal = I(3, {"X0*X1 - X2^2", "X1^2"});
    for (int round = 0; round < 20; ++round) {
        Polynomial a = rng.poly(3, 2, 3);
        Polynomial b = rng.poly(3, 2, 3);
        Polynomial member = a * P("X0*X1 - X2^2", 3) + b * P("X1^2", 3);
        CHECK(ideal_contains(ideal, member));
        CHECK(radical_member(member, ideal));
        std::vector<Polynomial> more = ideal.generators();
        more.push_back(rng.poly(3, 2, 3));
        CHECK(ideal_contains(Ideal(3, more), member));
    }
}

TEST_CASE("saturation examples") {
    Ideal sat = saturate(I(3, {"X0*X1", "X0*X2"}), I(3, {"X1", "X2"}));
    CHECK(ideal_equal(sat, I(3, {"X0"})));

    CHECK(ideal_equal(saturate(I(3, {"X0"}), I(3, {"X1"})), I(3, {"X0"})));
    CHECK(saturate(I(3, {"X0^2"}), I(3, {"X0"})).is_unit_ideal());
}

TEST_CASE("saturation is idempotent") {
    Ideal ideal = I(3, {"X0^2*X1", "X0*X2^2"});
    Ideal j = I(3, {"X0", "X1"});
    Ideal once = saturate(ideal, j);
    Ideal twice = saturate(once, j);
    CHECK(ideal_equal(once, twice));
    // saturation contains the ideal
    for (const auto& g : ideal.generators()) CHECK(ideal_contains(once, g));
}

TEST_CASE("radical membership") {
    CHECK(radical_member(P("X0", 3), I(3, {"X0^2"})));
    CHECK(!radical_member(P("X1", 3), I(3, {"X0^2"})));
    CHECK(!radical_member(P("X0*X2 + X1^2", 3), I(3, {"X0", "X1"})));
    // X0 vanishes on only one of the three coordinate points
    CHECK(!radical_member(P("X0", 3), I(3, {"X0*X1", "X0*X2", "X1*X2"})));
}

TEST_CASE("projective profiles") {
    CHECK(proj_profile(I(4, {"X0", "X1"})) == ProjectiveProfile{1, 1});
    CHECK(proj_profile(I(4, {"X0*X3 - X1*X2"})) == ProjectiveProfile{2, 2});
    CHECK(proj_profile(I(4, {"X0", "X1", "X2", "X3"})).dimension == -1);
    CHECK(proj_profile(Ideal::zero(3)) == ProjectiveProfile{2, 1});
    CHECK_THROWS_AS(proj_profile(I(3, {"X0 + X1^2"})), std::invalid_argument);
}

TEST_CASE("hypersurface profile is (n-1, d)") {
    TestRng rng(61);
    for (int round = 0; round < 10; ++round) {
        std::size_t nv = static_cast<std::size_t>(rng.pick(3, 5));
        // product of distinct linear forms is squarefree
        std::size_t k = static_cast<std::size_t>(rng.pick(1, 3));
        Polynomial f = Polynomial::constant(nv, rat(1));
        for (std::size_t j = 0; j < k; ++j) {
            Polynomial linear(nv);
            for (std::size_t v = 0; v < nv; ++v)
                linear += Polynomial::variable(nv, v).scaled(rat(rng.pick(-4, 4) + (v == j ? 9 : 0)));
            f = f * linear;
        }
        ProjectiveProfile prof = proj_profile(Ideal(nv, {f}));
        CHECK(prof.dimension == static_cast<std::int64_t>(nv) - 2);
        CHECK(prof.degree == static_cast<std::int64_t>(k));
    }
}

TEST_CASE("distinct point counting") {
    CHECK(count_distinct_points(I(3, {"X0", "X1*X2"}), 0) == 2);
    CHECK(count_distinct_points(I(3, {"X0", "X1"}), 0) == 1);
    CHECK(count_distinct_points(I(3, {"X0^2", "X1"}), 0) == 1);  // multiplicity discarded
    CHECK_THROWS_AS(count_distinct_points(I(3, {"X0"}), 0), std::invalid_argument);
}

TEST_CASE("distinct point count is seed invariant") {
    Ideal pts = I(3, {"X0*X1", "X0*X2", "X1*X2"});
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK(count_distinct_points(pts, seed) == 3);
}

TEST_CASE("hand-computed catalog") {
    for (const auto& entry : tidiv::testing::ideal_catalog()) {
        CAPTURE(entry.name);
        std::vector<Polynomial> gens;
        for (const char* g : entry.generators) gens.push_back(P(g, entry.num_vars));
        Ideal ideal(entry.num_vars, std::move(gens));
        ProjectiveProfile prof = proj_profile(ideal);
        CHECK(prof.dimension == entry.dimension);
        if (entry.dimension >= 0) CHECK(prof.degree == entry.degree);
        if (entry.distinct_points)
            CHECK(count_distinct_points(ideal, 7) == *entry.distinct_points);
    }
}

TEST_CASE("budget caps surface as errors") {
    Budget tiny;
    tiny.max_basis_size = 2;
    Ideal hard = I(3, {"X0^2 + X1*X2", "X1^3 - X0*X2^2", "X2^3 - X0^2*X1"});
    CHECK_THROWS_AS(hard.groebner_basis(OrderSpec::grevlex(), tiny), BudgetError);
}

TEST_CASE("modular probe predicts the reduced basis shape") {
    Ideal ideal = I(3, {"X0^2 + X1*X2", "X0*X1 - X2^2"});
    ModularProbeResult probe = modular_probe(ideal);
    const auto& exact = ideal.groebner_basis();
    CHECK(probe.predicted_basis_size == exact.size());
    std::uint64_t max_deg = 0;
    for (const auto& g : exact)
        max_deg = std::max(max_deg, g.leading_term(OrderSpec::grevlex()).mono.degree());
    CHECK(probe.predicted_max_degree == max_deg);
    CHECK(probe.prime != 0);
}

TEST_CASE("modular probe guards the exact run when enabled") {
    Budget probe_on;
    probe_on.modular_probe = true;
    probe_on.max_basis_size = 2;
    Ideal hard = I(3, {"X0^2 + X1*X2", "X1^3 - X0*X2^2", "X2^3 - X0^2*X1"});
    CHECK_THROWS_AS(hard.groebner_basis(OrderSpec::grevlex(), probe_on), BudgetError);
}

TEST_CASE("intersection of ideals") {
    Ideal inter = intersect(I(3, {"X0"}), I(3, {"X1"}));
    CHECK(ideal_equal(inter, I(3, {"X0*X1"})));
}
