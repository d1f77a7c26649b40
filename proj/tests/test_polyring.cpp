#include <doctest.h>

#include "helpers.hpp"

using namespace tidiv;
using tidiv::testing::P;
using tidiv::testing::TestRng;

TEST_CASE("parse basic forms") {
    Polynomial f = P("X0^2*X3 - X1^2*X2", 4);
    CHECK(f.term_count() == 2);
    CHECK(*f.total_degree() == 3);
    CHECK(*f.homogeneous_degree() == 3);

    Polynomial zero = P("0", 3);
    CHECK(zero.is_zero());
    CHECK(zero.term_count() == 0);
    CHECK(!zero.total_degree());

    CHECK_THROWS_AS(P("X0 + X5", 3), ParseError);
}

TEST_CASE("parse grammar corners") {
    CHECK(P("x*z - y^2", 3) == P("X0*X2 - X1^2", 3));       // aliases
    CHECK(P("3/2*X0", 2) == P("X0", 2).scaled(rat(3, 2)));  // rational coefficient
    CHECK(P("(X0 + X1)^2", 2) == P("X0^2 + 2*X0*X1 + X1^2", 2));
    CHECK(P("  X0 \t+ X1 ", 2) == P("X0+X1", 2));           // whitespace insignificant
    CHECK(P("-X0 + 2", 2) == P("2 - X0", 2));
}

TEST_CASE("parse errors carry positions") {
    try {
        P("X0 + ", 2);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
    CHECK_THROWS_AS(P("X0^0", 2), ParseError);  // exponent must be positive
    CHECK_THROWS_AS(P("X0 + (X1", 2), ParseError);
    CHECK_THROWS_AS(P("", 2), ParseError);
    CHECK_THROWS_AS(P("X", 2), ParseError);     // missing index
}

TEST_CASE("parse-print-parse is a fixed point") {
    TestRng rng(11);
    for (int round = 0; round < 100; ++round) {
        Polynomial p = rng.poly(4, 5, 8);
        std::string text = p.to_string();
        Polynomial q = parse_polynomial(text, 4);
        CHECK(p == q);
        CHECK(q.to_string() == text);
    }
}

TEST_CASE("canonical printing is grevlex descending") {
    CHECK(P("X1 + X0", 2).to_string() == "X0 + X1");
    CHECK(P("X0*X2 - X1^2", 3).to_string() == "X1^2 - X0*X2");  // grevlex: X1^2 > X0*X2
    CHECK(P("2*X0 - 2*X0", 2).to_string() == "0");
    CHECK(P("X0 - 1/2", 1).to_string() == "X0 - 1/2");
    CHECK(P("-3*X0^2", 1).to_string() == "-3*X0^2");
}

TEST_CASE("is_homogeneous") {
    CHECK(*P("X0^2*X3 - X1^2*X2", 4).homogeneous_degree() == 3);
    CHECK(!P("X0 + X1^2", 2).homogeneous_degree());
    CHECK(*P("X0^5", 1).homogeneous_degree() == 5);
    CHECK(!Polynomial::zero(2).homogeneous_degree());
}

TEST_CASE("partial derivatives") {
    CHECK(P("X0^2*X3", 4).derivative(0) == P("2*X0*X3", 4));
    CHECK(P("X0^2*X3", 4).derivative(1).is_zero());
    CHECK(P("X0*X2 - X1^2", 3).derivative(0) == P("X2", 3));
    CHECK_THROWS_AS(P("X0", 2).derivative(5), std::out_of_range);
}

TEST_CASE("compose") {
    std::vector<Polynomial> sq = {P("X0^2", 3), P("X1^2", 3), P("X2^2", 3)};
    CHECK(P("X0", 3).compose(sq) == P("X0^2", 3));
    // hand expansion: (X0*X2 - X1^2) o squares = X0^2*X2^2 - X1^4
    CHECK(P("X0*X2 - X1^2", 3).compose(sq) == P("X0^2*X2^2 - X1^4", 3));
    CHECK_THROWS_AS(P("X0", 3).compose(std::vector<Polynomial>{P("X0", 3)}),
                    std::invalid_argument);
}

TEST_CASE("compose degree law on random homogeneous forms") {
    TestRng rng(23);
    std::vector<Polynomial> cubes = {P("X0^3", 3), P("X1^3", 3), P("X2^3", 3)};
    for (int round = 0; round < 50; ++round) {
        std::size_t d = static_cast<std::size_t>(rng.pick(1, 4));
        Polynomial p = rng.homogeneous(3, d, 5);
        Polynomial q = p.compose(cubes);
        REQUIRE(!q.is_zero());
        CHECK(*q.homogeneous_degree() == static_cast<std::int64_t>(3 * d));
    }
}

TEST_CASE("compose respects products") {
    TestRng rng(29);
    std::vector<Polynomial> maps = {P("X0^2", 3), P("X0*X1", 3), P("X2^2 - X0*X1", 3)};
    for (int round = 0; round < 30; ++round) {
        Polynomial p = rng.poly(3, 3, 4);
        Polynomial q = rng.poly(3, 3, 4);
        CHECK((p * q).compose(maps) == p.compose(maps) * q.compose(maps));
    }
}

TEST_CASE("dehomogenize") {
    CHECK(P("X0^2*X3 - X1^2*X2", 4).dehomogenize(3) == P("X0^2 - X1^2*X2", 3));
    CHECK(P("X0", 1).dehomogenize(0) == Polynomial::constant(0, rat(1)));
    CHECK(P("X0*X2 - X1^2", 3).dehomogenize(2) == P("X0 - X1^2", 2));
    CHECK_THROWS_AS(P("X0 + X1^2", 2).dehomogenize(0), std::invalid_argument);
}

TEST_CASE("exact division") {
    auto q = exact_divide(P("X0^2*X2^2 - X1^4", 3), P("X0*X2 - X1^2", 3));
    REQUIRE(q);
    CHECK(*q == P("X0*X2 + X1^2", 3));

    Polynomial p = P("X0^3 - 2*X1*X2 + 7", 3);
    auto self = exact_divide(p, p);
    REQUIRE(self);
    CHECK(*self == Polynomial::constant(3, rat(1)));

    CHECK(!exact_divide(P("X0^2 + X1", 3), P("X2", 3)));
    CHECK_THROWS_AS(exact_divide(p, Polynomial::zero(3)), std::invalid_argument);
}

TEST_CASE("exact division recovers factors on random products") {
    TestRng rng(37);
    for (int round = 0; round < 60; ++round) {
        Polynomial p = rng.nonzero_poly(3, 3, 4);
        Polynomial q = rng.nonzero_poly(3, 3, 4);
        auto t = exact_divide(p * q, q);
        REQUIRE(t);
        CHECK(*t == p);
    }
}

TEST_CASE("jacobian determinant") {
    std::vector<Polynomial> sq = {P("X0^2", 3), P("X1^2", 3), P("X2^2", 3)};
    CHECK(jacobian_det(sq) == P("8*X0*X1*X2", 3));

    std::vector<Polynomial> id = {P("X0", 3), P("X1", 3), P("X2", 3)};
    CHECK(jacobian_det(id) == Polynomial::constant(3, rat(1)));

    std::vector<Polynomial> degenerate = {P("X0^2", 3), P("X0*X1", 3), P("X0*X2", 3)};
    CHECK(jacobian_det(degenerate).is_zero());

    std::vector<Polynomial> not_square = {P("X0", 3), P("X1", 3)};
    CHECK_THROWS_AS(jacobian_det(not_square), std::invalid_argument);
    std::vector<Polynomial> mixed = {P("X0", 3), P("X1^2", 3), P("X2", 3)};
    CHECK_THROWS_AS(jacobian_det(mixed), std::invalid_argument);
}

TEST_CASE("ring axioms on random triples") {
    TestRng rng(41);
    for (int round = 0; round < 200; ++round) {
        Polynomial a = rng.poly(3, 3, 4);
        Polynomial b = rng.poly(3, 3, 4);
        Polynomial c = rng.poly(3, 3, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("degree is additive on products") {
    TestRng rng(43);
    for (int round = 0; round < 100; ++round) {
        Polynomial a = rng.nonzero_poly(3, 4, 5);
        Polynomial b = rng.nonzero_poly(3, 4, 5);
        Polynomial ab = a * b;
        REQUIRE(!ab.is_zero());  // integral domain
        CHECK(*ab.total_degree() == *a.total_degree() + *b.total_degree());
    }
}

TEST_CASE("Euler relation on random homogeneous forms") {
    TestRng rng(47);
    for (int round = 0; round < 200; ++round) {
        std::size_t nv = static_cast<std::size_t>(rng.pick(2, 5));  // ambient n <= 4
        std::size_t d = static_cast<std::size_t>(rng.pick(1, 6));
        Polynomial f = rng.homogeneous(nv, d, 6);
        Polynomial sum(nv);
        for (std::size_t i = 0; i < nv; ++i)
            sum += Polynomial::variable(nv, i) * f.derivative(i);
        CHECK(sum == f.scaled(rat(static_cast<long>(d))));
    }
}

TEST_CASE("exponent overflow is a hard error") {
    Polynomial big = P("X0^999999999", 1);
    Polynomial p2 = big * big;  // still within range
    CHECK(*p2.total_degree() == 1999999998);
    CHECK_THROWS_AS(p2 * big, std::overflow_error);
}

TEST_CASE("evaluate") {
    Polynomial f = P("X0*X2 - X1^2", 3);
    std::vector<Rational> on{rat(1), rat(2), rat(4)};
    CHECK(f.evaluate(on) == 0);
    std::vector<Rational> off{rat(1), rat(1), rat(3)};
    CHECK(f.evaluate(off) == rat(2));
}
