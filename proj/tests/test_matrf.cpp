#include <doctest.h>

#include "bispec/dsl.hpp"
#include "bispec/matrf.hpp"
#include "gen.hpp"

using namespace bispec;

TEST_CASE("identity and elementary products") {
    gen::Rng rng(5);
    MatRF a = gen::matrf(rng, 2, 2);
    CHECK(a * MatRF::identity(2) == a);
    CHECK(MatRF::identity(2) * a == a);

    MatRF e12 = MatRF::unit(2, 0, 1);
    CHECK((e12 * e12).is_zero());
    MatRF e21 = MatRF::unit(2, 1, 0);
    CHECK(e12 * e21 == MatRF::unit(2, 0, 0));
}

TEST_CASE("dimension mismatch raises") {
    MatRF a(2, 3), b(2, 3);
    CHECK_THROWS_AS(a * b, DimensionError);
    MatRF c(3, 2);
    CHECK_NOTHROW(a * c);
    CHECK_THROWS_AS(a + c, DimensionError);
}

TEST_CASE("scaling and noncommutativity") {
    gen::Rng rng(6);
    MatRF a = gen::matrf(rng, 2, 2);
    RatFunc f = gen::ratfunc_nonzero(rng);
    CHECK(a.scale(f).scale(f.inverse()) == a);
    MatRF b = gen::matrf(rng, 2, 2);
    CHECK(a * b - b * a == -(b * a - a * b));
}

TEST_CASE("univariate detection") {
    MatRF m(1, 1);
    m.at(0, 0) = parse_ratfunc("x^2/(x - 2)");
    CHECK(m.univariate_in(Var::x));
    CHECK_FALSE(m.univariate_in(Var::z));
    m.at(0, 0) = parse_ratfunc("x*z");
    CHECK_FALSE(m.univariate_in(Var::x));
}
