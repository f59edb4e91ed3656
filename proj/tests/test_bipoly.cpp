#include <doctest.h>

#include "bispec/dsl.hpp"
#include "gen.hpp"

using namespace bispec;

namespace {

BiPoly P(const std::string& s) {
    RatFunc f = parse_ratfunc(s);
    REQUIRE(f.is_polynomial());
    return f.num();
}

}  // namespace

TEST_CASE("ring arithmetic") {
    CHECK(P("x + z") + P("x - z") == P("2*x"));
    CHECK((P("x + z") * BiPoly()).is_zero());
    CHECK(P("x*z - 1") * P("x*z + 1") == P("x^2*z^2 - 1"));
}

TEST_CASE("derivatives") {
    CHECK(P("x^3").derivative(Var::x) == P("3*x^2"));
    CHECK(P("x^3").derivative(Var::z).is_zero());
    CHECK(P("x^2*z - x*z^2").derivative(Var::x) == P("2*x*z - z^2"));
}

TEST_CASE("gcd basics") {
    CHECK(BiPoly::gcd(P("x^2 - z^2"), P("x - z")) == P("x - z"));
    gen::Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        BiPoly p = gen::bipoly_nonzero(rng);
        CHECK(BiPoly::gcd(p, BiPoly(Scalar::one())) == BiPoly(Scalar::one()));
        CHECK(BiPoly::gcd(p, p) == p.normalized_monic());
    }
    CHECK_THROWS_AS(BiPoly::gcd(BiPoly(), BiPoly()), DomainError);
}

TEST_CASE("gcd divides and is monic") {
    gen::Rng rng(99);
    for (int i = 0; i < 40; ++i) {
        BiPoly a = gen::bipoly_nonzero(rng, 2, 2);
        BiPoly b = gen::bipoly_nonzero(rng, 2, 2);
        BiPoly g = gen::bipoly_nonzero(rng, 1, 2);
        BiPoly ga = a * g, gb = b * g;
        BiPoly d = BiPoly::gcd(ga, gb);
        CHECK(d.leading_coeff().is_one());
        // g divides the gcd, and the gcd divides both products.
        CHECK_NOTHROW(BiPoly::divide_exact(d, BiPoly::gcd(g, d)));
        CHECK(BiPoly::divide_exact(ga, d) * d == ga);
        CHECK(BiPoly::divide_exact(gb, d) * d == gb);
        // gcd * lcm == product up to the monic normalization
        BiPoly l = BiPoly::lcm(ga, gb);
        CHECK(BiPoly::divide_exact(l, BiPoly::divide_exact(ga, d))
                  .normalized_monic() == gb.normalized_monic());
    }
}

TEST_CASE("univariate special cases") {
    CHECK(BiPoly::gcd(P("z^2 - 1"), P("z - 1")) == P("z - 1"));
    CHECK(BiPoly::gcd(P("x^3"), P("z^2")) == BiPoly(Scalar::one()));
    CHECK(BiPoly::gcd(P("2*x"), P("4*x^2")) == P("x"));
}

TEST_CASE("eval_x with extension scalars") {
    auto f = std::make_shared<NumberField>(
        std::vector<Rat>{Rat(1), Rat(-1), Rat(1)}, "a");
    Scalar a = Scalar::generator(f);
    BiPoly p = P("x^2 - x + 1");
    CHECK(p.eval_x(a).is_zero());
    CHECK(p.eval_x(Scalar(2)) == Scalar(3));
}

TEST_CASE("pretty printing round-trips") {
    gen::Rng rng(3);
    for (int i = 0; i < 30; ++i) {
        BiPoly p = gen::bipoly(rng, 3, 4);
        if (p.is_zero()) continue;
        CHECK(P(p.to_string()) == p);
    }
}
