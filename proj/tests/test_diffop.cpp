#include <doctest.h>

#include "bispec/diffop.hpp"
#include "bispec/dsl.hpp"
#include "gen.hpp"

using namespace bispec;

namespace {

DiffOp scalar_op(Side side, std::initializer_list<std::pair<int, const char*>> cs) {
    DiffOp d(side, 1);
    for (const auto& [o, s] : cs) {
        MatRF m(1, 1);
        m.at(0, 0) = parse_ratfunc(s);
        d.set_coeff(o, m);
    }
    return d;
}

}  // namespace

TEST_CASE("leibniz base case: Dx composed with f(x)") {
    DiffOp dx = DiffOp::derivative(Side::left, 1);
    DiffOp f = scalar_op(Side::left, {{0, "1/x"}});
    DiffOp prod = compose_left(dx, f);
    CHECK(prod == scalar_op(Side::left, {{1, "1/x"}, {0, "-1/x^2"}}));
}

TEST_CASE("identity is a unit in both rings") {
    gen::Rng rng(11);
    for (Side side : {Side::left, Side::right}) {
        DiffOp a = gen::diffop(rng, side, 2);
        DiffOp id = DiffOp::identity(side, 2);
        if (side == Side::left) {
            CHECK(compose_left(a, id) == a);
            CHECK(compose_left(id, a) == a);
        } else {
            CHECK(compose_right(a, id) == a);
            CHECK(compose_right(id, a) == a);
        }
    }
}

TEST_CASE("order-2 composition example") {
    // (-Dx^2 + 2 x^-2) o x^3 = -x^3 Dx^2 - 6x^2 Dx - 6x + 2x
    DiffOp l = scalar_op(Side::left, {{2, "-1"}, {0, "2*x^-2"}});
    DiffOp t = scalar_op(Side::left, {{0, "x^3"}});
    CHECK(compose_left(l, t) ==
          scalar_op(Side::left, {{2, "-x^3"}, {1, "-6*x^2"}, {0, "-4*x"}}));
}

TEST_CASE("right-ring composition matches the action convention") {
    DiffOp dz = DiffOp::derivative(Side::right, 1);
    CHECK(compose_right(dz, dz) == scalar_op(Side::right, {{2, "1"}}));
    DiffOp g = scalar_op(Side::right, {{0, "z"}});
    DiffOp h = scalar_op(Side::right, {{0, "z^2 - 1"}});
    CHECK(compose_right(g, h) == scalar_op(Side::right, {{0, "z^3 - z"}}));
    // Dz^2 * (1/z): coefficient 1/z sits at order 2 unchanged
    DiffOp f = scalar_op(Side::right, {{0, "1/z"}});
    DiffOp dz2 = compose_right(dz, dz);
    CHECK(compose_right(dz2, f) == scalar_op(Side::right, {{2, "1/z"}}));
    // (1/z) * Dz^2 commutes the coefficient past the derivatives
    CHECK(compose_right(f, dz2) ==
          scalar_op(Side::right, {{2, "1/z"}, {1, "-2/z^2"}, {0, "2/z^3"}}));
}

TEST_CASE("commutators") {
    gen::Rng rng(13);
    DiffOp a = gen::diffop(rng, Side::left, 2);
    CHECK(commutator(a, a).is_zero());

    DiffOp dx = DiffOp::derivative(Side::left, 1);
    DiffOp xop = scalar_op(Side::left, {{0, "x"}});
    CHECK(commutator(dx, xop) == DiffOp::identity(Side::left, 1));

    DiffOp l = scalar_op(Side::left, {{2, "-1"}});
    DiffOp t = scalar_op(Side::left, {{0, "x^3"}});
    CHECK(commutator(l, t) ==
          scalar_op(Side::left, {{1, "-6*x^2"}, {0, "-6*x"}}));

    DiffOp r = gen::diffop(rng, Side::right, 2);
    CHECK_THROWS_AS(commutator(a, r), DimensionError);
}

TEST_CASE("ad powers") {
    DiffOp l = scalar_op(Side::left, {{2, "-1"}});
    DiffOp t = scalar_op(Side::left, {{0, "x"}});
    CHECK(ad_power(l, t, 0) == t);
    CHECK(ad_power(l, t, 1) == scalar_op(Side::left, {{1, "-2"}}));
    CHECK(ad_power(l, t, 2).is_zero());
}

TEST_CASE("minimal ad order") {
    DiffOp l = scalar_op(Side::left, {{2, "-1"}, {0, "2/x^2"}});
    // constants commute with everything
    DiffOp c = scalar_op(Side::left, {{0, "5"}});
    CHECK(minimal_ad_order(l, c, 5) == 0);
    // L = -Dx^2, T = x^2: two steps to flatten, third kills it
    DiffOp l0 = scalar_op(Side::left, {{2, "-1"}});
    DiffOp t = scalar_op(Side::left, {{0, "x^2"}});
    CHECK(minimal_ad_order(l0, t, 5) == 2);
    // T = x is not in the one-pole family; the ad powers never vanish
    DiffOp tx = scalar_op(Side::left, {{0, "x"}});
    CHECK_FALSE(minimal_ad_order(l, tx, 6).has_value());
}

TEST_CASE("composition is associative in both rings") {
    gen::Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + static_cast<int>(rng() % 3);
        DiffOp a = gen::diffop(rng, Side::left, n, 2);
        DiffOp b = gen::diffop(rng, Side::left, n, 2);
        DiffOp c = gen::diffop(rng, Side::left, n, 2);
        CHECK(compose_left(a, compose_left(b, c)) ==
              compose_left(compose_left(a, b), c));
        DiffOp p = gen::diffop(rng, Side::right, n, 2);
        DiffOp q = gen::diffop(rng, Side::right, n, 2);
        DiffOp r = gen::diffop(rng, Side::right, n, 2);
        CHECK(compose_right(p, compose_right(q, r)) ==
              compose_right(compose_right(p, q), r));
    }
}

TEST_CASE("ad acts as a derivation of the ring product") {
    gen::Rng rng(19);
    for (int i = 0; i < 50; ++i) {
        DiffOp l = gen::diffop(rng, Side::left, 2, 2);
        DiffOp a = gen::diffop(rng, Side::left, 2, 1);
        DiffOp b = gen::diffop(rng, Side::left, 2, 1);
        DiffOp lhs = commutator(l, compose_left(a, b));
        DiffOp rhs = compose_left(commutator(l, a), b) +
                     compose_left(a, commutator(l, b));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("order bound with equality for nonzero leading product") {
    gen::Rng rng(23);
    for (int i = 0; i < 50; ++i) {
        DiffOp a = gen::diffop(rng, Side::left, 2, 2);
        DiffOp b = gen::diffop(rng, Side::left, 2, 2);
        DiffOp ab = compose_left(a, b);
        CHECK(ab.order() <= a.order() + b.order());
        if (!(a.coeff(a.order()) * b.coeff(b.order())).is_zero())
            CHECK(ab.order() == a.order() + b.order());
    }
}

TEST_CASE("order-0 operators multiply like matrices") {
    gen::Rng rng(29);
    for (int i = 0; i < 50; ++i) {
        MatRF a = gen::matrf_uni(rng, 2, Var::x);
        MatRF b = gen::matrf_uni(rng, 2, Var::x);
        CHECK(compose_left(DiffOp::order0(Side::left, a),
                           DiffOp::order0(Side::left, b)) ==
              DiffOp::order0(Side::left, a * b));
        MatRF p = gen::matrf_uni(rng, 2, Var::z);
        MatRF q = gen::matrf_uni(rng, 2, Var::z);
        CHECK(compose_right(DiffOp::order0(Side::right, p),
                            DiffOp::order0(Side::right, q)) ==
              DiffOp::order0(Side::right, p * q));
    }
}

TEST_CASE("coefficients must be univariate in the ring variable") {
    MatRF bad(1, 1);
    bad.at(0, 0) = parse_ratfunc("x*z");
    CHECK_THROWS_AS(DiffOp::order0(Side::left, bad), DomainError);
}
