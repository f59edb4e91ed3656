#include <doctest.h>

#include "bispec/expkernel.hpp"
#include "bispec/fixtures.hpp"
#include "gen.hpp"

using namespace bispec;

TEST_CASE("derivatives of the plane wave") {
    ExpKernel psi = ExpKernel::plane_wave(2);
    CHECK(dx(psi).m() == MatRF::scalar(2, parse_ratfunc("z")));
    CHECK(dz(psi).m() == MatRF::scalar(2, parse_ratfunc("x")));
}

TEST_CASE("product rule for the first example") {
    ProblemFile pf = load_example(1);
    const ExpKernel& psi = pf.funs.at("Psi");
    MatRF expected(2, 2);
    expected.at(0, 0) = parse_ratfunc("z^2 - z/x + 1/x^2");
    expected.at(0, 1) = parse_ratfunc("z/x^2 - 2/x^3");
    expected.at(1, 1) = expected.at(0, 0);
    CHECK(dx(psi).m() == expected);
}

TEST_CASE("the first and second example eigenvalue identities") {
    for (int n : {1, 2}) {
        ProblemFile pf = load_example(n);
        const ExpKernel& psi = pf.funs.at("Psi");
        ExpKernel lhs = apply_left(pf.ops.at("L"), psi);
        ExpKernel rhs(psi.m().scale(pf.lets.at("p")));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("the partner identities of all three examples") {
    for (int n : {1, 2, 3}) {
        ProblemFile pf = load_example(n);
        const ExpKernel& psi = pf.funs.at("Psi");
        CHECK(apply_right(psi, pf.ops.at("B")) ==
              mult_left(pf.mats.at("Theta"), psi));
    }
}

TEST_CASE("the third example is a two-sided eigenvalue situation") {
    ProblemFile pf = load_example(3);
    const ExpKernel& psi = pf.funs.at("Psi");
    CHECK(apply_left(pf.ops.at("L"), psi) ==
          mult_right(psi, pf.mats.at("F")));
}

TEST_CASE("identity operators act trivially") {
    gen::Rng rng(31);
    ExpKernel psi = gen::kernel(rng, 2);
    CHECK(apply_left(DiffOp::identity(Side::left, 2), psi) == psi);
    CHECK(apply_right(psi, DiffOp::identity(Side::right, 2)) == psi);
    CHECK(mult_left(MatRF::identity(2), psi) == psi);
    CHECK(mult_right(psi, MatRF::identity(2)) == psi);
}

TEST_CASE("left action is a ring homomorphism") {
    gen::Rng rng(37);
    for (int i = 0; i < 60; ++i) {
        const int n = 1 + static_cast<int>(rng() % 2);
        ExpKernel psi = gen::kernel(rng, n);
        DiffOp a = gen::diffop(rng, Side::left, n, 1);
        DiffOp b = gen::diffop(rng, Side::left, n, 1);
        CHECK(apply_left(compose_left(a, b), psi) ==
              apply_left(a, apply_left(b, psi)));
    }
}

TEST_CASE("right action is an anti-action matching compose_right") {
    gen::Rng rng(41);
    for (int i = 0; i < 60; ++i) {
        const int n = 1 + static_cast<int>(rng() % 2);
        ExpKernel psi = gen::kernel(rng, n);
        DiffOp b1 = gen::diffop(rng, Side::right, n, 1);
        DiffOp b2 = gen::diffop(rng, Side::right, n, 1);
        CHECK(apply_right(psi, compose_right(b1, b2)) ==
              apply_right(apply_right(psi, b1), b2));
    }
}

TEST_CASE("left and right actions commute for every operator pair") {
    gen::Rng rng(43);
    for (int i = 0; i < 60; ++i) {
        const int n = 1 + static_cast<int>(rng() % 2);
        ExpKernel psi = gen::kernel(rng, n);
        DiffOp l = gen::diffop(rng, Side::left, n, 1);
        DiffOp b = gen::diffop(rng, Side::right, n, 1);
        CHECK(apply_left(l, apply_right(psi, b)) ==
              apply_right(apply_left(l, psi), b));
    }
}

TEST_CASE("mixed kernel derivatives commute") {
    gen::Rng rng(47);
    for (int i = 0; i < 60; ++i) {
        ExpKernel psi = gen::kernel(rng, 2);
        CHECK(dx(dz(psi)) == dz(dx(psi)));
    }
}

TEST_CASE("eigenvalue multiplication checks variables and sizes") {
    gen::Rng rng(53);
    ExpKernel psi = gen::kernel(rng, 2);
    MatRF zmat = MatRF::scalar(2, parse_ratfunc("z"));
    CHECK_THROWS_AS(mult_left(zmat, psi), DomainError);
    MatRF xmat = MatRF::scalar(2, parse_ratfunc("x"));
    CHECK_THROWS_AS(mult_right(psi, xmat), DomainError);
    CHECK_THROWS_AS(mult_left(MatRF::identity(3), psi), DimensionError);
}
