#include <doctest.h>

#include "bispec/dsl.hpp"
#include "bispec/kdv.hpp"
#include "gen.hpp"

using namespace bispec;

namespace {

FieldPtr eisenstein() {
    return std::make_shared<NumberField>(
        std::vector<Rat>{Rat(1), Rat(-1), Rat(1)}, "a");
}

KdVConfig cube_roots_of_minus_one() {
    auto f = eisenstein();
    Scalar a = Scalar::generator(f);
    return KdVConfig{{{Scalar(-1), 1}, {a, 1}, {Scalar::one() - a, 1}}};
}

BiPoly P(const std::string& s) { return parse_ratfunc(s).num(); }

bool all_zero(const std::vector<ConstraintResidual>& rs) {
    for (const auto& r : rs)
        if (!r.residual.is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("single-pole constraints are vacuous") {
    for (int nu : {1, 2, 3}) {
        KdVConfig cfg{{{Scalar::zero(), nu}}};
        auto rs = check_constraints(cfg);
        CHECK(rs.size() == static_cast<std::size_t>(nu));
        CHECK(all_zero(rs));
    }
}

TEST_CASE("the cube roots of -1 satisfy the constraints exactly") {
    auto rs = check_constraints(cube_roots_of_minus_one());
    CHECK(rs.size() == 3);
    CHECK(all_zero(rs));
}

TEST_CASE("two real poles at distance one fail with residual 2") {
    KdVConfig cfg{{{Scalar::zero(), 1}, {Scalar::one(), 1}}};
    auto rs = check_constraints(cfg);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].residual == Scalar(2));   // at p = 0: 2/(1-0)^3
    CHECK(rs[1].residual == Scalar(-2));  // at p = 1: 2/(0-1)^3
    CHECK_FALSE(all_zero(rs));
}

TEST_CASE("tau and potential formulas") {
    KdVConfig one{{{Scalar::zero(), 1}}};
    CHECK(tau(one) == P("x"));
    CHECK(potential(one) == parse_ratfunc("2/x^2"));

    KdVConfig two{{{Scalar::zero(), 2}}};
    CHECK(tau(two) == P("x^3"));
    CHECK(potential(two) == parse_ratfunc("6/x^2"));

    CHECK(tau(cube_roots_of_minus_one()) == P("x^3 + 1"));
}

TEST_CASE("the potential is minus twice the second log-derivative of tau") {
    CHECK(verify_log_identity(KdVConfig{{{Scalar::zero(), 1}}}));
    CHECK(verify_log_identity(KdVConfig{{{Scalar::zero(), 3}}}));
    // Holds even when the KdV constraints fail.
    CHECK(verify_log_identity(KdVConfig{{{Scalar::zero(), 1}, {Scalar(5), 1}}}));
    CHECK(verify_log_identity(cube_roots_of_minus_one()));

    gen::Rng rng(71);
    for (int i = 0; i < 50; ++i) {
        KdVConfig cfg;
        const int count = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < count; ++k) {
            Scalar p;
            bool fresh = false;
            while (!fresh) {
                p = gen::scalar(rng);
                fresh = true;
                for (const auto& q : cfg.poles)
                    if (q.p == p) fresh = false;
            }
            cfg.poles.push_back({p, 1 + static_cast<int>(rng() % 3)});
        }
        CHECK(verify_log_identity(cfg));
    }
}

TEST_CASE("admissibility by vanishing odd derivatives") {
    KdVConfig cfg{{{Scalar::zero(), 1}}};
    CHECK(theta_admissible(P("x^3"), cfg));
    CHECK_FALSE(theta_admissible(P("x"), cfg));
    CHECK(theta_admissible(P("7"), cfg));
    CHECK(theta_admissible(P("7"), cube_roots_of_minus_one()));
    // theta' = 4(x^3 + 1) vanishes at all three poles
    CHECK(theta_admissible(P("x^4 + 4*x"), cube_roots_of_minus_one()));
    // tau itself is not admissible: its derivative misses the poles
    CHECK_FALSE(theta_admissible(P("x^3 + 1"), cube_roots_of_minus_one()));
}

TEST_CASE("admissible dimension counts") {
    KdVConfig cfg{{{Scalar::zero(), 1}}};
    CHECK(admissible_dim(cfg, 5) == 5);
    CHECK(admissible_dim(cfg, 0) == 1);
    // nu = 2 kills derivatives of order 1 and 3 at zero.
    KdVConfig two{{{Scalar::zero(), 2}}};
    CHECK(admissible_dim(two, 5) == 4);
    // independence of the conditions: dim = N + 1 - sum(nu)
    KdVConfig pair{{{Scalar::zero(), 1}, {Scalar::one(), 1}}};
    CHECK(admissible_dim(pair, 5) == 4);
    KdVConfig mixed{{{Scalar::zero(), 2}, {Scalar(3), 1}}};
    CHECK(admissible_dim(mixed, 6) == 4);
}

TEST_CASE("admissible polynomials form an algebra") {
    gen::Rng rng(73);
    for (const KdVConfig& cfg :
         {KdVConfig{{{Scalar::zero(), 1}}}, KdVConfig{{{Scalar::zero(), 2}}},
          cube_roots_of_minus_one()}) {
        auto basis = admissible_basis(cfg, 5);
        for (int trial = 0; trial < 20; ++trial) {
            BiPoly u, v;
            for (const auto& b : basis) {
                u = u + b * gen::scalar(rng);
                v = v + b * gen::scalar(rng);
            }
            CHECK(theta_admissible(u * v, cfg));
        }
    }
}

TEST_CASE("solver and derivative characterization agree for the one-pole case") {
    for (int N = 0; N <= 3; ++N) CHECK(crosscheck_scalar(N));
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(check_constraints(
                        KdVConfig{{{Scalar::zero(), 0}}}), DomainError);
    CHECK_THROWS_AS(check_constraints(KdVConfig{
                        {{Scalar::zero(), 1}, {Scalar::zero(), 2}}}),
                    DomainError);
}
