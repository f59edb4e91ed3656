#include <doctest.h>

#include "bispec/fixtures.hpp"
#include "bispec/solver.hpp"
#include "gen.hpp"

using namespace bispec;

namespace {

Scalar dot_row(const ScalarVec& row, const ScalarVec& v) {
    Scalar s = Scalar::zero();
    for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * v[i];
    return s;
}

}  // namespace

TEST_CASE("plane wave: constants pair with themselves") {
    ExpKernel psi = ExpKernel::plane_wave(2);
    BAnsatz an{0, 0, 0, 2};
    SolutionSpace space = solve_theta_space(psi, 0, an);
    CHECK(space.eigen_dim() == 4);
    REQUIRE(space.basis.size() == 4);
    for (const auto& [theta, b] : space.basis) {
        REQUIRE(b.order() == 0);
        CHECK(theta == b.coeff(0));  // same constant matrix on both sides
    }
}

TEST_CASE("the first-example pair encodes into the assembled kernel") {
    ProblemFile pf = load_example(1);
    const ExpKernel& psi = pf.funs.at("Psi");
    BAnsatz an{3, -2, 0, 2};
    AssembledSystem as = assemble_theta_system(psi, 3, an);
    CHECK(as.eigen_unknowns == 16);
    const int bw = an.laurent_high - an.laurent_low + 1;
    CHECK(as.sys.cols == 16 + (an.max_order + 1) * bw * 4);

    // Encode Theta = x^3 I and the known partner operator.
    ScalarVec v(as.sys.cols, Scalar::zero());
    auto theta_idx = [&](int d, int r, int c) { return (d * 2 + r) * 2 + c; };
    auto b_idx = [&](int i, int e, int r, int c) {
        return 16 + ((i * bw + (e - an.laurent_low)) * 2 + r) * 2 + c;
    };
    v[theta_idx(3, 0, 0)] = Scalar::one();
    v[theta_idx(3, 1, 1)] = Scalar::one();
    v[b_idx(3, 0, 0, 0)] = Scalar::one();          // b3 = I
    v[b_idx(3, 0, 1, 1)] = Scalar::one();
    v[b_idx(2, -1, 0, 0)] = Scalar(-3);            // b2 = -3/z I
    v[b_idx(2, -1, 1, 1)] = Scalar(-3);
    v[b_idx(1, -2, 0, 0)] = Scalar(3);             // b1 = 3/z^2 I
    v[b_idx(1, -2, 1, 1)] = Scalar(3);
    v[b_idx(0, -2, 0, 1)] = Scalar(3);             // b0 = 3 E12 / z^2
    for (const auto& row : as.sys.rows) CHECK(dot_row(row, v).is_zero());
}

TEST_CASE("first example Theta space at degree 3") {
    ProblemFile pf = load_example(1);
    SolutionSpace space =
        solve_theta_space(pf.funs.at("Psi"), 3, BAnsatz{6, -6, 0, 2});
    CHECK(space.eigen_dim() == 10);
}

TEST_CASE("first example Theta space at degree 0 contains the constants") {
    ProblemFile pf = load_example(1);
    SolutionSpace space =
        solve_theta_space(pf.funs.at("Psi"), 0, BAnsatz{1, -1, 0, 2});
    CHECK(space.eigen_dim() >= 1);
    // I and E12 are both admissible here.
    CHECK(space.eigen_dim() == 2);
    std::vector<ScalarVec> vecs;
    for (const auto& m : space.eigen_basis)
        vecs.push_back(eigen_to_vector(m, Var::x, 0));
    Rref r = rref(vecs, 4);
    CHECK(in_span(r, eigen_to_vector(MatRF::identity(2), Var::x, 0)));
}

TEST_CASE("scalar wave function: degree-2 space kills the linear term") {
    MatRF m(1, 1);
    m.at(0, 0) = parse_ratfunc("z - 1/x");
    ExpKernel psi(m);
    SolutionSpace space = solve_theta_space(psi, 2, BAnsatz{2, -2, 0, 1});
    CHECK(space.eigen_dim() == 2);
    for (const auto& mth : space.eigen_basis) {
        const RatFunc& t = mth.at(0, 0);
        CHECK(t.num().derivative(Var::x).eval_x(Scalar::zero()).is_zero());
    }
}

TEST_CASE("solve_b_for_theta recovers the first-example partner") {
    ProblemFile pf = load_example(1);
    const ExpKernel& psi = pf.funs.at("Psi");
    auto b = solve_b_for_theta(psi, pf.mats.at("Theta"), BAnsatz{3, -2, 0, 2});
    REQUIRE(b.has_value());
    CHECK(apply_right(psi, *b) == mult_left(pf.mats.at("Theta"), psi));
    CHECK(*b == pf.ops.at("B"));
}

TEST_CASE("solve_b_for_theta recovers the third-example partner at order 3") {
    ProblemFile pf = load_example(3);
    const ExpKernel& psi = pf.funs.at("Psi");
    // No partner of order <= 2 exists for this Theta.
    CHECK_FALSE(solve_b_for_theta(psi, pf.mats.at("Theta"),
                                  BAnsatz{2, -3, 0, 2}).has_value());
    auto b = solve_b_for_theta(psi, pf.mats.at("Theta"), BAnsatz{3, -3, 0, 2});
    REQUIRE(b.has_value());
    CHECK(*b == pf.ops.at("B"));
}

TEST_CASE("x I admits no partner for the first example") {
    ProblemFile pf = load_example(1);
    MatRF xi = MatRF::scalar(2, parse_ratfunc("x"));
    BAnsatz used{};
    auto b = solve_b_for_theta_escalating(pf.funs.at("Psi"), xi,
                                          BAnsatz{1, -1, 0, 2}, 2, &used);
    CHECK_FALSE(b.has_value());
    CHECK(used.max_order == 4);
}

TEST_CASE("escalation finds the minimal sufficient bounds") {
    ProblemFile pf = load_example(1);
    BAnsatz used{};
    auto b = solve_b_for_theta_escalating(pf.funs.at("Psi"), pf.mats.at("Theta"),
                                          BAnsatz{1, -1, 0, 2}, 4, &used);
    REQUIRE(b.has_value());
    CHECK(used.max_order == 4);  // 1 -> 2 -> 4 is the first round with order >= 3
    CHECK(used.laurent_low == -4);
}

TEST_CASE("third example F space at the spec bounds misses one direction") {
    ProblemFile pf = load_example(3);
    LAnsatz an{2, parse_ratfunc("x^3*(x-2)^3").num(), 8, 2};
    SolutionSpace space = solve_f_space(pf.funs.at("Psi"), 2, an);
    // The z^2/2 E21 direction needs pole order 4; at these bounds only
    // four of the five family directions appear.
    CHECK(space.eigen_dim() == 4);
}

TEST_CASE("the pinned pair encodes into the F-system kernel") {
    ProblemFile pf = load_example(3);
    const ExpKernel& psi = pf.funs.at("Psi");
    LAnsatz an{2, parse_ratfunc("x^3*(x-2)^3").num(), 8, 2};
    AssembledSystem as = assemble_f_system(psi, 2, an);
    CHECK(as.eigen_unknowns == 12);

    // Encode F = diag(0, z^2) and the bundled L (numerators = coeff * den).
    ScalarVec v(as.sys.cols, Scalar::zero());
    auto f_idx = [&](int g, int r, int c) { return (g * 2 + r) * 2 + c; };
    v[f_idx(2, 1, 1)] = Scalar::one();
    const DiffOp& l = pf.ops.at("L");
    int k = 12;
    for (int i = 0; i <= an.max_order; ++i) {
        MatRF num(2, 2);
        MatRF coeff = l.coeff(i);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                num.at(r, c) = coeff.at(r, c) * RatFunc(an.den);
        for (int d = 0; d <= an.num_deg; ++d)
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) {
                    const RatFunc& e = num.at(r, c);
                    REQUIRE(e.is_polynomial());
                    v[k++] = e.num().coeff(Mono{d, 0});
                }
    }
    for (const auto& row : as.sys.rows) CHECK(dot_row(row, v).is_zero());
}

TEST_CASE("enlarging the ansatz never shrinks the space") {
    ProblemFile pf = load_example(1);
    const ExpKernel& psi = pf.funs.at("Psi");
    SolutionSpace small = solve_theta_space(psi, 2, BAnsatz{2, -2, 0, 2});
    SolutionSpace big = solve_theta_space(psi, 2, BAnsatz{4, -4, 0, 2});
    CHECK(small.eigen_dim() <= big.eigen_dim());
    CHECK(big.eigen_dim() == 6);
}

TEST_CASE("identical inputs produce identical bases") {
    ProblemFile pf = load_example(1);
    const ExpKernel& psi = pf.funs.at("Psi");
    SolutionSpace a = solve_theta_space(psi, 2, BAnsatz{3, -3, 0, 2});
    SolutionSpace b = solve_theta_space(psi, 2, BAnsatz{3, -3, 0, 2});
    REQUIRE(a.basis.size() == b.basis.size());
    for (std::size_t i = 0; i < a.basis.size(); ++i) {
        CHECK(a.basis[i].first == b.basis[i].first);
        CHECK(a.basis[i].second == b.basis[i].second);
    }
    REQUIRE(a.eigen_basis.size() == b.eigen_basis.size());
    for (std::size_t i = 0; i < a.eigen_basis.size(); ++i)
        CHECK(a.eigen_basis[i] == b.eigen_basis[i]);
}

TEST_CASE("ansatz validation") {
    CHECK_THROWS_AS((BAnsatz{-1, 0, 0, 2}).validate(), DomainError);
    CHECK_THROWS_AS((BAnsatz{1, 1, 0, 2}).validate(), DomainError);
    CHECK_THROWS_AS((LAnsatz{1, BiPoly(), 2, 2}).validate(), DomainError);
    CHECK_THROWS_AS((LAnsatz{1, parse_ratfunc("z").num(), 2, 2}).validate(),
                    DomainError);
    ProblemFile pf = load_example(1);
    CHECK_THROWS_AS(
        solve_theta_space(pf.funs.at("Psi"), 1, BAnsatz{1, -1, 0, 3}),
        DimensionError);
}
