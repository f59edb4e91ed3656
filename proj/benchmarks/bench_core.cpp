#include <benchmark/benchmark.h>

#include "bispec/fixtures.hpp"
#include "bispec/kdv.hpp"
#include "bispec/solver.hpp"

using namespace bispec;

namespace {

BiPoly dense_poly(int deg) {
    BiPoly p;
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; j <= deg - i; ++j)
            p = p + BiPoly::monomial(Mono{i, j}, Scalar(i + 2 * j + 1, 3));
    return p;
}

void BM_poly_mul(benchmark::State& state) {
    BiPoly a = dense_poly(static_cast<int>(state.range(0)));
    BiPoly b = dense_poly(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_poly_mul)->Arg(4)->Arg(8);

void BM_poly_gcd(benchmark::State& state) {
    BiPoly g = dense_poly(2);
    BiPoly a = dense_poly(static_cast<int>(state.range(0))) * g;
    BiPoly b = (dense_poly(static_cast<int>(state.range(0))) +
                BiPoly(Scalar::one())) * g;
    for (auto _ : state) benchmark::DoNotOptimize(BiPoly::gcd(a, b));
}
BENCHMARK(BM_poly_gcd)->Arg(2)->Arg(4);

void BM_ratfunc_add(benchmark::State& state) {
    RatFunc f(dense_poly(3), dense_poly(2) + BiPoly(Scalar::one()));
    RatFunc g(dense_poly(2), dense_poly(3) + BiPoly(Scalar::one()));
    for (auto _ : state) benchmark::DoNotOptimize(f + g);
}
BENCHMARK(BM_ratfunc_add);

void BM_compose_left(benchmark::State& state) {
    ProblemFile pf = load_example(1);
    const DiffOp& l = pf.ops.at("L");
    for (auto _ : state) benchmark::DoNotOptimize(compose_left(l, l));
}
BENCHMARK(BM_compose_left);

void BM_apply_right(benchmark::State& state) {
    ProblemFile pf = load_example(1);
    const ExpKernel& psi = pf.funs.at("Psi");
    const DiffOp& b = pf.ops.at("B");
    for (auto _ : state) benchmark::DoNotOptimize(apply_right(psi, b));
}
BENCHMARK(BM_apply_right);

void BM_solve_theta_deg1(benchmark::State& state) {
    ProblemFile pf = load_example(1);
    const ExpKernel& psi = pf.funs.at("Psi");
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_theta_space(psi, 1, BAnsatz{2, -2, 0, 2}));
}
BENCHMARK(BM_solve_theta_deg1);

void BM_minimal_ad_order(benchmark::State& state) {
    ProblemFile pf = load_example(1);
    const DiffOp& l = pf.ops.at("L");
    DiffOp t = DiffOp::order0(Side::left,
                              MatRF::scalar(2, parse_ratfunc("x^3")));
    for (auto _ : state) benchmark::DoNotOptimize(minimal_ad_order(l, t, 10));
}
BENCHMARK(BM_minimal_ad_order);

void BM_kdv_crosscheck(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(crosscheck_scalar(2));
}
BENCHMARK(BM_kdv_crosscheck);

}  // namespace

BENCHMARK_MAIN();
