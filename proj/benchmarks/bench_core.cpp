#include <benchmark/benchmark.h>

#include "ycluster/mutclass.hpp"
#include "ycluster/seed_engine.hpp"
#include "ycluster/ysystem_verify.hpp"

using namespace ycluster;

static void BM_MutateMatrix(benchmark::State& state) {
    auto q = build_sg_quiver(static_cast<int>(state.range(0)), 7);
    std::size_t k = 0;
    auto b = q.matrix();
    for (auto _ : state) {
        b = mutate_matrix(b, k);
        k = (k + 1) % b.size();
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_MutateMatrix)->Arg(1)->Arg(4);

static void BM_CanonicalForm(benchmark::State& state) {
    auto q = build_sg_quiver(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(q));
}
BENCHMARK(BM_CanonicalForm)->Arg(1)->Arg(4);

static void BM_TropicalRun(benchmark::State& state) {
    FamilyDescriptor d{Family::SG, static_cast<int>(state.range(0)), 7};
    auto s = tropical_seed(build_quiver(d));
    auto sched = make_schedule(d);
    for (auto _ : state) benchmark::DoNotOptimize(run(s, sched, d.half_window()));
}
BENCHMARK(BM_TropicalRun)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_NumericRun(benchmark::State& state) {
    FamilyDescriptor d{Family::RSG, static_cast<int>(state.range(0)), 7};
    auto s = numeric_seed(build_quiver(d), 1);
    auto sched = make_schedule(d);
    for (auto _ : state) benchmark::DoNotOptimize(run(s, sched, d.y_period()));
}
BENCHMARK(BM_NumericRun)->Arg(1)->Arg(3)->Unit(benchmark::kMicrosecond);

static void BM_SymbolicRun(benchmark::State& state) {
    FamilyDescriptor d{Family::SG, 1, static_cast<int>(state.range(0))};
    auto s = symbolic_seed(build_quiver(d), false);
    auto sched = make_schedule(d);
    for (auto _ : state) benchmark::DoNotOptimize(run(s, sched, d.y_period()));
}
BENCHMARK(BM_SymbolicRun)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_ExactDivision(benchmark::State& state) {
    const std::size_t nv = 3;
    auto a = LaurentPoly::constant(nv, 1) + LaurentPoly::variable(nv, 0) + LaurentPoly::variable(nv, 1, -1) +
             LaurentPoly::variable(nv, 2);
    auto b = LaurentPoly::constant(nv, 2) + LaurentPoly::variable(nv, 1) * LaurentPoly::variable(nv, 2);
    auto num = lp_pow(a, static_cast<unsigned>(state.range(0))) * b;
    for (auto _ : state) benchmark::DoNotOptimize(lp_exact_div(num, b));
}
BENCHMARK(BM_ExactDivision)->Arg(4)->Arg(8);

static void BM_RogersL(benchmark::State& state) {
    double x = 0.0, acc = 0.0;
    for (auto _ : state) {
        x += 0.000123;
        if (x > 1.0) x -= 1.0;
        acc += rogers_L(x);
    }
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_RogersL);

static void BM_FindDynkin(benchmark::State& state) {
    auto q = build_rsg_quiver(1, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(find_dynkin(q, 200000));
}
BENCHMARK(BM_FindDynkin)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
