#include <benchmark/benchmark.h>

#include "rumin/estimates.hpp"
#include "rumin/laplacians.hpp"
#include "rumin/rumin_complex.hpp"

using namespace rumin;

namespace {

// A fresh ring per iteration measures the uncached rewriting cost.
void BM_PbwMultiply(benchmark::State& state) {
    auto g = cartan_group();
    for (auto _ : state) {
        auto ring = PbwRing::create(g);
        EnvElement a = parse_env(ring, "X2^2*X1 + X5*X3 - X4*X2");
        EnvElement b = parse_env(ring, "X2*X1^2 - X3^2 + X1*X4");
        EnvElement p = a;
        for (int i = 0; i < state.range(0); ++i) p = p * b;
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_PbwMultiply)->Arg(1)->Arg(2)->Arg(3);

void BM_NormalFormWord(benchmark::State& state) {
    auto ring = PbwRing::create(cartan_group());
    std::vector<int> w;
    for (int i = 0; i < state.range(0); ++i) w.push_back(4 - i % 5);
    for (auto _ : state) benchmark::DoNotOptimize(normal_form(ring, w));
}
BENCHMARK(BM_NormalFormWord)->Arg(4)->Arg(8)->Arg(12);

void BM_BuildComplex(benchmark::State& state) {
    auto g = cartan_group();
    for (auto _ : state) {
        RuminComplex c(PbwRing::create(g));
        for (int h = 0; h <= 4; ++h) benchmark::DoNotOptimize(c.dc(h));
    }
}
BENCHMARK(BM_BuildComplex)->Unit(benchmark::kMillisecond);

void BM_BuildFree(benchmark::State& state) {
    auto g = free_nilpotent(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) {
        RuminComplex c(PbwRing::create(g));
        for (int h = 0; h < c.n(); ++h) benchmark::DoNotOptimize(c.dc(h));
    }
}
BENCHMARK(BM_BuildFree)->Args({2, 2})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_Laplacian(benchmark::State& state) {
    RuminComplex c(PbwRing::create(cartan_group()));
    Family f = static_cast<Family>(state.range(0));
    int h = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(laplacian(c, f, h));
}
BENCHMARK(BM_Laplacian)
    ->Args({static_cast<int>(Family::A), 2})
    ->Args({static_cast<int>(Family::R), 2})
    ->Args({static_cast<int>(Family::G), 0})
    ->Args({static_cast<int>(Family::G), 2})
    ->Unit(benchmark::kMillisecond);

void BM_ExponentTables(benchmark::State& state) {
    RuminComplex c(PbwRing::create(cartan_group()));
    for (auto _ : state)
        for (Theorem t : {Theorem::H2, Theorem::C2, Theorem::H2cor, Theorem::H2sum})
            benchmark::DoNotOptimize(theorem_table(c, t));
}
BENCHMARK(BM_ExponentTables)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
