#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "capwave/dirichlet_neumann.hpp"
#include "capwave/evolution.hpp"
#include "capwave/ops.hpp"

using namespace capwave;

static void BM_DnSeries3Fast(benchmark::State& state) {
    FrequencyLattice lat(2 * std::numbers::pi, state.range(0));
    SpectralField h = sample_real(lat, [](double x) { return 0.02 * std::cos(x); });
    SpectralField phi = sample_real(lat, [](double x) { return 0.02 * std::sin(2 * x); });
    for (auto _ : state) {
        DNExpansion ex = dn_series(h, phi, 3);
        benchmark::DoNotOptimize(ex.order3.coeffs.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DnSeries3Fast)->RangeMultiplier(4)->Range(256, 8192)->Complexity();

static void BM_DnOracle(benchmark::State& state) {
    FrequencyLattice lat(2 * std::numbers::pi, state.range(0));
    SpectralField h = sample_real(lat, [](double x) { return 0.02 * std::cos(x); });
    SpectralField phi = sample_real(lat, [](double x) { return 0.02 * std::sin(2 * x); });
    for (auto _ : state) {
        auto [G, st] = dn_boundary_integral(h, phi, 1e-10);
        benchmark::DoNotOptimize(G.coeffs.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DnOracle)->RangeMultiplier(2)->Range(64, 512)->Complexity();

static void BM_Step(benchmark::State& state) {
    FrequencyLattice lat(2 * std::numbers::pi, state.range(0));
    IntegratorConfig cfg;
    cfg.dt = 0.01;
    WaveState st;
    st.h = sample_real(lat, [](double x) { return 0.01 * std::cos(x); });
    st.phi = sample_real(lat, [](double x) { return 0.01 * std::sin(x); });
    for (auto _ : state) {
        WaveState next = step(st, cfg);
        benchmark::DoNotOptimize(next.h.coeffs.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Step)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

BENCHMARK_MAIN();
