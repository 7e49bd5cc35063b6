#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "capwave/cubic.hpp"
#include "capwave/field.hpp"
#include "capwave/ops.hpp"

using namespace capwave;

static SpectralField bench_field(const FrequencyLattice& lat, int stride) {
    SpectralField f(lat, true);
    for (long m = 1; m < static_cast<long>(lat.size() / 3); m += stride) {
        f.set_mode(m, cplx(1.0 / (1.0 + m), 0.5 / (1.0 + m)));
        f.set_mode(-m, std::conj(f.at_mode(m)));
    }
    return f;
}

static void BM_RoundTrip(benchmark::State& state) {
    FrequencyLattice lat(2 * std::numbers::pi, state.range(0));
    SpectralField f = bench_field(lat, 1);
    for (auto _ : state) {
        auto v = inverse_transform(f);
        benchmark::DoNotOptimize(v.data());
        SpectralField g = forward_transform(lat, v);
        benchmark::DoNotOptimize(g.coeffs.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RoundTrip)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

static void BM_Product(benchmark::State& state) {
    FrequencyLattice lat(2 * std::numbers::pi, state.range(0));
    SpectralField a = bench_field(lat, 1), b = bench_field(lat, 2);
    for (auto _ : state) {
        SpectralField p = product(a, b);
        benchmark::DoNotOptimize(p.coeffs.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Product)->RangeMultiplier(4)->Range(256, 8192)->Complexity();

static void BM_BilinearExact(benchmark::State& state) {
    FrequencyLattice lat(2 * std::numbers::pi, state.range(0));
    SpectralField a = bench_field(lat, 1), b = bench_field(lat, 2);
    Symbol2 n2 = [](double xi, double eta) { return cplx(cubic::n2(xi, eta)); };
    for (auto _ : state) {
        SpectralField p = apply_bilinear(n2, a, b);
        benchmark::DoNotOptimize(p.coeffs.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BilinearExact)->RangeMultiplier(2)->Range(64, 512)->Complexity();

static void BM_Paraproduct(benchmark::State& state) {
    FrequencyLattice lat(2 * std::numbers::pi, state.range(0));
    SpectralField a = bench_field(lat, 3), b = bench_field(lat, 1);
    for (auto _ : state) {
        SpectralField p = paraproduct(a, b);
        benchmark::DoNotOptimize(p.coeffs.data());
    }
}
BENCHMARK(BM_Paraproduct)->RangeMultiplier(2)->Range(64, 512);
