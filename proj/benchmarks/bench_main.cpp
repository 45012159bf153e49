#include <benchmark/benchmark.h>

#include <vector>

#include "randwave/ensembles/rng_stream.hpp"
#include "randwave/ensembles/samplers.hpp"
#include "randwave/geometry/spectral_block.hpp"
#include "randwave/harmonics/sphere_harmonics.hpp"
#include "randwave/harmonics/synthesis.hpp"
#include "randwave/wave/damped_solver.hpp"
#include "randwave/wave/line_propagator.hpp"

using namespace randwave;

static void BM_NormalizedLegendre(benchmark::State& state)
{
    int const L = static_cast<int>(state.range(0));
    std::vector<double> out;
    double x = 0.3;
    for (auto _ : state)
    {
        harmonics::normalized_legendre(L, x, std::sqrt(1 - x * x), out);
        benchmark::DoNotOptimize(out.data());
    }
}
BENCHMARK(BM_NormalizedLegendre)->Arg(16)->Arg(64)->Arg(256);

static void BM_SphereSynthesis(benchmark::State& state)
{
    int const k = static_cast<int>(state.range(0));
    auto block = geometry::sphere_degree_block(k);
    harmonics::BlockSynthesizer synth(block, Field::Complex, harmonics::GridKind::Quadrature);
    ensembles::RngStream rng(1, 0);
    auto coeffs = ensembles::sample_sphere_uniform(block.dim(), Field::Complex, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(synth.synthesize(coeffs));
}
BENCHMARK(BM_SphereSynthesis)->Arg(10)->Arg(32)->Arg(64);

static void BM_TorusSynthesis(benchmark::State& state)
{
    double const h = 1.0 / static_cast<double>(state.range(0));
    auto block = geometry::torus_modes_in_window(2, {h, 1.0, 2.0});
    harmonics::BlockSynthesizer synth(block, Field::Complex, harmonics::GridKind::Quadrature);
    ensembles::RngStream rng(2, 0);
    auto coeffs = ensembles::sample_sphere_uniform(block.dim(), Field::Complex, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(synth.synthesize(coeffs));
}
BENCHMARK(BM_TorusSynthesis)->Arg(8)->Arg(32);

static void BM_PhiloxNormal(benchmark::State& state)
{
    ensembles::RngStream rng(3, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(rng.normal());
}
BENCHMARK(BM_PhiloxNormal);

static void BM_StrangStep(benchmark::State& state)
{
    int const cutoff = static_cast<int>(state.range(0));
    auto damping = wave::DampingProfile::strip(2, 1.0, 1);
    wave::DampedWaveSolver solver(damping, 2, cutoff, 0.5 / cutoff);
    auto s = wave::WaveState::zeros(2, cutoff);
    s.u0[s.index({1, 0})] = 1.0;
    for (auto _ : state)
    {
        solver.step(s);
        benchmark::DoNotOptimize(s.u0.data());
    }
}
BENCHMARK(BM_StrangStep)->Arg(16)->Arg(32);

static void BM_LinePower(benchmark::State& state)
{
    int const cutoff = static_cast<int>(state.range(0));
    wave::LinePropagator prop(wave::DampingProfile::strip(2, 1.0, 1), 2, cutoff, 0.5 / cutoff);
    auto groups = prop.groups();
    auto const& g = groups.front();
    for (auto _ : state)
        benchmark::DoNotOptimize(prop.power(g, 64));
}
BENCHMARK(BM_LinePower)->Arg(16)->Arg(32);
BENCHMARK_MAIN();
