#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "qcorr/correlations.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/oracles.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;

namespace {

const Couplings kSymmetric{0.5, 0.5, 0.0, 0.5, 0.5};

XState sample_state() {
    return XState(0.35, 0.28, 0.22, 0.15, std::polar(0.9 * std::sqrt(0.35 * 0.15), 0.7),
                  std::polar(0.8 * std::sqrt(0.28 * 0.22), -1.9));
}

void BM_params_case2(benchmark::State& state) {
    double tau = 0.0;
    for (auto _ : state) {
        tau += 1e-3;
        benchmark::DoNotOptimize(params_case2(tau, tau, kSymmetric));
    }
}
BENCHMARK(BM_params_case2);

void BM_evolve_xstate(benchmark::State& state) {
    const XState x = sample_state();
    const EvolutionParams p = params_case2(1.3, 1.3, kSymmetric);
    for (auto _ : state)
        benchmark::DoNotOptimize(evolve_xstate(x, p));
}
BENCHMARK(BM_evolve_xstate);

void BM_dense_propagate(benchmark::State& state) {
    const CMat4 rho = sample_state().dense();
    const EvolutionParams p = params_case2(1.3, 1.3, kSymmetric);
    for (auto _ : state)
        benchmark::DoNotOptimize(dense_propagate(rho, p, 0.3));
}
BENCHMARK(BM_dense_propagate);

void BM_concurrence_x(benchmark::State& state) {
    const XState x = sample_state();
    for (auto _ : state)
        benchmark::DoNotOptimize(concurrence_x(x));
}
BENCHMARK(BM_concurrence_x);

void BM_concurrence_wootters(benchmark::State& state) {
    const CMat4 rho = sample_state().dense();
    for (auto _ : state)
        benchmark::DoNotOptimize(concurrence_wootters(rho));
}
BENCHMARK(BM_concurrence_wootters);

void BM_discord_x(benchmark::State& state) {
    const XState x = sample_state();
    for (auto _ : state)
        benchmark::DoNotOptimize(discord_x(x));
}
BENCHMARK(BM_discord_x);

void BM_discord_bruteforce_coarse(benchmark::State& state) {
    const CMat4 rho = sample_state().dense();
    MeasurementGrid grid;
    grid.n_theta = 16;
    grid.n_phi = 32;
    grid.refinement_rounds = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(discord_bruteforce(rho, grid));
}
BENCHMARK(BM_discord_bruteforce_coarse);

void BM_fidelity_werner_eta(benchmark::State& state) {
    const cplx mu = std::polar(0.6, 0.4);
    const cplx nu = std::polar(0.8, -1.1);
    for (auto _ : state)
        benchmark::DoNotOptimize(fidelity_werner_eta(0.55, mu, nu));
}
BENCHMARK(BM_fidelity_werner_eta);

void BM_fidelity_uhlmann(benchmark::State& state) {
    const CMat4 a = make_werner(0.55).dense();
    const CMat4 b =
        make_generalized_werner({0.55, std::polar(0.6, 0.4), std::polar(0.8, -1.1)}).dense();
    for (auto _ : state)
        benchmark::DoNotOptimize(fidelity_uhlmann(a, b));
}
BENCHMARK(BM_fidelity_uhlmann);

void BM_hermitian_eigen(benchmark::State& state) {
    const CMat4 rho = sample_state().dense();
    for (auto _ : state)
        benchmark::DoNotOptimize(hermitian_eigen(rho));
}
BENCHMARK(BM_hermitian_eigen);

} // namespace

BENCHMARK_MAIN();
