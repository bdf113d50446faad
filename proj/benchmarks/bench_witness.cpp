#include "qee/entanglement.hpp"
#include "qee/photonics.hpp"
#include "qee/sweep.hpp"
#include "qee/witness.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_WitnessPureTheta(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(qee::witness_pure_theta(0.7));
    }
}
BENCHMARK(BM_WitnessPureTheta);

void BM_FeedForwardWitness(benchmark::State& state) {
    const qee::EnvState env = qee::env_from_theta(0.7);
    for (auto _ : state) {
        const double w = 0.5 * (qee::feed_forward_cz(0, env) + qee::feed_forward_cz(1, env));
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_FeedForwardWitness);

void BM_NegativityOracle(benchmark::State& state) {
    const qee::QubitPure plus = qee::QubitPure::plus();
    const qee::EnvState env = qee::env_mixed(0.7);
    const qee::ConditionalGate cnot = qee::ConditionalGate::cnot();
    for (auto _ : state) {
        benchmark::DoNotOptimize(qee::negativity_oracle(plus, env, cnot));
    }
}
BENCHMARK(BM_NegativityOracle);

void BM_NoisyWitnessMeasured(benchmark::State& state) {
    const qee::ImperfectionParams p = qee::ImperfectionParams::measured();
    for (auto _ : state) {
        benchmark::DoNotOptimize(qee::noisy_witness(qee::EnvPreparation::pure(0.7), p).w);
    }
}
BENCHMARK(BM_NoisyWitnessMeasured);

void BM_SweepPoint(benchmark::State& state) {
    qee::SweepConfig cfg;
    cfg.family = qee::EnvPreparation::Family::pure_theta;
    cfg.grid = {0.7};
    cfg.params = qee::ImperfectionParams::measured();
    cfg.shots = 1e4;
    cfg.mc_samples = static_cast<int>(state.range(0));
    cfg.seed = 42;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qee::run_sweep(cfg));
    }
}
BENCHMARK(BM_SweepPoint)->Arg(200);

} // namespace

BENCHMARK_MAIN();
