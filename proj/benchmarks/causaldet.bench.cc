// Copyright 2026 The causaldet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "causaldet/bounds.h"
#include "causaldet/sampler.h"

using namespace causaldet;

static void BM_Det3(benchmark::State &state) {
    Rng rng(1);
    Real3 m = bloch_decompose(random_state(rng)).m;
    for (auto _ : state) {
        benchmark::DoNotOptimize(det3(m));
        benchmark::ClobberMemory();
    }
}
BENCHMARK(BM_Det3);

static void BM_HaarUnitary(benchmark::State &state) {
    Rng rng(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(haar_random_unitary(rng));
    }
}
BENCHMARK(BM_HaarUnitary);

static void BM_RandomState(benchmark::State &state) {
    Rng rng(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(random_state(rng));
    }
}
BENCHMARK(BM_RandomState);

static void BM_ExactMixture(benchmark::State &state) {
    Rng rng(4);
    Mixture mix = random_mixture(NdcClass::ThreeOrMore, 0.5, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_correlation(mix));
    }
}
BENCHMARK(BM_ExactMixture);

static void BM_SimulateSetting(benchmark::State &state) {
    Rng setup(5);
    CausalScenario scenario = random_mixture(NdcClass::Two, 0.5, setup);
    Rng rng(6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_setting(scenario, 1, 2, static_cast<uint64_t>(state.range(0)), rng));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateSetting)->Arg(1 << 10)->Arg(1 << 16);

static void BM_Bootstrap(benchmark::State &state) {
    ExperimentData data = run_experiment(CommonCause{werner_state(0.8)}, 100000, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bootstrap_delta(data, static_cast<int>(state.range(0)), 8));
    }
}
BENCHMARK(BM_Bootstrap)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_OptimizeBoundary(benchmark::State &state) {
    auto ndc = static_cast<NdcClass>(state.range(0));
    Rng rng(9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize_boundary(ndc, 0.4, Direction::Min, 16, rng));
    }
}
BENCHMARK(BM_OptimizeBoundary)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
