// Copyright 2026 The fairprice Authors
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

// Serial reference vs OpenMP kernel for Monte-Carlo trials and Shapley sums, plus the DP.

#include <benchmark/benchmark.h>

#include "fairprice/monte_carlo.hpp"
#include "fairprice/policy.hpp"
#include "fairprice/random_games.hpp"
#include "fairprice/shapley_kernels.hpp"

namespace {

using namespace fairprice;

TrustParams recovering() {
    TrustParams t;
    t.recovery = Rational(133, 100);
    t.reset = true;
    return t;
}

void BM_McSerial(benchmark::State &state) {
    const auto policy = Policy::every_k(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc_simulate_serial(recovering(), policy, 200, state.range(0), 1));
    }
}
BENCHMARK(BM_McSerial)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_McParallel(benchmark::State &state) {
    const auto policy = Policy::every_k(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc_simulate(recovering(), policy, 200, state.range(0), 1));
    }
}
BENCHMARK(BM_McParallel)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

std::vector<Rational> worths(std::size_t recommenders) {
    GameSampler sampler(3);
    const Game g = sampler.general(recommenders);
    return {g.worth_table().begin(), g.worth_table().end()};
}

void BM_ShapleySerial(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto w = worths(n - 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::shapley_serial(w, n));
    }
}
BENCHMARK(BM_ShapleySerial)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

void BM_ShapleyParallel(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto w = worths(n - 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::shapley_parallel(w, n));
    }
}
BENCHMARK(BM_ShapleyParallel)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

void BM_DpOptimal(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(dp_optimal(recovering(), static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_DpOptimal)->Arg(100)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
