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

#include "fairprice/monte_carlo.hpp"

#include <cmath>
#include <random>

#include "fairprice/errors.hpp"

namespace fairprice {

namespace {

struct Accumulator {
    std::vector<std::uint64_t> sum;     // sum over trials of successes up to step s
    std::vector<std::uint64_t> sum_sq;  // sum of their squares

    explicit Accumulator(std::size_t n) : sum(n, 0), sum_sq(n, 0) {}

    void merge(const Accumulator &other) {
        for (std::size_t i = 0; i < sum.size(); ++i) {
            sum[i] += other.sum[i];
            sum_sq[i] += other.sum_sq[i];
        }
    }
};

double uniform01(std::mt19937_64 &gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

void run_trial(const TrustModel &model, const Policy &policy, std::size_t n, std::uint64_t seed,
               Accumulator &acc) {
    std::mt19937_64 gen(seed);
    TrustState state;
    std::uint64_t successes = 0;
    for (std::size_t step = 1; step <= n; ++step) {
        if (policy.recommend(step, state)) {
            if (uniform01(gen) < model.probability(state)) {
                ++successes;
                state = model.success(state);
            } else {
                state = model.fail(state);
            }
        } else {
            state = model.skip(state);
        }
        acc.sum[step - 1] += successes;
        acc.sum_sq[step - 1] += successes * successes;
    }
}

void check_inputs(std::size_t n, std::size_t trials) {
    if (n < 1) {
        throw ValidationError("horizon n must be >= 1");
    }
    if (trials < 1) {
        throw ValidationError("Monte-Carlo needs at least one trial");
    }
}

McCurve summarize(const Accumulator &acc, std::size_t trials, double reward) {
    McCurve out;
    out.trials = trials;
    const auto t = static_cast<unsigned __int128>(trials);
    for (std::size_t i = 0; i < acc.sum.size(); ++i) {
        out.mean.push_back(static_cast<double>(acc.sum[i]) / static_cast<double>(trials) * reward);
        if (trials < 2) {
            out.std_error.push_back(0.0);
            continue;
        }
        // T * sum(c^2) - (sum c)^2 is computed exactly before converting.
        const auto s = static_cast<unsigned __int128>(acc.sum[i]);
        const auto centered = t * static_cast<unsigned __int128>(acc.sum_sq[i]) - s * s;
        const double variance =
            static_cast<double>(centered) / (static_cast<double>(trials) * static_cast<double>(trials - 1));
        out.std_error.push_back(std::sqrt(variance / static_cast<double>(trials)) * reward);
    }
    return out;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t z = seed + (trial + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

McCurve mc_simulate_serial(const TrustParams &params, const Policy &policy, std::size_t n,
                           std::size_t trials, std::uint64_t seed) {
    check_inputs(n, trials);
    const TrustModel model(params, static_cast<std::uint32_t>(n));
    Accumulator acc(n);
    for (std::size_t i = 0; i < trials; ++i) {
        run_trial(model, policy, n, trial_seed(seed, i), acc);
    }
    return summarize(acc, trials, model.reward());
}

McCurve mc_simulate(const TrustParams &params, const Policy &policy, std::size_t n, std::size_t trials,
                    std::uint64_t seed) {
    check_inputs(n, trials);
    const TrustModel model(params, static_cast<std::uint32_t>(n));
    Accumulator total(n);
    const auto count = static_cast<long long>(trials);
#pragma omp parallel
    {
        Accumulator local(n);
#pragma omp for schedule(static)
        for (long long i = 0; i < count; ++i) {
            run_trial(model, policy, n, trial_seed(seed, static_cast<std::uint64_t>(i)), local);
        }
#pragma omp critical(fairprice_mc_merge)
        total.merge(local);
    }
    return summarize(total, trials, model.reward());
}

}  // namespace fairprice
