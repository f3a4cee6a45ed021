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

#pragma once

// Monte-Carlo simulation of the trust process under a policy.
//
// Trial i draws from std::mt19937_64 seeded with splitmix64(seed + i * golden gamma), and
// uniforms are the top 53 bits of each draw scaled by 2^-53. Per-step success counts are
// accumulated as integers, so results are bit-identical across platforms, thread counts and
// schedules, and the OpenMP kernel agrees exactly with the serial reference.

#include <cstdint>
#include <vector>

#include "fairprice/policy.hpp"

namespace fairprice {

struct McCurve {
    std::vector<double> mean;    // mean cumulative reward after step s at index s - 1
    std::vector<double> std_error;  // standard error of that mean
    std::size_t trials = 0;
};

/// Seed of trial `trial` in the stream of `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Parallel over trials with OpenMP.
McCurve mc_simulate(const TrustParams &params, const Policy &policy, std::size_t n, std::size_t trials,
                    std::uint64_t seed);

/// Single-threaded reference of mc_simulate.
McCurve mc_simulate_serial(const TrustParams &params, const Policy &policy, std::size_t n,
                           std::size_t trials, std::uint64_t seed);

}  // namespace fairprice
