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

// Independent reference computations used by the unit and acceptance tests. None of them
// call the solver under test; they enumerate, search or simulate directly.

#include <cstdint>
#include <span>
#include <vector>

#include "fairprice/game.hpp"

namespace fairprice::oracle {

/// Average marginal contribution over all n! orderings of the players.
std::vector<Rational> permutation_shapley(std::span<const Rational> worths, std::size_t n);
std::vector<Rational> permutation_shapley(const Game &game);

/// Evaluates efficiency and every one of the 2^n coalition inequalities.
bool brute_force_in_core(const Game &game, const std::vector<Rational> &x);

/// Bondareva-Shapley test for games with 2 or 3 players: the Core is non-empty iff every
/// minimal balanced collection satisfies sum lambda_S v(S) <= v(N).
bool balanced_core_nonempty(const Game &game);

/// Maximizes prod_i (x_i - d_i) over the points of the feasible simplex
/// {x >= d, sum x = total} whose surplus shares are multiples of 1/grid.
std::vector<Rational> nash_grid_search(const Rational &total, const std::vector<Rational> &disagreement,
                                       unsigned grid);

struct TrustSetup {
    double p0 = 0.5;
    double loss = 0.66;
    double recovery = 1.0;
    double reward = 1.0;
    bool reset = false;
};

/// Optimal expected reward over n items by exhaustive recursion on the raw success
/// probability (3^n leaves; keep n small).
double brute_force_optimal(const TrustSetup &setup, std::size_t n);

/// Exact expected reward of "recommend at steps t with t % k == 0" (k = 1: every step) by
/// exhaustive recursion on the raw probability.
double brute_force_every_k(const TrustSetup &setup, std::size_t k, std::size_t n);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Plain simulation of the every-k rule tracking p directly, seeded independently.
McEstimate simulate_every_k(const TrustSetup &setup, std::size_t k, std::size_t n, std::size_t trials,
                            std::uint64_t seed);

/// sum_{i >= 0} l^i p0 / (1 - l^i p0) * r, summed until the terms vanish.
double no_reset_series(double p0, double loss, double reward);

/// prod_{k >= 0} (1 - l^k p0), multiplied until the factors equal 1 in double precision.
double failure_product(double p0, double loss);

/// Composite Simpson rule for integral_x^1 -ln(t)/(1-t) dt.
double dilog_simpson(double x, int intervals);

}  // namespace fairprice::oracle
