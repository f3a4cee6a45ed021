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

#include <gtest/gtest.h>

#include "fairprice/errors.hpp"
#include "fairprice/fair_division.hpp"
#include "fairprice/random_games.hpp"
#include "fairprice/shapley_kernels.hpp"
#include "oracles.hpp"

namespace fairprice {
namespace {

TEST(Shapley, TwoPlayerGeneral) {
    std::map<Coalition, Rational> f{{Coalition::of({0, 1}), Rational(3, 10)}};
    const auto phi = shapley(build_general(Rational(1, 2), 10, 1, f));
    EXPECT_EQ(phi.at("s"), Rational(13, 2));
    EXPECT_EQ(phi.at("r1"), Rational(3, 2));
}

TEST(Shapley, LinearMatchesOracle) {
    const std::vector<Rational> q{Rational(1, 5), Rational(1, 10)};
    const Game g = build_linear(Rational(1, 2), 1, q);
    const auto phi = shapley(g);
    EXPECT_EQ(phi.values, oracle::permutation_shapley(g));
    EXPECT_EQ(phi.values, (std::vector<Rational>{Rational(13, 20), Rational(1, 10), Rational(1, 20)}));
}

TEST(Shapley, ThresholdTwoOfTwo) {
    const Game g = build_threshold(Rational(1, 10), 10, 2, 2, Rational(2, 5));
    const auto phi = shapley(g);
    EXPECT_EQ(phi.at("r1"), Rational(4, 3));
    EXPECT_EQ(phi.at("r2"), Rational(4, 3));
    EXPECT_EQ(phi.values, oracle::permutation_shapley(g));
}

TEST(Shapley, ThresholdShareIsKOverNTimesNPlusOne) {
    // Every recommender's share of q*delta, checked against permutation enumeration.
    for (std::size_t n = 1; n <= 5; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            const Game g = build_threshold(0, 1, n, k, 1);
            const auto oracle_values = oracle::permutation_shapley(g);
            const auto phi = shapley(g);
            const Rational expected(static_cast<long>(k), static_cast<long>(n * (n + 1)));
            for (std::size_t i = 1; i <= n; ++i) {
                EXPECT_EQ(phi.values[i], expected) << "n=" << n << " k=" << k;
                EXPECT_EQ(oracle_values[i], expected);
            }
        }
    }
}

TEST(Shapley, ZeroIncrementIsDummy) {
    const std::vector<Rational> q{Rational(1, 5), 0, Rational(1, 10)};
    const auto phi = shapley(build_linear(Rational(1, 2), 3, q));
    EXPECT_EQ(phi.at("r2"), 0);
}

TEST(Shapley, RandomGamesMatchPermutationOracle) {
    GameSampler sampler(101);
    for (int i = 0; i < 150; ++i) {
        const Game g = sampler.any(1 + sampler.below(5));
        EXPECT_EQ(shapley(g).values, oracle::permutation_shapley(g));
    }
}

TEST(Shapley, SerialAndParallelKernelsAgree) {
    GameSampler sampler(5);
    for (int i = 0; i < 20; ++i) {
        const Game g = sampler.general(3 + sampler.below(6));
        EXPECT_EQ(kernels::shapley_serial(g.worth_table(), g.size()),
                  kernels::shapley_parallel(g.worth_table(), g.size()));
    }
}

TEST(Shapley, EfficiencyOnLargerGames) {
    GameSampler sampler(9);
    for (std::size_t r : {8, 10, 12}) {
        const Game g = sampler.any(r);
        EXPECT_EQ(shapley(g).total(), g.worth(g.grand()));
    }
}

TEST(Shapley, AdditivityAndDeltaLinearity) {
    GameSampler sampler(33);
    for (int i = 0; i < 40; ++i) {
        const std::size_t r = 1 + sampler.below(4);
        const Game v = sampler.general(r);
        const Game w = sampler.general(r);
        std::vector<Rational> sum(v.worth_table().begin(), v.worth_table().end());
        std::vector<Rational> scaled = sum;
        const Rational lambda(1 + static_cast<long>(sampler.below(9)), 1 + static_cast<long>(sampler.below(9)));
        for (std::size_t m = 0; m < sum.size(); ++m) {
            sum[m] += w.worth_table()[m];
            scaled[m] *= lambda;
        }
        const auto a = shapley(v).values;
        const auto b = shapley(w).values;
        const auto c = shapley(Game::from_worths(v.players(), sum)).values;
        const auto d = shapley(Game::from_worths(v.players(), scaled)).values;
        for (std::size_t p = 0; p < a.size(); ++p) {
            EXPECT_EQ(c[p], a[p] + b[p]);
            EXPECT_EQ(d[p], lambda * a[p]);
        }
    }
}

TEST(Shapley, SymmetricThresholdRecommenders) {
    GameSampler sampler(71);
    for (int i = 0; i < 30; ++i) {
        const Game g = sampler.threshold(2 + sampler.below(4));
        const auto phi = shapley(g);
        for (std::size_t p = 2; p < phi.size(); ++p) {
            EXPECT_EQ(phi.values[p], phi.values[1]);
        }
    }
}

}  // namespace
}  // namespace fairprice
