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
#include "oracles.hpp"

namespace fairprice {
namespace {

TEST(Nash, OneRecommenderExample) {
    std::map<Coalition, Rational> f{{Coalition::of({0, 1}), Rational(3, 10)}};
    const Game g = build_general(Rational(1, 2), 10, 1, f);
    const auto nash = nash_bargaining(BargainingProblem::from_game(g));
    EXPECT_EQ(nash.payoff.values, (std::vector<Rational>{Rational(13, 2), Rational(3, 2)}));
    EXPECT_FALSE(nash.outside_feasible_set);
    EXPECT_EQ(nash.payoff.values, shapley(g).values);
}

TEST(Nash, BargainingProblemFromGame) {
    const std::vector<Rational> q{Rational(1, 5), Rational(1, 10)};
    const auto bp = BargainingProblem::from_game(build_linear(Rational(1, 2), 2, q));
    EXPECT_EQ(bp.feasible_total, Rational(8, 5));
    EXPECT_EQ(bp.disagreement, (std::vector<Rational>{1, 0, 0}));
    EXPECT_EQ(bp.ids, (std::vector<std::string>{"s", "r1", "r2"}));
}

TEST(Nash, TwoUnequalRecommendersShareEqually) {
    const Rational p(1, 2), eps(1, 100);
    const std::vector<Rational> q{1 - p - eps, eps};
    const Game g = build_linear(p, 1, q);
    const auto x = nash_bargaining(BargainingProblem::from_game(g)).payoff;
    EXPECT_EQ(x.at("r1"), x.at("r2"));
    EXPECT_EQ(x.at("r1"), (1 - p) / 3);
    EXPECT_EQ(x.at("s"), p + (1 - p) / 3);
    // Shapley pays by contribution instead.
    const auto phi = shapley(g);
    EXPECT_GT(phi.at("r1"), phi.at("r2"));
}

TEST(Nash, ZeroSurplus) {
    const std::vector<Rational> q{0, 0};
    const auto x = nash_bargaining(BargainingProblem::from_game(build_linear(Rational(1, 3), 3, q))).payoff;
    EXPECT_EQ(x.values, (std::vector<Rational>{1, 0, 0}));
}

TEST(Nash, ClosedFormMatchesGridSearch) {
    GameSampler sampler(17);
    for (int i = 0; i < 60; ++i) {
        const std::size_t r = 1 + sampler.below(3);
        const Game g = sampler.any(r);
        const auto bp = BargainingProblem::from_game(g);
        const unsigned grid = static_cast<unsigned>(12 * (r + 1));
        const auto searched = oracle::nash_grid_search(bp.feasible_total, bp.disagreement, grid);
        const auto x = nash_bargaining(bp).payoff.values;
        if (bp.feasible_total == bp.disagreement[0]) {
            EXPECT_EQ(x, bp.disagreement);
            continue;
        }
        EXPECT_EQ(x, searched);
        // Recommender share is f(N) delta / (n + 1).
        const auto &meta = *g.scenario();
        const Rational fn = g.sale_probability() - meta.p;
        EXPECT_EQ(x[1], fn * meta.delta / static_cast<long>(r + 1));
    }
}

TEST(Nash, LinearInDelta) {
    GameSampler sampler(23);
    for (int i = 0; i < 30; ++i) {
        const Game g = sampler.linear(1 + sampler.below(3));
        const auto &meta = *g.scenario();
        const Rational lambda(3, 7);
        GameOptions options;
        options.ids = g.ids();
        const Game scaled = build_linear(meta.p, meta.delta * lambda, meta.q, options);
        const auto a = nash_bargaining(BargainingProblem::from_game(g)).payoff.values;
        const auto b = nash_bargaining(BargainingProblem::from_game(scaled)).payoff.values;
        for (std::size_t k = 0; k < a.size(); ++k) {
            EXPECT_EQ(b[k], lambda * a[k]);
        }
    }
}

TEST(Nash, Errors) {
    BargainingProblem bp{{"s", "r"}, 1, {2, 0}};
    EXPECT_THROW(nash_bargaining(bp), ValidationError);
    BargainingProblem mismatched{{"s", "r"}, 1, {0}};
    EXPECT_THROW(nash_bargaining(mismatched), ValidationError);
    BargainingProblem negative{{"s", "r"}, 0, {1, -3}};
    const auto out = nash_bargaining(negative);
    EXPECT_TRUE(out.outside_feasible_set);
    EXPECT_EQ(out.payoff.values, (std::vector<Rational>{2, -2}));
}

}  // namespace
}  // namespace fairprice
