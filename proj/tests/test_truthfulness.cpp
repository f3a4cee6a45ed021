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
#include "fairprice/truthfulness.hpp"

namespace fairprice {
namespace {

Game linear_example() {
    const std::vector<Rational> q{Rational(3, 10)};
    return build_linear(Rational(1, 2), 10, q);
}

TEST(Truthfulness, ShapleyPricingDeviationAtZeroMargin) {
    const Game g = linear_example();
    const auto grid = ReportGrid::around(*g.scenario());
    const auto d = truthfulness_probe(g, shapley_pricing(), grid);
    ASSERT_TRUE(d.found);
    EXPECT_EQ(d.truthful_payment, Rational(3, 2));
    EXPECT_EQ(d.deviant_payment, 0);
    EXPECT_EQ(d.truthful_utility, Rational(13, 2));
    EXPECT_EQ(d.deviant_utility, 8);
    ASSERT_TRUE(d.best.has_value());
    EXPECT_TRUE(d.best->delta == 0 || d.best->f_scale == 0);
    EXPECT_EQ(d.reports_evaluated + d.reports_skipped, grid.size());
}

TEST(Truthfulness, ZeroMarginOnlyGrid) {
    const Game g = linear_example();
    ReportGrid grid{{Rational(1, 2)}, {0}, {1}};
    const auto d = truthfulness_probe(g, shapley_pricing(), grid);
    ASSERT_TRUE(d.found);
    EXPECT_EQ(d.best->delta, 0);
    EXPECT_EQ(d.deviant_payment, 0);
}

TEST(Truthfulness, ZeroRuleHasNoDeviation) {
    const Game g = linear_example();
    const auto d = truthfulness_probe(g, zero_pricing(), ReportGrid::around(*g.scenario()));
    EXPECT_FALSE(d.found);
    EXPECT_FALSE(d.best.has_value());
    EXPECT_EQ(d.deviant_utility, d.truthful_utility);
}

TEST(Truthfulness, ZeroTrueMarginHasNoDeviation) {
    const std::vector<Rational> q{Rational(3, 10)};
    const Game g = build_linear(Rational(1, 2), 0, q);
    EXPECT_FALSE(truthfulness_probe(g, shapley_pricing(), ReportGrid::around(*g.scenario())).found);
}

TEST(Truthfulness, NashPricingIsAlsoManipulable) {
    const Game g = linear_example();
    EXPECT_TRUE(truthfulness_probe(g, nash_pricing(), ReportGrid::around(*g.scenario())).found);
}

TEST(Truthfulness, GridAlwaysContainsZeroMargin) {
    GameSampler sampler(3);
    for (int i = 0; i < 20; ++i) {
        const Game g = sampler.any(1 + sampler.below(3));
        const auto grid = ReportGrid::around(*g.scenario());
        EXPECT_NE(std::find(grid.delta_values.begin(), grid.delta_values.end(), Rational(0)),
                  grid.delta_values.end());
    }
}

TEST(Truthfulness, ReportedDeviationsAreProfitable) {
    GameSampler sampler(41);
    for (int i = 0; i < 40; ++i) {
        const Game g = sampler.any(1 + sampler.below(3));
        const auto d = truthfulness_probe(g, shapley_pricing(), ReportGrid::around(*g.scenario()));
        EXPECT_EQ(d.found, shapley_pricing().total_payment(g) > 0);
        if (d.found) {
            EXPECT_GT(seller_true_utility(g, d.deviant_payment), seller_true_utility(g, d.truthful_payment));
        }
    }
}

TEST(Truthfulness, Errors) {
    const Game g = linear_example();
    EXPECT_THROW(truthfulness_probe(g, shapley_pricing(), ReportGrid{}), ValidationError);
    std::vector<Player> players{{"s", PlayerKind::seller}, {"r", PlayerKind::recommender}};
    const Game custom = Game::from_worths(players, {0, 1, 0, 2});
    EXPECT_THROW(truthfulness_probe(custom, shapley_pricing(), ReportGrid{{1}, {0}, {1}}), ValidationError);
}

}  // namespace
}  // namespace fairprice
