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

#include <cmath>

#include "fairprice/errors.hpp"
#include "fairprice/special_functions.hpp"
#include "fairprice/trust.hpp"
#include "oracles.hpp"

namespace fairprice {
namespace {

TrustParams params(Rational p0, Rational l, bool reset, Rational g = 1) {
    TrustParams t;
    t.p0 = std::move(p0);
    t.loss = std::move(l);
    t.recovery = std::move(g);
    t.reset = reset;
    return t;
}

TEST(Psi, SmallestRecoveringRun) {
    EXPECT_EQ(psi(Rational(66, 100), Rational(133, 100)), 2U);
    EXPECT_EQ(psi(Rational(1, 2), 2), 1U);  // exact boundary: (1/2) * 2 = 1
    EXPECT_EQ(psi(Rational(1, 4), 2), 2U);
    EXPECT_EQ(psi(Rational(1, 2), Rational(11, 10)), 8U);
    EXPECT_FALSE(psi(Rational(1, 2), 1).has_value());
    EXPECT_THROW(psi(Rational(3, 2), 2), ValidationError);
}

TEST(ReachesClamp, ExactBoundaries) {
    EXPECT_TRUE(reaches_clamp(Rational(1, 2), 2, 3, 3));
    EXPECT_FALSE(reaches_clamp(Rational(1, 2), 2, 3, 2));
    EXPECT_TRUE(reaches_clamp(Rational(4, 9), Rational(3, 2), 1, 2));
    EXPECT_FALSE(reaches_clamp(Rational(4, 9), Rational(3, 2), 2, 3));
    EXPECT_TRUE(reaches_clamp(Rational(66, 100), Rational(133, 100), 0, 0));
}

TEST(TrustModel, Transitions) {
    const TrustModel m(params(Rational(1, 2), Rational(66, 100), false, Rational(133, 100)), 10);
    const TrustState s0{};
    EXPECT_EQ(m.skip(s0), s0);
    const TrustState s1 = m.fail(s0);
    EXPECT_EQ(s1, (TrustState{1, 0}));
    EXPECT_NEAR(m.probability(s1), 0.33, 1e-15);
    EXPECT_EQ(m.skip(s1), (TrustState{1, 1}));
    EXPECT_NEAR(m.probability(m.skip(s1)), 0.5 * 0.66 * 1.33, 1e-15);
    EXPECT_EQ(m.skip(m.skip(s1)), s0);
    EXPECT_EQ(m.success(s1), s1);
    EXPECT_EQ(m.clamp_exponent(1), 2U);
}

TEST(TrustModel, ResetAndCapacity) {
    const TrustModel m(params(Rational(1, 2), Rational(66, 100), true), 1);
    EXPECT_EQ(m.success(TrustState{1, 0}), TrustState{});
    EXPECT_THROW(m.fail(TrustState{1, 0}), CapacityError);
    EXPECT_FALSE(m.clamp_exponent(1).has_value());
}

TEST(TrustParams, Validation) {
    EXPECT_THROW(params(0, Rational(1, 2), false).validate(), ValidationError);
    EXPECT_THROW(params(Rational(1, 2), 1, false).validate(), ValidationError);
    EXPECT_THROW(params(Rational(1, 2), Rational(1, 2), false, Rational(9, 10)).validate(), ValidationError);
    auto t = params(Rational(1, 2), Rational(1, 2), false);
    t.reward = 0;
    EXPECT_THROW(t.validate(), ValidationError);
}

TEST(NoResetBounds, ClosedFormDominatesSeries) {
    const auto t = params(Rational(1, 2), Rational(66, 100), false);
    EXPECT_NEAR(closed_form_no_reset(t), 0.5 / 0.5 / 0.34, 1e-12);
    const auto s = exact_series_no_reset(t);
    EXPECT_NEAR(s.value, oracle::no_reset_series(0.5, 0.66, 1.0), 1e-11);
    EXPECT_NEAR(s.value, 2.23515956579, 1e-10);
    EXPECT_LE(s.value, closed_form_no_reset(t));
}

TEST(NoResetBounds, SeriesAgreesOnGrid) {
    for (int i = 1; i <= 9; ++i) {
        for (int j = 1; j <= 9; ++j) {
            const auto t = params(Rational(i, 10), Rational(j, 10), false);
            const auto s = exact_series_no_reset(t);
            EXPECT_NEAR(s.value, oracle::no_reset_series(i / 10.0, j / 10.0, 1.0), 1e-10);
            EXPECT_LE(s.value, closed_form_no_reset(t) + 1e-12);
        }
    }
}

TEST(ResetBounds, FailureProbability) {
    const auto t = params(Rational(1, 2), Rational(66, 100), true);
    const auto q = failure_probability_q(t);
    EXPECT_NEAR(q.value, oracle::failure_product(0.5, 0.66), 1e-12);
    EXPECT_LE(q.error_bound, 1e-11);
    const auto total = with_reset_total(t);
    EXPECT_NEAR(total.value, 4.94113819812, 1e-9);
    EXPECT_NEAR(total.value, (1.0 - q.value) / q.value, 1e-12);
}

TEST(ResetBounds, DilogLowerBoundChain) {
    for (int i = 1; i <= 9; ++i) {
        for (int j = 1; j <= 9; ++j) {
            const auto t = params(Rational(i, 10), Rational(j, 10), true);
            const double c = std::max(i, j) / 10.0;
            const double delta = (1.0 - c) * std::exp(oracle::dilog_simpson(std::max(1.0 - c, 0.05), 4000) / std::log(c));
            if (1.0 - c >= 0.05) {
                EXPECT_NEAR(q_lower_bound(t), delta, 1e-9);
            }
            const double q = oracle::failure_product(i / 10.0, j / 10.0);
            EXPECT_LE(q_lower_bound(t), q);
            EXPECT_LE(with_reset_total(t).value, reward_upper_bound(t) + 1e-12);
        }
    }
}

TEST(ResetBounds, DefaultCase) {
    const auto t = params(Rational(1, 2), Rational(66, 100), true);
    const double delta = q_lower_bound(t);
    EXPECT_NEAR(reward_upper_bound(t), (1.0 - delta) / delta, 1e-12);
    EXPECT_GT(reward_upper_bound(t), 4.9411);
    EXPECT_GE(failure_probability_q(t).value, delta);
}

TEST(Bounds, ErrorPaths) {
    EXPECT_THROW(closed_form_no_reset(params(Rational(1, 2), Rational(1, 2), true)), ValidationError);
    EXPECT_THROW(closed_form_no_reset(params(Rational(1, 2), Rational(1, 2), false, 2)), ValidationError);
    EXPECT_THROW(failure_probability_q(params(Rational(1, 2), Rational(1, 2), false)), ValidationError);
    EXPECT_THROW(exact_series_no_reset(params(Rational(1, 2), Rational(1, 2), false), 0.0), ValidationError);
    EXPECT_THROW(q_lower_bound_at(1.0), ValidationError);
    EXPECT_THROW(q_lower_bound_at(0.0), ValidationError);
}

}  // namespace
}  // namespace fairprice
