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
#include "fairprice/policy.hpp"
#include "oracles.hpp"

namespace fairprice {
namespace {

struct Case {
    Rational g;
    bool reset;
};

TrustParams to_params(const Case &c) {
    TrustParams t;
    t.p0 = Rational(1, 2);
    t.loss = Rational(66, 100);
    t.recovery = c.g;
    t.reset = c.reset;
    return t;
}

oracle::TrustSetup to_setup(const Case &c) {
    return oracle::TrustSetup{0.5, 0.66, to_double(c.g), 1.0, c.reset};
}

const Case kCases[] = {{1, false}, {1, true}, {Rational(133, 100), false}, {Rational(133, 100), true}, {2, true}};

TEST(DpOptimal, MatchesExhaustiveSearch) {
    for (const auto &c : kCases) {
        const auto plan = dp_optimal(to_params(c), 9);
        for (std::size_t n = 1; n <= 9; ++n) {
            EXPECT_NEAR(plan.optimal_values.at(n), oracle::brute_force_optimal(to_setup(c), n), 1e-12)
                << to_double(c.g) << " reset=" << c.reset << " n=" << n;
        }
    }
}

TEST(DpOptimal, SingleStep) {
    auto t = to_params({1, false});
    t.reward = 3;
    EXPECT_NEAR(dp_optimal(t, 1).optimal_values.at(1), 1.5, 1e-15);
}

TEST(DpOptimal, ReplayReproducesValue) {
    for (const auto &c : kCases) {
        const auto t = to_params(c);
        const auto plan = dp_optimal(t, 60);
        EXPECT_NEAR(evaluate_policy(t, plan.policy, 60).final_value(), plan.optimal_values.final_value(), 1e-9);
    }
}

TEST(DpOptimal, NoRecoveryMeansRecommendAlways) {
    const auto t = to_params({1, true});
    const auto plan = dp_optimal(t, 80);
    const auto all = evaluate_policy(t, Policy::all(), 80);
    for (std::size_t n = 1; n <= 80; ++n) {
        EXPECT_NEAR(plan.optimal_values.at(n), all.at(n), 1e-12);
    }
}

TEST(DpOptimal, MonotoneAndDominant) {
    const auto t = to_params({Rational(133, 100), true});
    const auto plan = dp_optimal(t, 120);
    const auto every3 = evaluate_policy(t, Policy::every_k(3), 120);
    for (std::size_t n = 2; n <= 120; ++n) {
        EXPECT_GE(plan.optimal_values.at(n), plan.optimal_values.at(n - 1));
        EXPECT_GE(plan.optimal_values.at(n) + 1e-12, every3.at(n));
    }
}

TEST(DpOptimal, CapAndArguments) {
    const auto t = to_params({1, false});
    EXPECT_THROW(dp_optimal(t, 501), CapacityError);
    EXPECT_THROW(dp_optimal(t, 11, 10), CapacityError);
    EXPECT_THROW(dp_optimal(t, 0), ValidationError);
}

TEST(EveryK, MatchesExhaustiveEnumeration) {
    for (const auto &c : kCases) {
        for (std::size_t k = 1; k <= 4; ++k) {
            const auto curve = evaluate_policy(to_params(c), Policy::every_k(k), 12);
            for (std::size_t n = 1; n <= 12; ++n) {
                EXPECT_NEAR(curve.at(n), oracle::brute_force_every_k(to_setup(c), k, n), 1e-12);
            }
        }
    }
}

TEST(EveryK, ClosedFormWhenRecoveryIsComplete) {
    const auto t = to_params({Rational(133, 100), true});
    for (std::size_t k = 3; k <= 5; ++k) {
        const auto curve = heuristic_reward(t, k, 200);
        for (std::size_t n = 1; n <= 200; ++n) {
            EXPECT_NEAR(curve.at(n), to_double(heuristic_closed_form(t, k, n)), 1e-12);
        }
    }
    EXPECT_EQ(heuristic_closed_form(t, 3, 200), Rational(33));
    EXPECT_EQ(heuristic_closed_form(t, 4, 200), Rational(25));
    EXPECT_THROW(heuristic_closed_form(t, 2, 200), ValidationError);
}

TEST(EveryK, OnePolicyIsAll) {
    const auto t = to_params({Rational(133, 100), false});
    const auto a = evaluate_policy(t, Policy::all(), 50);
    const auto b = evaluate_policy(t, Policy::every_k(1), 50);
    EXPECT_EQ(a.values, b.values);
}

TEST(Policy, Names) {
    EXPECT_EQ(Policy::all().name(), "all");
    EXPECT_EQ(Policy::every_k(3).name(), "every-k:3");
    EXPECT_THROW(Policy::every_k(0), ValidationError);
}

TEST(EvaluatePolicy, AllWithoutRecovery) {
    // No reset, g = 1: trust after j failures is p0 l^j.
    const auto t = to_params({1, false});
    const auto curve = evaluate_policy(t, Policy::all(), 300);
    EXPECT_NEAR(curve.at(200), 2.23515956579, 1e-9);
    for (std::size_t n = 2; n <= 300; ++n) {
        EXPECT_GE(curve.at(n), curve.at(n - 1));
    }
}

}  // namespace
}  // namespace fairprice
