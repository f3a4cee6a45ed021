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
#include "fairprice/verify.hpp"

namespace fairprice {
namespace {

class SuiteTest : public ::testing::TestWithParam<std::string> {};

TEST_P(SuiteTest, Passes) {
    const auto reports = run_suite(GetParam());
    ASSERT_EQ(reports.size(), 1U);
    EXPECT_FALSE(reports[0].checks.empty());
    for (const auto &check : reports[0].checks) {
        EXPECT_TRUE(check.passed) << check.name << ": " << check.detail;
    }
}

INSTANTIATE_TEST_SUITE_P(Suites, SuiteTest, ::testing::ValuesIn(suite_names()),
                         [](const auto &info) {
                             std::string name = info.param;
                             for (char &c : name) {
                                 if (c == '-') {
                                     c = '_';
                                 }
                             }
                             return name;
                         });

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_suite("nope"), ValidationError); }

TEST(Verify, BadTolerance) {
    VerifyOptions o;
    o.tol = -1.0;
    EXPECT_THROW(run_suite("bounds", o), ValidationError);
}

TEST(Verify, SeedChangesRandomGamesOnly) {
    VerifyOptions o;
    o.seed = 7;
    const auto reports = run_suite("two-player", o);
    EXPECT_TRUE(reports[0].passed());
}

}  // namespace
}  // namespace fairprice
