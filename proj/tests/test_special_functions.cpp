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
#include <numbers>

#include "fairprice/errors.hpp"
#include "fairprice/special_functions.hpp"
#include "oracles.hpp"

namespace fairprice {
namespace {

TEST(Dilog, KnownValues) {
    EXPECT_EQ(dilog(1.0), 0.0);
    EXPECT_NEAR(dilog(0.0), std::numbers::pi * std::numbers::pi / 6.0, 1e-14);
    const double ln2 = std::numbers::ln2;
    EXPECT_NEAR(dilog(0.5), std::numbers::pi * std::numbers::pi / 12.0 - ln2 * ln2 / 2.0, 1e-14);
    EXPECT_NEAR(dilog(0.34), 0.822330470644328, 1e-13);
}

TEST(Dilog, MatchesSimpson) {
    for (int i = 1; i <= 19; ++i) {
        const double x = i / 20.0;
        EXPECT_NEAR(dilog(x), oracle::dilog_simpson(x, 2000), 1e-10) << x;
    }
}

TEST(Dilog, QuadratureMatchesSeries) {
    for (int i = 0; i <= 100; ++i) {
        const double x = i / 100.0;
        EXPECT_NEAR(dilog(x), dilog_series(x), 1e-11) << x;
    }
}

TEST(Dilog, Reflection) {
    // Li2(z) + Li2(1 - z) = pi^2/6 - ln z ln(1 - z).
    for (int i = 1; i < 10; ++i) {
        const double z = i / 10.0;
        EXPECT_NEAR(dilog(1.0 - z) + dilog(z), std::numbers::pi * std::numbers::pi / 6.0 - std::log(z) * std::log(1.0 - z),
                    1e-13);
    }
}

TEST(Dilog, DomainErrors) {
    EXPECT_THROW(dilog(-0.1), ValidationError);
    EXPECT_THROW(dilog(1.1), ValidationError);
    EXPECT_THROW(dilog(std::nan("")), ValidationError);
    EXPECT_THROW(dilog_series(2.0), ValidationError);
}

}  // namespace
}  // namespace fairprice
