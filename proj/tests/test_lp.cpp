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

#include <random>

#include "fairprice/core_lp.hpp"
#include "fairprice/errors.hpp"

namespace fairprice {
namespace {

LinearConstraint make(std::vector<Term> terms, Relation rel, Rational rhs, std::string label = "") {
    return LinearConstraint{std::move(terms), rel, std::move(rhs), std::move(label)};
}

TEST(LpFeasible, ContradictoryBounds) {
    LinearSystem sys({"x"});
    sys.add_constraint(make({{0, 1}}, Relation::greater_equal, 1));
    sys.add_constraint(make({{0, 1}}, Relation::less_equal, 0));
    const auto r = lp_feasible(sys);
    EXPECT_FALSE(r.feasible);
    EXPECT_TRUE(verify_infeasibility_certificate(sys, r.farkas));
}

TEST(LpFeasible, Simplex) {
    LinearSystem sys({"x", "y"});
    sys.add_constraint(make({{0, 1}, {1, 1}}, Relation::equal, 1));
    sys.add_constraint(make({{0, 1}}, Relation::greater_equal, 0));
    sys.add_constraint(make({{1, 1}}, Relation::greater_equal, 0));
    const auto r = lp_feasible(sys);
    ASSERT_TRUE(r.feasible);
    EXPECT_TRUE(sys.satisfied_by(r.point));
}

TEST(LpFeasible, FreeVariablesWithoutConstraints) {
    LinearSystem sys;
    sys.add_variable("x");
    const auto r = lp_feasible(sys);
    EXPECT_TRUE(r.feasible);
    EXPECT_EQ(r.point.size(), 1U);
}

TEST(LpFeasible, EmptyRowContradiction) {
    LinearSystem sys({"x"});
    sys.add_constraint(make({}, Relation::greater_equal, 1, "0 >= 1"));
    const auto r = lp_feasible(sys);
    EXPECT_FALSE(r.feasible);
    EXPECT_TRUE(verify_infeasibility_certificate(sys, r.farkas));
}

TEST(LpFeasible, NegativeSolutionsAllowed) {
    LinearSystem sys({"x", "y"});
    sys.add_constraint(make({{0, 1}, {1, 2}}, Relation::equal, -3));
    sys.add_constraint(make({{0, 1}}, Relation::less_equal, -5));
    const auto r = lp_feasible(sys);
    ASSERT_TRUE(r.feasible);
    EXPECT_TRUE(sys.satisfied_by(r.point));
}

TEST(LpFeasible, Deterministic) {
    LinearSystem sys({"x", "y", "z"});
    sys.add_constraint(make({{0, 1}, {1, 1}, {2, 1}}, Relation::equal, 2));
    sys.add_constraint(make({{0, 1}, {1, -1}}, Relation::greater_equal, Rational(1, 3)));
    sys.add_constraint(make({{2, 3}}, Relation::less_equal, 1));
    const auto a = lp_feasible(sys);
    const auto b = lp_feasible(sys);
    EXPECT_EQ(a.point, b.point);
    EXPECT_EQ(a.pivots, b.pivots);
}

TEST(LpFeasible, RandomSystemsAlwaysCarryAValidCertificate) {
    std::mt19937_64 gen(99);
    auto small = [&gen]() { return Rational(static_cast<long>(gen() % 7) - 3, static_cast<long>(gen() % 3) + 1); };
    int feasible = 0;
    int infeasible = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t vars = 1 + gen() % 3;
        LinearSystem sys;
        for (std::size_t v = 0; v < vars; ++v) {
            sys.add_variable("x" + std::to_string(v));
        }
        const std::size_t rows = 1 + gen() % 5;
        for (std::size_t j = 0; j < rows; ++j) {
            std::vector<Term> terms;
            for (std::size_t v = 0; v < vars; ++v) {
                terms.push_back({v, small()});
            }
            const auto rel = static_cast<Relation>(gen() % 3);
            sys.add_constraint(make(std::move(terms), rel, small()));
        }
        const auto r = lp_feasible(sys);
        if (r.feasible) {
            ++feasible;
            EXPECT_TRUE(sys.satisfied_by(r.point));
        } else {
            ++infeasible;
            EXPECT_TRUE(verify_infeasibility_certificate(sys, r.farkas));
        }
    }
    EXPECT_GT(feasible, 0);
    EXPECT_GT(infeasible, 0);
}

TEST(LinearSystem, Validation) {
    LinearSystem sys({"x"});
    EXPECT_THROW(sys.add_constraint(make({{1, 1}}, Relation::equal, 0)), ValidationError);
    EXPECT_THROW(sys.satisfied_by({1, 2}), ValidationError);
    sys.add_constraint(make({{0, 2}}, Relation::less_equal, 1));
    EXPECT_EQ(sys.first_violation({1}), 0U);
    EXPECT_FALSE(sys.first_violation({Rational(1, 2)}).has_value());
}

TEST(Certificates, RejectsBadMultipliers) {
    LinearSystem sys({"x"});
    sys.add_constraint(make({{0, 1}}, Relation::greater_equal, 1));
    sys.add_constraint(make({{0, 1}}, Relation::less_equal, 0));
    EXPECT_TRUE(verify_infeasibility_certificate(sys, {1, 1}));
    EXPECT_FALSE(verify_infeasibility_certificate(sys, {1, 2}));
    EXPECT_FALSE(verify_infeasibility_certificate(sys, {-1, -1}));
    EXPECT_FALSE(verify_infeasibility_certificate(sys, {1}));
    EXPECT_FALSE(verify_infeasibility_certificate(sys, {0, 0}));
}

}  // namespace
}  // namespace fairprice
