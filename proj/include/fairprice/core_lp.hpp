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

// Core membership and Core non-emptiness, decided exactly.
//
// Feasibility of a linear system {a_j . x (>=|<=|=) b_j} over free variables x is decided
// through its Farkas alternative
//
//     sum_j mu_j a_j = 0,  sum_j mu_j b_j = 1,  mu_j >= 0 on inequalities,
//
// with a, b in ">=" orientation. Phase 1 of an exact revised simplex (Bland's rule) on
// this system either finds mu, which certifies infeasibility, or terminates with phase-1
// duals (pi_x, pi_0), pi_0 > 0, from which x = -pi_x / pi_0 is a feasible point.
// The basis has only (#variables + 1) rows, which suits the Core: few players,
// exponentially many coalition constraints.

#include <optional>
#include <string>
#include <vector>

#include "fairprice/game.hpp"

namespace fairprice {

enum class Relation { less_equal, greater_equal, equal };

struct Term {
    std::size_t variable = 0;
    Rational coefficient;
};

struct LinearConstraint {
    std::vector<Term> terms;
    Relation relation = Relation::greater_equal;
    Rational rhs;
    std::string label;
};

class LinearSystem {
   public:
    LinearSystem() = default;
    explicit LinearSystem(std::vector<std::string> variables) : variables_(std::move(variables)) {}

    std::size_t add_variable(std::string name);
    /// Throws ValidationError if a term references an undeclared variable.
    void add_constraint(LinearConstraint constraint);

    const std::vector<std::string> &variables() const { return variables_; }
    const std::vector<LinearConstraint> &constraints() const { return constraints_; }

    /// True iff `point` satisfies every constraint exactly.
    bool satisfied_by(const std::vector<Rational> &point) const;
    /// Index of the first constraint `point` violates, if any.
    std::optional<std::size_t> first_violation(const std::vector<Rational> &point) const;

   private:
    std::vector<std::string> variables_;
    std::vector<LinearConstraint> constraints_;
};

struct FeasibilityResult {
    bool feasible = false;
    std::vector<Rational> point;  // when feasible
    /// When infeasible: one multiplier per constraint, >= 0 for inequalities. Multiplying each
    /// constraint in ">=" orientation (a <= b read as -a >= -b) and summing gives 0 >= 1.
    std::vector<Rational> farkas;
    std::size_t pivots = 0;
};

FeasibilityResult lp_feasible(const LinearSystem &system);

/// Checks a Farkas certificate independently: combined coefficients are all zero and the
/// combined right-hand side is positive.
bool verify_infeasibility_certificate(const LinearSystem &system, const std::vector<Rational> &farkas);

/// The Core of `game`: sum_i x_i = v(N), and sum_{i in S} x_i >= v(S) for every S != N.
LinearSystem core_system(const Game &game);

struct CoreMembership {
    bool in_core = false;
    bool efficient = false;           // sum_i x_i == v(N)
    std::optional<Coalition> witness;  // lexicographically smallest S with v(S) > x(S)
};

CoreMembership core_contains(const Game &game, const PayoffVector &x);

struct CoreNonemptiness {
    bool nonempty = false;
    std::optional<PayoffVector> point;  // a Core point when nonempty
    std::vector<Rational> farkas;       // multipliers over core_system(game) when empty
};

CoreNonemptiness core_is_nonempty(const Game &game);

}  // namespace fairprice
