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

// Fair payoffs for recommendation games: Shapley value, anonymity-proof Shapley value
// over purchase arguments, Nash bargaining, and translation of payoffs into prices.

#include <string>
#include <vector>

#include "fairprice/game.hpp"

namespace fairprice {

/// Exact Shapley value of every player (seller first). Uses the OpenMP kernel.
PayoffVector shapley(const Game &game);

/// A characteristic function over purchase arguments, with the arguments each
/// recommender declares. Declared sets are pairwise disjoint.
class ArgumentGame {
   public:
    struct Ownership {
        std::string recommender;
        std::vector<std::string> arguments;
    };
    struct WorthEntry {
        std::vector<std::string> arguments;
        Rational worth;
    };

    /// Unlisted argument subsets have worth 0.
    ArgumentGame(std::vector<std::string> arguments, const std::vector<WorthEntry> &worths,
                 std::vector<Ownership> ownership, std::size_t max_arguments = kDefaultMaxPlayers);

    const std::vector<std::string> &arguments() const { return arguments_; }
    const std::vector<Ownership> &ownership() const { return ownership_; }
    /// Union of all declared arguments, as a mask over arguments().
    Coalition declared() const { return declared_; }
    const Rational &worth(Coalition subset) const { return worths_[subset.mask()]; }
    std::span<const Rational> worth_table() const { return worths_; }
    std::size_t index_of(std::string_view argument) const;

   private:
    std::vector<std::string> arguments_;
    std::vector<Rational> worths_;
    std::vector<Ownership> ownership_;
    Coalition declared_;
};

struct ArgumentValues {
    std::vector<std::string> arguments;
    std::vector<Rational> values;

    const Rational &at(std::string_view argument) const;
};

/// Shapley values of the worth function restricted to the declared arguments.
ArgumentValues shapley_arguments(const ArgumentGame &game);

struct AnonymityProofResult {
    ArgumentValues per_argument;   // psi_a for declared a
    PayoffVector per_recommender;  // sum of psi_a over each recommender's arguments
};

/// psi_a = phi_a / (sum of phi over declared arguments) * v(declared), where phi is the
/// Shapley value of the game on all arguments. A zero denominator yields psi = 0 when
/// v(declared) = 0 and is rejected otherwise.
AnonymityProofResult anonymity_proof_shapley(const ArgumentGame &game);

/// Split of feasible_total with disagreement point d. Player order as in the game.
struct BargainingProblem {
    std::vector<std::string> ids;
    Rational feasible_total;
    std::vector<Rational> disagreement;

    /// The seller's disagreement payoff is v({s}) = p*delta; recommenders get 0.
    static BargainingProblem from_game(const Game &game);
};

struct NashSolution {
    PayoffVector payoff;
    /// Set when some payoff is negative, i.e. the closed form left the nonnegative simplex.
    /// Values are reported unclamped.
    bool outside_feasible_set = false;
};

/// Nash bargaining solution over {x >= 0, sum x = total}: every player gets its
/// disagreement payoff plus an equal share of the surplus.
NashSolution nash_bargaining(const BargainingProblem &problem);

enum class PaymentMode { per_recommendation, per_sale };

std::string_view payment_mode_name(PaymentMode mode);

struct PriceSchedule {
    PaymentMode mode = PaymentMode::per_recommendation;
    std::vector<std::string> recommenders;
    std::vector<Rational> prices;

    const Rational &at(std::string_view recommender) const;
};

/// Per recommendation the price is x_r; per sale it is x_r / (p + f(N)).
PriceSchedule to_prices(const PayoffVector &x, const Game &game, PaymentMode mode);

}  // namespace fairprice
