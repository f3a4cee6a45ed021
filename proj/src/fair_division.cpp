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

#include "fairprice/fair_division.hpp"

#include <set>

#include "fairprice/errors.hpp"
#include "fairprice/shapley_kernels.hpp"

namespace fairprice {

PayoffVector shapley(const Game &game) {
    if (game.size() > kHardMaxPlayers) {
        throw CapacityError("too many players for exact Shapley computation");
    }
    return PayoffVector{game.ids(), kernels::shapley_parallel(game.worth_table(), game.size())};
}

ArgumentGame::ArgumentGame(std::vector<std::string> arguments, const std::vector<WorthEntry> &worths,
                           std::vector<Ownership> ownership, std::size_t max_arguments)
    : arguments_(std::move(arguments)), ownership_(std::move(ownership)) {
    if (max_arguments > kHardMaxPlayers) {
        throw ValidationError("argument cap exceeds hard limit " + std::to_string(kHardMaxPlayers));
    }
    if (arguments_.size() > max_arguments) {
        throw CapacityError("argument game has " + std::to_string(arguments_.size()) +
                            " arguments; limit is " + std::to_string(max_arguments));
    }
    std::set<std::string> seen;
    for (const auto &a : arguments_) {
        if (a.empty() || !seen.insert(a).second) {
            throw ValidationError("argument ids must be unique and non-empty ('" + a + "')");
        }
    }
    worths_.assign(std::size_t{1} << arguments_.size(), Rational(0));
    std::set<Coalition::Mask> assigned;
    for (const auto &entry : worths) {
        Coalition s;
        for (const auto &a : entry.arguments) {
            s = s.with(index_of(a));
        }
        if (s.empty() && entry.worth != 0) {
            throw ValidationError("the empty argument set must have worth 0");
        }
        if (entry.worth < 0) {
            throw ValidationError("negative worth " + to_exact_string(entry.worth));
        }
        if (!assigned.insert(s.mask()).second) {
            throw ValidationError("argument subset listed twice in worths");
        }
        worths_[s.mask()] = entry.worth;
    }
    std::set<std::string> owners;
    for (const auto &own : ownership_) {
        if (own.recommender.empty() || !owners.insert(own.recommender).second) {
            throw ValidationError("recommender ids must be unique and non-empty ('" + own.recommender + "')");
        }
        for (const auto &a : own.arguments) {
            const std::size_t i = index_of(a);
            if (declared_.contains(i)) {
                throw ValidationError("argument '" + a + "' is owned twice; ownership must be a partition");
            }
            declared_ = declared_.with(i);
        }
    }
}

std::size_t ArgumentGame::index_of(std::string_view argument) const {
    for (std::size_t i = 0; i < arguments_.size(); ++i) {
        if (arguments_[i] == argument) {
            return i;
        }
    }
    throw ValidationError("unknown argument '" + std::string(argument) + "'");
}

const Rational &ArgumentValues::at(std::string_view argument) const {
    for (std::size_t i = 0; i < arguments.size(); ++i) {
        if (arguments[i] == argument) {
            return values[i];
        }
    }
    throw ValidationError("no value for argument '" + std::string(argument) + "'");
}

ArgumentValues shapley_arguments(const ArgumentGame &game) {
    const auto declared = game.declared().members();
    if (declared.empty()) {
        throw ValidationError("no declared arguments");
    }
    const std::size_t k = declared.size();
    std::vector<Rational> restricted(std::size_t{1} << k);
    for (Coalition::Mask m = 0; m < restricted.size(); ++m) {
        Coalition full;
        for (std::size_t j = 0; j < k; ++j) {
            if ((m >> j) & 1U) {
                full = full.with(declared[j]);
            }
        }
        restricted[m] = game.worth(full);
    }
    ArgumentValues out;
    out.values = kernels::shapley_parallel(restricted, k);
    for (std::size_t i : declared) {
        out.arguments.push_back(game.arguments()[i]);
    }
    return out;
}

AnonymityProofResult anonymity_proof_shapley(const ArgumentGame &game) {
    const auto declared = game.declared().members();
    if (declared.empty()) {
        throw ValidationError("no declared arguments");
    }
    const auto phi = kernels::shapley_parallel(game.worth_table(), game.arguments().size());
    Rational denominator = 0;
    for (std::size_t i : declared) {
        denominator += phi[i];
    }
    const Rational &declared_worth = game.worth(game.declared());
    if (denominator == 0 && declared_worth != 0) {
        throw ValidationError("declared arguments have zero total Shapley value but positive worth");
    }

    AnonymityProofResult out;
    for (std::size_t i : declared) {
        out.per_argument.arguments.push_back(game.arguments()[i]);
        out.per_argument.values.push_back(denominator == 0 ? Rational(0)
                                                           : Rational(phi[i] / denominator * declared_worth));
    }
    for (const auto &own : game.ownership()) {
        Rational payoff = 0;
        for (const auto &a : own.arguments) {
            payoff += out.per_argument.at(a);
        }
        out.per_recommender.ids.push_back(own.recommender);
        out.per_recommender.values.push_back(payoff);
    }
    return out;
}

BargainingProblem BargainingProblem::from_game(const Game &game) {
    BargainingProblem bp;
    bp.ids = game.ids();
    bp.feasible_total = game.worth(game.grand());
    bp.disagreement.assign(game.size(), Rational(0));
    bp.disagreement[0] = game.worth(Coalition::of({0}));
    return bp;
}

NashSolution nash_bargaining(const BargainingProblem &problem) {
    if (problem.ids.size() != problem.disagreement.size() || problem.ids.empty()) {
        throw ValidationError("bargaining problem needs one disagreement payoff per player");
    }
    Rational committed = 0;
    for (const auto &d : problem.disagreement) {
        committed += d;
    }
    const Rational surplus = problem.feasible_total - committed;
    if (surplus < 0) {
        throw ValidationError("disagreement point is infeasible: it needs " + to_exact_string(committed) +
                              " but only " + to_exact_string(problem.feasible_total) + " is available");
    }
    const Rational share = surplus / static_cast<long>(problem.ids.size());
    NashSolution out;
    out.payoff.ids = problem.ids;
    for (const auto &d : problem.disagreement) {
        out.payoff.values.push_back(d + share);
        if (out.payoff.values.back() < 0) {
            out.outside_feasible_set = true;
        }
    }
    return out;
}

std::string_view payment_mode_name(PaymentMode mode) {
    return mode == PaymentMode::per_sale ? "per-sale" : "per-recommendation";
}

const Rational &PriceSchedule::at(std::string_view recommender) const {
    for (std::size_t i = 0; i < recommenders.size(); ++i) {
        if (recommenders[i] == recommender) {
            return prices[i];
        }
    }
    throw ValidationError("no price for '" + std::string(recommender) + "'");
}

PriceSchedule to_prices(const PayoffVector &x, const Game &game, PaymentMode mode) {
    if (!is_feasible(x, game)) {
        throw ValidationError("payoff vector is not feasible for this game");
    }
    Rational divisor = 1;
    if (mode == PaymentMode::per_sale) {
        divisor = game.sale_probability();
        if (divisor == 0) {
            throw ValidationError("pay-per-sale needs p + f(N) > 0");
        }
    }
    PriceSchedule out;
    out.mode = mode;
    for (std::size_t i = 1; i < x.size(); ++i) {
        out.recommenders.push_back(x.ids[i]);
        out.prices.push_back(x.values[i] / divisor);
    }
    return out;
}

}  // namespace fairprice
