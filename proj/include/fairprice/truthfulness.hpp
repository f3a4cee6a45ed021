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

// Search for profitable seller misreports under a pricing rule. The seller knows
// (p, f, delta); recommenders are paid according to what the seller reports.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fairprice/game.hpp"

namespace fairprice {

/// Maps a (reported) game to the total payment owed to recommenders.
struct PricingRule {
    std::string name;
    std::function<Rational(const Game &)> total_payment;
};

PricingRule shapley_pricing();
PricingRule nash_pricing();
PricingRule zero_pricing();

/// A misreport: p', delta', and a scale applied to the scenario's increments
/// (q_i for linear, q for threshold, every f(S) for general).
struct SellerReport {
    Rational p;
    Rational delta;
    Rational f_scale;
};

struct ReportGrid {
    std::vector<Rational> p_values;
    std::vector<Rational> delta_values;
    std::vector<Rational> f_scales;

    /// Truth plus zero and half of every parameter; always contains delta' = 0.
    static ReportGrid around(const ScenarioMeta &truth);
    std::size_t size() const { return p_values.size() * delta_values.size() * f_scales.size(); }
};

struct DeviationReport {
    bool found = false;
    std::optional<SellerReport> best;  // the most profitable misreport, first in grid order on ties
    Rational truthful_payment;
    Rational deviant_payment;
    Rational truthful_utility;  // (p + f(N)) * delta - payment(truth)
    Rational deviant_utility;   // (p + f(N)) * delta - payment(report)
    std::size_t reports_evaluated = 0;
    std::size_t reports_skipped = 0;  // grid points that do not form a valid game
};

/// The seller's true utility when paying `payment` in total: v(N) - payment.
Rational seller_true_utility(const Game &truth, const Rational &payment);

/// Exhaustive search of the grid. Reports strictly improving the seller's true utility count
/// as deviations. Throws ValidationError for an empty grid or a game without scenario metadata.
DeviationReport truthfulness_probe(const Game &truth, const PricingRule &rule, const ReportGrid &grid);

}  // namespace fairprice
