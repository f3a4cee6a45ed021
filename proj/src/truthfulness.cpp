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

#include "fairprice/truthfulness.hpp"

#include <algorithm>

#include "fairprice/errors.hpp"
#include "fairprice/fair_division.hpp"

namespace fairprice {

namespace {

Rational recommender_total(const PayoffVector &x) {
    Rational sum = 0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        sum += x.values[i];
    }
    return sum;
}

void push_unique(std::vector<Rational> &values, const Rational &v) {
    if (std::find(values.begin(), values.end(), v) == values.end()) {
        values.push_back(v);
    }
}

ScenarioMeta apply_report(const ScenarioMeta &truth, const SellerReport &report) {
    ScenarioMeta out = truth;
    out.p = report.p;
    out.delta = report.delta;
    for (auto &q : out.q) {
        q *= report.f_scale;
    }
    out.threshold_q *= report.f_scale;
    for (auto &[s, value] : out.f) {
        value *= report.f_scale;
    }
    return out;
}

}  // namespace

PricingRule shapley_pricing() {
    return {"shapley", [](const Game &g) { return recommender_total(shapley(g)); }};
}

PricingRule nash_pricing() {
    return {"nash", [](const Game &g) {
                return recommender_total(nash_bargaining(BargainingProblem::from_game(g)).payoff);
            }};
}

PricingRule zero_pricing() {
    return {"zero", [](const Game &) { return Rational(0); }};
}

ReportGrid ReportGrid::around(const ScenarioMeta &truth) {
    ReportGrid grid;
    for (const Rational &p : {truth.p, Rational(0), Rational(truth.p / 2)}) {
        push_unique(grid.p_values, p);
    }
    for (const Rational &d : {truth.delta, Rational(0), Rational(truth.delta / 2)}) {
        push_unique(grid.delta_values, d);
    }
    for (const Rational &s : {Rational(1), Rational(0), Rational(1, 2)}) {
        push_unique(grid.f_scales, s);
    }
    return grid;
}

Rational seller_true_utility(const Game &truth, const Rational &payment) {
    return truth.worth(truth.grand()) - payment;
}

DeviationReport truthfulness_probe(const Game &truth, const PricingRule &rule, const ReportGrid &grid) {
    if (grid.size() == 0) {
        throw ValidationError("report grid is empty");
    }
    if (!truth.scenario()) {
        throw ValidationError("truthfulness probe needs a scenario game");
    }
    const ScenarioMeta &meta = *truth.scenario();
    GameOptions options;
    options.ids = truth.ids();
    options.max_players = std::max(kDefaultMaxPlayers, truth.size());

    DeviationReport out;
    out.truthful_payment = rule.total_payment(truth);
    out.truthful_utility = seller_true_utility(truth, out.truthful_payment);
    out.deviant_utility = out.truthful_utility;
    out.deviant_payment = out.truthful_payment;

    for (const auto &p : grid.p_values) {
        for (const auto &delta : grid.delta_values) {
            for (const auto &scale : grid.f_scales) {
                SellerReport report{p, delta, scale};
                std::optional<Game> reported;
                try {
                    reported = build_from_meta(apply_report(meta, report), options);
                } catch (const ValidationError &) {
                    ++out.reports_skipped;
                    continue;
                }
                ++out.reports_evaluated;
                const Rational payment = rule.total_payment(*reported);
                const Rational utility = seller_true_utility(truth, payment);
                if (utility > out.deviant_utility) {
                    out.found = true;
                    out.best = report;
                    out.deviant_payment = payment;
                    out.deviant_utility = utility;
                }
            }
        }
    }
    return out;
}

}  // namespace fairprice
