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

#include "fairprice/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "fairprice/core_lp.hpp"
#include "fairprice/errors.hpp"
#include "fairprice/fair_division.hpp"
#include "fairprice/policy.hpp"
#include "fairprice/random_games.hpp"
#include "fairprice/special_functions.hpp"
#include "fairprice/trust.hpp"
#include "fairprice/truthfulness.hpp"

namespace fairprice {

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

namespace {

std::string num(double x) { return to_decimal_string(x, 12); }

// Reference experiment: n = 200, r = 1, p0 = 0.5, l = 0.66, g = 1.33 with reset.
TrustParams experiment_params(const Rational &recovery, bool reset) {
    TrustParams params;
    params.p0 = Rational(1, 2);
    params.loss = Rational(66, 100);
    params.recovery = recovery;
    params.reward = 1;
    params.reset = reset;
    return params;
}

constexpr std::size_t kExperimentSteps = 200;

SuiteReport figure2(const VerifyOptions &options) {
    SuiteReport report{"figure2", {}};
    const auto no_reset = experiment_params(1, false);
    const auto with_reset = experiment_params(1, true);

    const double a = evaluate_policy(no_reset, Policy::all(), kExperimentSteps).final_value();
    const double series = exact_series_no_reset(no_reset, options.tol).value;
    report.checks.push_back({"no reset, no recovery converges to 2.25 +- 0.05",
                             std::abs(a - 2.25) <= 0.05,
                             "M_200 = " + num(a) + ", series limit = " + num(series)});

    const double b = evaluate_policy(with_reset, Policy::all(), kExperimentSteps).final_value();
    const double limit = with_reset_total(with_reset, options.tol).value;
    report.checks.push_back({"reset, no recovery converges to 5 +- 0.10", std::abs(b - 5.0) <= 0.10,
                             "M_200 = " + num(b) + ", fixed point = " + num(limit)});

    const auto recovering = experiment_params(Rational(133, 100), true);
    const double k2 = heuristic_reward(recovering, 2, kExperimentSteps).final_value();
    const double k3 = heuristic_reward(recovering, 3, kExperimentSteps).final_value();
    const double k4 = heuristic_reward(recovering, 4, kExperimentSteps).final_value();
    const double m = dp_optimal(recovering, kExperimentSteps).optimal_values.final_value();
    report.checks.push_back({"recovery: optimal >= every-k:3 > every-k:4", m >= k3 && k3 > k4,
                             "M_200 = " + num(m) + ", A2 = " + num(k2) + ", A3 = " + num(k3) +
                                 ", A4 = " + num(k4)});
    return report;
}

SuiteReport heuristics(const VerifyOptions &options) {
    SuiteReport report{"heuristics", {}};
    const auto params = experiment_params(Rational(133, 100), true);
    const auto bound = psi(params.loss, params.recovery);
    report.checks.push_back({"psi(0.66, 1.33) = 2", bound && *bound == 2,
                             bound ? "psi = " + std::to_string(*bound) : "no finite psi"});

    for (std::size_t k : {3, 4}) {
        const auto curve = heuristic_reward(params, k, kExperimentSteps);
        const Rational exact = heuristic_closed_form(params, k, kExperimentSteps);
        const double slope = to_double(params.p0 * params.reward);
        bool linear = true;
        for (std::size_t n = k + 1; n <= kExperimentSteps; ++n) {
            linear = linear && std::abs(curve.at(n) - curve.at(n - k) - slope) <= 1e-12;
        }
        report.checks.push_back({"every-k:" + std::to_string(k) + " is linear with slope p0 r / k",
                                 linear && std::abs(curve.final_value() - to_double(exact)) <= 1e-12,
                                 "A_200 = " + num(curve.final_value()) + ", closed form " +
                                     to_exact_string(exact)});
    }

    // k = 2 <= psi: the curve is nondecreasing and bounded by its limit, the reset total at
    // the effective loss rate l g, so its tail beyond N is at most limit - A_N.
    TrustParams effective = experiment_params(1, true);
    effective.loss = params.loss * params.recovery;
    const double limit = with_reset_total(effective, options.tol).value;
    constexpr std::size_t kLong = 12000;
    const auto curve = heuristic_reward(params, 2, kLong);
    bool bounded = true;
    for (std::size_t n = 2; n <= kLong; ++n) {
        bounded = bounded && curve.at(n) >= curve.at(n - 1) && curve.at(n) <= limit + 1e-9;
    }
    const double tail = limit - curve.final_value();
    report.checks.push_back({"every-k:2 is bounded and Cauchy", bounded && tail < 1e-6,
                             "A_12000 = " + num(curve.final_value()) + ", limit = " + num(limit) +
                                 ", tail = " + num(tail)});
    return report;
}

SuiteReport optimal(const VerifyOptions &) {
    SuiteReport report{"optimal", {}};
    const auto params = experiment_params(Rational(133, 100), true);
    const auto plan = dp_optimal(params, kExperimentSteps);
    const auto a3 = heuristic_reward(params, 3, kExperimentSteps);
    bool dominates = true;
    bool monotone = true;
    for (std::size_t n = 1; n <= kExperimentSteps; ++n) {
        dominates = dominates && plan.optimal_values.at(n) + 1e-12 >= a3.at(n);
        monotone = monotone && (n == 1 || plan.optimal_values.at(n) >= plan.optimal_values.at(n - 1));
    }
    report.checks.push_back({"M_n >= A3_n for n <= 200", dominates,
                             "M_200 = " + num(plan.optimal_values.final_value())});
    report.checks.push_back({"M_n nondecreasing", monotone, ""});
    const double growth = plan.optimal_values.at(200) - plan.optimal_values.at(100);
    const double a3_growth = a3.at(200) - a3.at(100);
    report.checks.push_back({"M_200 - M_100 > 0.9 (A3_200 - A3_100)", growth > 0.9 * a3_growth,
                             num(growth) + " vs " + num(0.9 * a3_growth)});

    const double replay = evaluate_policy(params, plan.policy, kExperimentSteps).final_value();
    report.checks.push_back({"forward evaluation of the table reproduces M_200",
                             std::abs(replay - plan.optimal_values.final_value()) <= 1e-9, num(replay)});

    const auto flat = experiment_params(1, true);
    const double m = dp_optimal(flat, kExperimentSteps).optimal_values.final_value();
    const double all = evaluate_policy(flat, Policy::all(), kExperimentSteps).final_value();
    report.checks.push_back({"without recovery, optimal = all", std::abs(m - all) <= 1e-12,
                             num(m) + " vs " + num(all)});
    return report;
}

SuiteReport bounds(const VerifyOptions &options) {
    SuiteReport report{"bounds", {}};
    bool chain = true;
    bool dominated = true;
    std::string worst;
    double min_slack = INFINITY;
    for (int i = 1; i <= 9; ++i) {
        for (int j = 1; j <= 9; ++j) {
            TrustParams params;
            params.p0 = Rational(i, 10);
            params.loss = Rational(j, 10);
            params.reset = true;
            const double q = failure_probability_q(params, options.tol).value;
            const double lower = q_lower_bound(params);
            const double total = with_reset_total(params, options.tol).value;
            const double upper = reward_upper_bound(params);
            if (!(q >= lower && lower > 0 && total <= upper)) {
                chain = false;
                worst = "p0 = " + num(i / 10.0) + ", l = " + num(j / 10.0);
            }
            min_slack = std::min(min_slack, q - lower);
            params.reset = false;
            dominated = dominated &&
                        exact_series_no_reset(params, options.tol).value <= closed_form_no_reset(params);
        }
    }
    report.checks.push_back({"q >= delta(c) > 0 and reset total <= bound on the 9x9 grid", chain,
                             chain ? "min q - delta(c) = " + num(min_slack) : "fails at " + worst});
    report.checks.push_back({"exact series <= closed form on the 9x9 grid", dominated, ""});

    constexpr int kPoints = 1000;
    const double cap = std::min(2.0 / std::numbers::e + 1.0, std::numbers::pi * std::numbers::pi / 6.0) + 1e-9;
    bool monotone = true;
    bool in_range = true;
    double max_gap = 0.0;
    double previous = INFINITY;
    for (int i = 0; i <= kPoints; ++i) {
        const double x = static_cast<double>(i) / kPoints;
        const double d = dilog(x);
        monotone = monotone && d < previous;
        in_range = in_range && d >= 0.0 && d <= cap;
        max_gap = std::max(max_gap, std::abs(d - dilog_series(x)));
        previous = d;
    }
    report.checks.push_back({"dilog strictly decreasing on [0, 1]", monotone, ""});
    report.checks.push_back({"0 <= dilog <= min(2/e + 1, pi^2/6)", in_range, "dilog(0) = " + num(dilog(0.0))});
    report.checks.push_back({"quadrature and series agree to 1e-9", max_gap <= 1e-9, "max gap " + num(max_gap)});
    return report;
}

SuiteReport two_player(const VerifyOptions &options) {
    SuiteReport report{"two-player", {}};
    GameSampler sampler(options.seed);
    constexpr int kGames = 1000;
    int agree = 0;
    int in_core = 0;
    for (int i = 0; i < kGames; ++i) {
        const Game game = sampler.any(1);
        const auto phi = shapley(game);
        const auto nash = nash_bargaining(BargainingProblem::from_game(game));
        agree += nash.payoff.values == phi.values ? 1 : 0;
        in_core += core_contains(game, phi).in_core ? 1 : 0;
    }
    report.checks.push_back({"Nash bargaining = Shapley", agree == kGames,
                             std::to_string(agree) + "/" + std::to_string(kGames) + " games"});
    report.checks.push_back({"Shapley lies in the Core", in_core == kGames,
                             std::to_string(in_core) + "/" + std::to_string(kGames) + " games"});
    return report;
}

SuiteReport core_laws(const VerifyOptions &options) {
    SuiteReport report{"core-laws", {}};
    GameSampler sampler(options.seed);
    int monotone_ok = 0;
    int general_ok = 0;
    constexpr int kGames = 200;
    for (int i = 0; i < kGames; ++i) {
        const std::size_t recommenders = 1 + sampler.below(3);
        const Game game = (i % 2 == 0) ? sampler.linear(recommenders) : sampler.threshold(recommenders);
        const auto result = core_is_nonempty(game);
        monotone_ok += (result.nonempty && result.point && core_contains(game, *result.point).in_core) ? 1 : 0;

        const Game general = sampler.general(recommenders);
        const auto g = core_is_nonempty(general);
        const bool certified = g.nonempty ? (g.point && core_contains(general, *g.point).in_core)
                                          : verify_infeasibility_certificate(core_system(general), g.farkas);
        general_ok += certified ? 1 : 0;
    }
    report.checks.push_back({"linear and threshold Cores are non-empty", monotone_ok == kGames,
                             std::to_string(monotone_ok) + "/" + std::to_string(kGames)});
    report.checks.push_back({"general games carry a valid certificate", general_ok == kGames,
                             std::to_string(general_ok) + "/" + std::to_string(kGames)});

    std::map<Coalition, Rational> f{{Coalition::of({0, 1}), Rational(1, 2)},
                                    {Coalition::of({0, 2}), Rational(1, 2)}};
    const Game empty = build_general(0, 1, 2, f);
    const auto e = core_is_nonempty(empty);
    report.checks.push_back({"non-monotone fixture has an empty Core",
                             !e.nonempty && verify_infeasibility_certificate(core_system(empty), e.farkas),
                             e.nonempty ? "reported non-empty" : "certificate checked"});

    int threshold_ok = 0;
    constexpr int kThreshold = 100;
    for (int i = 0; i < kThreshold; ++i) {
        const std::size_t n = 2 + sampler.below(2);
        const std::size_t k = 1 + sampler.below(n - 1);
        const Game game = build_threshold(sampler.fraction(Rational(1, 2)), sampler.margin(), n, k,
                                          sampler.fraction(Rational(1, 2)));
        PayoffVector x{game.ids(), std::vector<Rational>(game.size(), Rational(0))};
        x.values[0] = game.worth(game.grand());
        bool ok = core_contains(game, x).in_core;
        const std::size_t r = 1 + sampler.below(n);
        const Rational moved = Rational(1 + static_cast<long>(sampler.below(10)), 10) * x.values[0];
        if (moved > 0) {
            x.values[0] -= moved;
            x.values[r] += moved;
            ok = ok && !core_contains(game, x).in_core;
        }
        threshold_ok += ok ? 1 : 0;
    }
    report.checks.push_back({"threshold k < n admits only seller-takes-all", threshold_ok == kThreshold,
                             std::to_string(threshold_ok) + "/" + std::to_string(kThreshold)});
    return report;
}

SuiteReport truthfulness(const VerifyOptions &options) {
    SuiteReport report{"truthfulness", {}};
    GameSampler sampler(options.seed);
    constexpr int kGames = 100;
    int found = 0;
    int sound = 0;
    int zero_clean = 0;
    const auto rule = shapley_pricing();
    const auto zero = zero_pricing();
    for (int i = 0; i < kGames;) {
        const Game game = sampler.any(1 + sampler.below(3));
        if (rule.total_payment(game) <= 0) {
            continue;
        }
        ++i;
        const auto grid = ReportGrid::around(*game.scenario());
        const auto d = truthfulness_probe(game, rule, grid);
        found += d.found ? 1 : 0;
        sound += (d.found && d.deviant_utility > d.truthful_utility &&
                  d.deviant_utility == seller_true_utility(game, d.deviant_payment))
                     ? 1
                     : 0;
        zero_clean += truthfulness_probe(game, zero, grid).found ? 0 : 1;
    }
    report.checks.push_back({"Shapley pricing admits a profitable misreport", found == kGames,
                             std::to_string(found) + "/" + std::to_string(kGames) + " games"});
    report.checks.push_back({"every reported misreport is strictly profitable", sound == found, ""});
    report.checks.push_back({"zero payments admit none", zero_clean == kGames,
                             std::to_string(zero_clean) + "/" + std::to_string(kGames) + " games"});
    return report;
}

Game with_dummy(const Game &game) {
    auto players = game.players();
    players.push_back(Player{"dummy", PlayerKind::recommender});
    const std::size_t n = game.size();
    std::vector<Rational> worths(std::size_t{1} << (n + 1));
    for (std::size_t m = 0; m < worths.size(); ++m) {
        worths[m] = game.worth(Coalition(static_cast<Coalition::Mask>(m & ((std::size_t{1} << n) - 1))));
    }
    return Game::from_worths(std::move(players), std::move(worths));
}

bool interchangeable(const Game &game, std::size_t i, std::size_t j) {
    const auto full = game.grand().mask();
    for (Coalition::Mask m = 0; m <= full; ++m) {
        const Coalition s(m);
        if (s.contains(i) || s.contains(j)) {
            continue;
        }
        if (game.worth(s.with(i)) != game.worth(s.with(j))) {
            return false;
        }
    }
    return true;
}

SuiteReport shapley_axioms(const VerifyOptions &options) {
    SuiteReport report{"shapley-axioms", {}};
    GameSampler sampler(options.seed);
    constexpr int kGames = 100;
    int efficient = 0, dummy = 0, symmetric = 0, additive = 0, symmetric_pairs = 0;
    for (int i = 0; i < kGames; ++i) {
        const std::size_t recommenders = 1 + sampler.below(4);
        const Game game = sampler.any(recommenders);
        const auto phi = shapley(game);
        efficient += phi.total() == game.worth(game.grand()) ? 1 : 0;

        dummy += shapley(with_dummy(game)).values.back() == 0 ? 1 : 0;

        bool sym = true;
        for (std::size_t a = 0; a < game.size(); ++a) {
            for (std::size_t b = a + 1; b < game.size(); ++b) {
                if (interchangeable(game, a, b)) {
                    ++symmetric_pairs;
                    sym = sym && phi.values[a] == phi.values[b];
                }
            }
        }
        symmetric += sym ? 1 : 0;

        const Game other = sampler.general(recommenders);
        std::vector<Rational> sum(game.worth_table().begin(), game.worth_table().end());
        for (std::size_t m = 0; m < sum.size(); ++m) {
            sum[m] += other.worth_table()[m];
        }
        const auto combined = shapley(Game::from_worths(game.players(), std::move(sum))).values;
        const auto psi_other = shapley(other).values;
        bool add = true;
        for (std::size_t p = 0; p < combined.size(); ++p) {
            add = add && combined[p] == phi.values[p] + psi_other[p];
        }
        additive += add ? 1 : 0;
    }
    const auto count = [](int k) { return std::to_string(k) + "/" + std::to_string(kGames); };
    report.checks.push_back({"efficiency", efficient == kGames, count(efficient)});
    report.checks.push_back({"dummy", dummy == kGames, count(dummy)});
    report.checks.push_back({"symmetry", symmetric == kGames,
                             count(symmetric) + " (" + std::to_string(symmetric_pairs) + " symmetric pairs)"});
    report.checks.push_back({"additivity", additive == kGames, count(additive)});
    return report;
}

using SuiteFn = std::function<SuiteReport(const VerifyOptions &)>;

const std::vector<std::pair<std::string, SuiteFn>> &registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"figure2", figure2},         {"heuristics", heuristics},     {"optimal", optimal},
        {"bounds", bounds},           {"two-player", two_player},     {"core-laws", core_laws},
        {"truthfulness", truthfulness}, {"shapley-axioms", shapley_axioms},
    };
    return suites;
}

}  // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &[name, fn] : registry()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

std::vector<SuiteReport> run_suite(std::string_view name, const VerifyOptions &options) {
    if (!(options.tol > 0)) {
        throw ValidationError("--tol must be positive");
    }
    std::vector<SuiteReport> reports;
    for (const auto &[suite, fn] : registry()) {
        if (name == "all" || name == suite) {
            reports.push_back(fn(options));
        }
    }
    if (reports.empty()) {
        std::string known = "all";
        for (const auto &n : suite_names()) {
            known += ", " + n;
        }
        throw ValidationError("unknown suite '" + std::string(name) + "' (expected one of: " + known + ")");
    }
    return reports;
}

}  // namespace fairprice
