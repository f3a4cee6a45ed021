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

#include "fairprice/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairprice/core_lp.hpp"
#include "fairprice/errors.hpp"
#include "fairprice/fair_division.hpp"
#include "fairprice/monte_carlo.hpp"
#include "fairprice/policy.hpp"
#include "fairprice/price_table.hpp"
#include "fairprice/reward_csv.hpp"
#include "fairprice/spec_io.hpp"
#include "fairprice/verify.hpp"

namespace fairprice {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kMaxSteps = 100000;
constexpr const char *kPlayersEnv = "FAIRPRICE_MAX_PLAYERS";

std::size_t max_players_from_env() {
    const char *raw = std::getenv(kPlayersEnv);
    if (raw == nullptr || *raw == '\0') {
        return kDefaultMaxPlayers;
    }
    const std::string text(raw);
    std::size_t used = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size() || value < 1 || value > kHardMaxPlayers) {
        throw ValidationError(std::string(kPlayersEnv) + " must be an integer in 1.." +
                              std::to_string(kHardMaxPlayers) + ", got '" + text + "'");
    }
    return value;
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw ValidationError("cannot write '" + path + "'");
    }
    file << text;
    if (!file) {
        throw ValidationError("failed writing '" + path + "'");
    }
}

void check_format(const std::string &format) {
    if (format != "csv" && format != "json") {
        throw ValidationError("--format must be csv or json, got '" + format + "'");
    }
}

json exact_json(const Rational &x) { return json{{"exact", to_exact_string(x)}, {"decimal", to_decimal_string(x)}}; }

// ---- price ----------------------------------------------------------------

struct PriceConfig {
    std::string game;
    std::vector<std::string> methods{"shapley"};
    std::string payment = "per-recommendation";
    std::string payoff;
    std::string out;
    std::string format = "csv";
};

struct ValueRow {
    std::string id;
    Rational value;
    std::optional<Rational> price;
};

struct MethodResult {
    std::string method;
    std::string row_method;  // method column for `values` in CSV
    std::vector<ValueRow> values;
    std::vector<std::pair<std::string, json>> status;
    std::string extra_name;  // secondary value list (argument-level values, Farkas multipliers)
    std::vector<ValueRow> extra;
};

PaymentMode parse_payment(const std::string &name) {
    if (name == "per-recommendation") {
        return PaymentMode::per_recommendation;
    }
    if (name == "per-sale") {
        return PaymentMode::per_sale;
    }
    throw ValidationError("--payment must be per-recommendation or per-sale, got '" + name + "'");
}

PayoffVector parse_payoff(const std::string &text, const Game &game) {
    PayoffVector x{game.ids(), std::vector<Rational>(game.size())};
    std::vector<bool> seen(game.size(), false);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw ValidationError("--payoff: expected id=value, got '" + item + "'");
        }
        const std::string id = item.substr(0, eq);
        const auto it = std::find(x.ids.begin(), x.ids.end(), id);
        if (it == x.ids.end()) {
            throw ValidationError("--payoff: unknown player '" + id + "'");
        }
        const auto i = static_cast<std::size_t>(it - x.ids.begin());
        if (seen[i]) {
            throw ValidationError("--payoff: player '" + id + "' given twice");
        }
        try {
            x.values[i] = parse_rational(item.substr(eq + 1));
        } catch (const ValidationError &e) {
            throw ValidationError("--payoff: player '" + id + "': " + e.what());
        }
        seen[i] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) {
            throw ValidationError("--payoff: missing player '" + x.ids[i] + "'");
        }
    }
    return x;
}

std::string coalition_label(const Game &game, Coalition s) {
    std::string out = "{";
    for (std::size_t i : s.members()) {
        out += (out.size() > 1 ? "," : "") + game.players()[i].id;
    }
    return out + "}";
}

std::vector<ValueRow> priced_rows(const PayoffVector &x, const Game &game, PaymentMode mode) {
    const auto prices = to_prices(x, game, mode);
    std::vector<ValueRow> rows;
    for (std::size_t i = 0; i < x.size(); ++i) {
        ValueRow row{x.ids[i], x.values[i], std::nullopt};
        if (i > 0) {
            row.price = prices.prices[i - 1];
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ValueRow> plain_rows(const PayoffVector &x) {
    std::vector<ValueRow> rows;
    for (std::size_t i = 0; i < x.size(); ++i) {
        rows.push_back({x.ids[i], x.values[i], std::nullopt});
    }
    return rows;
}

[[noreturn]] void mismatch(const std::string &method, const char *needs) {
    throw ValidationError("method '" + method + "' needs " + needs);
}

MethodResult run_scenario_method(const std::string &method, const ScenarioSpec &spec, PaymentMode mode,
                                 const std::string &payoff_flag, std::ostream &err) {
    const Game &game = spec.game;
    MethodResult r{method, method, {}, {}, {}, {}};
    if (method == "shapley") {
        r.values = priced_rows(shapley(game), game, mode);
    } else if (method == "nash") {
        const auto nash = nash_bargaining(BargainingProblem::from_game(game));
        if (nash.outside_feasible_set) {
            err << "warning: the Nash solution leaves the nonnegative feasible set\n";
        }
        r.values = priced_rows(nash.payoff, game, mode);
        r.status.emplace_back("outside_feasible_set", nash.outside_feasible_set);
    } else if (method == "core-check") {
        PayoffVector x;
        if (!payoff_flag.empty()) {
            x = parse_payoff(payoff_flag, game);
        } else if (spec.payoff) {
            x = *spec.payoff;
        } else {
            x = PayoffVector{game.ids(), std::vector<Rational>(game.size())};
            x.values[0] = game.worth(game.grand());
        }
        const auto m = core_contains(game, x);
        r.values = plain_rows(x);
        r.status.emplace_back("in_core", m.in_core);
        r.status.emplace_back("efficient", m.efficient);
        r.status.emplace_back("witness", m.witness ? json(coalition_label(game, *m.witness)) : json(nullptr));
    } else if (method == "core-nonempty") {
        const auto c = core_is_nonempty(game);
        r.status.emplace_back("nonempty", c.nonempty);
        if (c.point) {
            r.values = plain_rows(*c.point);
        } else {
            const auto system = core_system(game);
            r.extra_name = "certificate";
            for (std::size_t i = 0; i < c.farkas.size(); ++i) {
                if (c.farkas[i] != 0) {
                    r.extra.push_back({system.constraints()[i].label, c.farkas[i], std::nullopt});
                }
            }
        }
    } else {
        mismatch(method, "an argument game (arguments, worths, ownership)");
    }
    return r;
}

MethodResult run_argument_method(const std::string &method, const ArgumentGame &game, PaymentMode mode) {
    if (mode == PaymentMode::per_sale) {
        throw ValidationError("pay-per-sale needs a scenario game with p and f(N)");
    }
    MethodResult r{method, method, {}, {}, {}, {}};
    if (method == "shapley") {
        const auto phi = shapley_arguments(game);
        for (std::size_t i = 0; i < phi.arguments.size(); ++i) {
            r.values.push_back({phi.arguments[i], phi.values[i], std::nullopt});
        }
    } else if (method == "anon-shapley") {
        const auto psi = anonymity_proof_shapley(game);
        for (std::size_t i = 0; i < psi.per_recommender.size(); ++i) {
            const auto &v = psi.per_recommender.values[i];
            r.values.push_back({psi.per_recommender.ids[i], v, v});
        }
        r.extra_name = "arguments";
        for (std::size_t i = 0; i < psi.per_argument.arguments.size(); ++i) {
            r.extra.push_back({psi.per_argument.arguments[i], psi.per_argument.values[i], std::nullopt});
        }
    } else {
        mismatch(method, "a scenario game (players, scenario, p, delta)");
    }
    return r;
}

std::string status_text(const json &value) {
    if (value.is_boolean()) {
        return value.get<bool>() ? "true" : "false";
    }
    if (value.is_null()) {
        return "";
    }
    return value.get<std::string>();
}

std::string render_price_csv(const std::vector<MethodResult> &results) {
    std::vector<PriceRow> rows;
    for (const auto &r : results) {
        for (const auto &[key, value] : r.status) {
            rows.push_back({key, r.method, status_text(value), ""});
        }
        for (const auto &v : r.values) {
            rows.push_back({v.id, r.row_method, to_decimal_string(v.value),
                            v.price ? to_decimal_string(*v.price) : ""});
        }
        for (const auto &v : r.extra) {
            rows.push_back({v.id, r.method + ":" + r.extra_name, to_decimal_string(v.value), ""});
        }
    }
    std::ostringstream os;
    write_price_csv(os, rows);
    return os.str();
}

std::string render_price_json(const std::vector<MethodResult> &results, PaymentMode mode, bool arguments) {
    json doc;
    doc["game"] = arguments ? "arguments" : "scenario";
    doc["payment"] = std::string(payment_mode_name(mode));
    doc["results"] = json::array();
    const auto rows_json = [](const std::vector<ValueRow> &rows) {
        json arr = json::array();
        for (const auto &v : rows) {
            json item;
            item["id"] = v.id;
            item.update(exact_json(v.value));
            if (v.price) {
                item["price"] = exact_json(*v.price);
            }
            arr.push_back(std::move(item));
        }
        return arr;
    };
    for (const auto &r : results) {
        json item;
        item["method"] = r.method;
        for (const auto &[key, value] : r.status) {
            item[key] = value;
        }
        item["values"] = rows_json(r.values);
        if (!r.extra_name.empty()) {
            item[r.extra_name] = rows_json(r.extra);
        }
        doc["results"].push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

int cmd_price(const PriceConfig &config, std::ostream &out, std::ostream &err) {
    check_format(config.format);
    const PaymentMode mode = parse_payment(config.payment);
    static const std::vector<std::string> known{"shapley", "anon-shapley", "nash", "core-check", "core-nonempty"};
    if (config.methods.empty()) {
        throw ValidationError("--method: at least one method is required");
    }
    for (const auto &m : config.methods) {
        if (std::find(known.begin(), known.end(), m) == known.end()) {
            throw ValidationError("--method: unknown method '" + m +
                                  "' (expected shapley, anon-shapley, nash, core-check, core-nonempty)");
        }
    }
    const auto spec = load_spec_file(config.game, max_players_from_env());
    const bool arguments = std::holds_alternative<ArgumentGame>(spec);
    if (arguments && !config.payoff.empty()) {
        throw ValidationError("--payoff applies to scenario games only");
    }
    std::vector<MethodResult> results;
    for (const auto &m : config.methods) {
        if (arguments) {
            results.push_back(run_argument_method(m, std::get<ArgumentGame>(spec), mode));
        } else {
            results.push_back(run_scenario_method(m, std::get<ScenarioSpec>(spec), mode, config.payoff, err));
        }
    }
    emit(config.format == "csv" ? render_price_csv(results) : render_price_json(results, mode, arguments),
         config.out, out);
    return kExitOk;
}

// ---- simulate -------------------------------------------------------------

struct SimulateConfig {
    std::string p0 = "0.5";
    std::string l = "0.66";
    std::string g = "1";
    std::string r = "1";
    std::size_t n = 200;
    std::vector<std::string> policies{"all"};
    bool reset = false;
    std::size_t trials = 0;
    std::uint64_t seed = 1;
    std::size_t dp_cap = kDefaultDpCap;
    std::string out;
    std::string format = "csv";
    bool split = false;
};

Rational numeric_flag(const std::string &text, const char *flag) {
    try {
        return parse_rational(text);
    } catch (const ValidationError &e) {
        throw ValidationError(std::string(flag) + ": " + e.what());
    }
}

struct Curve {
    std::string name;
    RewardCurve exact;
    std::optional<McCurve> mc;
};

Curve simulate_policy(const std::string &spec, const TrustParams &params, const SimulateConfig &config) {
    std::optional<Policy> policy;
    if (spec == "all") {
        policy = Policy::all();
    } else if (spec == "optimal") {
        policy = dp_optimal(params, config.n, config.dp_cap).policy;
    } else if (spec.rfind("every-k:", 0) == 0) {
        const std::string k_text = spec.substr(8);
        std::size_t used = 0;
        unsigned long k = 0;
        try {
            k = std::stoul(k_text, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (k_text.empty() || used != k_text.size() || k < 1) {
            throw ValidationError("--policy: every-k needs a positive integer, got '" + spec + "'");
        }
        policy = Policy::every_k(k);
    } else {
        throw ValidationError("--policy: expected optimal, all or every-k:<k>, got '" + spec + "'");
    }
    Curve c{policy->name(), evaluate_policy(params, *policy, config.n), std::nullopt};
    if (config.trials > 0) {
        c.mc = mc_simulate(params, *policy, config.n, config.trials, config.seed);
    }
    return c;
}

CurveTable curve_table(const std::vector<Curve> &curves, bool has_mc) {
    CurveTable table;
    table.has_mc = has_mc;
    for (const auto &c : curves) {
        for (std::size_t t = 1; t <= c.exact.steps(); ++t) {
            CurveRow row{t, c.name, c.exact.at(t), 0.0, std::nullopt, std::nullopt};
            if (c.mc) {
                row.mc_mean = c.mc->mean[t - 1];
                row.mc_std_error = c.mc->std_error[t - 1];
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

std::string render_curves(const std::vector<Curve> &curves, const SimulateConfig &config) {
    if (config.format == "csv") {
        std::ostringstream os;
        write_curve_csv(os, curve_table(curves, config.trials > 0));
        return os.str();
    }
    json doc;
    doc["policies"] = json::array();
    for (const auto &c : curves) {
        json item;
        item["policy"] = c.name;
        item["expected_cumulative_reward"] = c.exact.values;
        if (c.mc) {
            item["mc_mean"] = c.mc->mean;
            item["mc_stderr"] = c.mc->std_error;
            item["trials"] = c.mc->trials;
        }
        doc["policies"].push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

std::string split_path(const std::string &base, const std::string &policy) {
    std::string tag;
    for (char c : policy) {
        if (c != ':') {
            tag += c;
        }
    }
    const std::filesystem::path p(base);
    return (p.parent_path() / (p.stem().string() + "_" + tag + p.extension().string())).string();
}

int cmd_simulate(const SimulateConfig &config, std::ostream &out) {
    check_format(config.format);
    TrustParams params;
    params.p0 = numeric_flag(config.p0, "--p0");
    params.loss = numeric_flag(config.l, "--l");
    params.recovery = numeric_flag(config.g, "--g");
    params.reward = numeric_flag(config.r, "--r");
    params.reset = config.reset;
    params.validate();
    if (config.n < 1) {
        throw ValidationError("--n must be >= 1");
    }
    if (config.n > kMaxSteps) {
        throw CapacityError("--n " + std::to_string(config.n) + " exceeds the step cap " + std::to_string(kMaxSteps));
    }
    if (config.dp_cap < 1) {
        throw ValidationError("--dp-cap must be >= 1");
    }
    if (config.policies.empty()) {
        throw ValidationError("--policy: at least one policy is required");
    }
    if (config.split && config.out.empty()) {
        throw ValidationError("--split needs --out to name the files");
    }
    std::vector<Curve> curves;
    for (const auto &p : config.policies) {
        curves.push_back(simulate_policy(p, params, config));
    }
    if (config.split) {
        for (const auto &c : curves) {
            emit(render_curves({c}, config), split_path(config.out, c.name), out);
        }
    } else {
        emit(render_curves(curves, config), config.out, out);
    }
    return kExitOk;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const std::string &suite, const VerifyOptions &options, std::ostream &out) {
    const auto reports = run_suite(suite, options);
    bool all = true;
    std::size_t passed = 0, total = 0;
    for (const auto &report : reports) {
        for (const auto &check : report.checks) {
            out << (check.passed ? "PASS" : "FAIL") << "  " << report.suite << ": " << check.name;
            if (!check.detail.empty()) {
                out << "  [" << check.detail << "]";
            }
            out << '\n';
            passed += check.passed ? 1 : 0;
            ++total;
        }
        all = all && report.passed();
    }
    out << passed << "/" << total << " checks passed\n";
    return all ? kExitOk : kExitFailedChecks;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Fair prices for recommendations and trust-decay simulation", "fairprice"};
    app.require_subcommand(1);

    PriceConfig price;
    auto *price_cmd = app.add_subcommand("price", "Compute fair payoffs and prices for a game file");
    price_cmd->add_option("--game", price.game, "Game or argument-game JSON file")->required();
    price_cmd->add_option("--method", price.methods, "shapley, anon-shapley, nash, core-check, core-nonempty")
        ->delimiter(',');
    price_cmd->add_option("--payment", price.payment, "per-recommendation or per-sale");
    price_cmd->add_option("--payoff", price.payoff, "Payoff vector for core-check, e.g. s=8,r=0");
    price_cmd->add_option("--out", price.out, "Output file (default stdout)");
    price_cmd->add_option("--format", price.format, "csv or json");

    SimulateConfig sim;
    auto *sim_cmd = app.add_subcommand("simulate", "Expected reward curves of recommending policies");
    sim_cmd->add_option("--p0", sim.p0, "Initial success probability");
    sim_cmd->add_option("--l", sim.l, "Loss rate");
    sim_cmd->add_option("--g", sim.g, "Recovery factor");
    sim_cmd->add_option("--r", sim.r, "Reward per success");
    sim_cmd->add_option("--n", sim.n, "Number of items");
    sim_cmd->add_option("--policy", sim.policies, "optimal, all, every-k:<k>")->delimiter(',');
    sim_cmd->add_flag("--reset,!--no-reset", sim.reset, "Restore trust to p0 after a success");
    sim_cmd->add_option("--trials,--mc", sim.trials, "Monte Carlo trials (0 = none)");
    sim_cmd->add_option("--seed", sim.seed, "Monte Carlo seed");
    sim_cmd->add_option("--dp-cap", sim.dp_cap, "Largest horizon for the optimal policy");
    sim_cmd->add_option("--out", sim.out, "Output file (default stdout)");
    sim_cmd->add_option("--format", sim.format, "csv or json");
    sim_cmd->add_flag("--split", sim.split, "One file per policy, named after --out");

    std::string suite = "all";
    VerifyOptions verify;
    auto *verify_cmd = app.add_subcommand("verify", "Run a self-check suite");
    verify_cmd->add_option("--suite", suite, "Suite name or all");
    verify_cmd->add_option("--seed", verify.seed, "Seed for random games");
    verify_cmd->add_option("--tol", verify.tol, "Truncation tolerance for series");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (price_cmd->parsed()) {
            return cmd_price(price, out, err);
        }
        if (sim_cmd->parsed()) {
            return cmd_simulate(sim, out);
        }
        return cmd_verify(suite, verify, out);
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}

}  // namespace fairprice
