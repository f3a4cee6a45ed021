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

#include "fairprice/game.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fairprice/errors.hpp"

namespace fairprice {

Coalition Coalition::of(std::initializer_list<std::size_t> members) {
    Mask mask = 0;
    for (std::size_t i : members) {
        mask |= Mask{1} << i;
    }
    return Coalition(mask);
}

std::vector<std::size_t> Coalition::members() const {
    std::vector<std::size_t> out;
    for (Mask m = mask_; m != 0; m &= m - 1) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    }
    return out;
}

bool lexicographically_less(Coalition a, Coalition b) {
    auto ma = a.members();
    auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::string_view scenario_name(Scenario s) {
    switch (s) {
        case Scenario::linear:
            return "linear";
        case Scenario::threshold:
            return "threshold";
        case Scenario::general:
            return "general";
        case Scenario::custom:
            return "custom";
    }
    return "custom";
}

Rational ScenarioMeta::increment(Coalition s, std::size_t num_players) const {
    switch (kind) {
        case Scenario::linear: {
            Rational sum = 0;
            for (std::size_t i = 1; i < num_players; ++i) {
                if (s.contains(i)) {
                    sum += q[i - 1];
                }
            }
            return sum;
        }
        case Scenario::threshold:
            return s.size() - 1 >= k ? threshold_q : Rational(0);
        case Scenario::general: {
            auto it = f.find(s);
            return it == f.end() ? Rational(0) : it->second;
        }
        case Scenario::custom:
            break;
    }
    throw ValidationError("custom games carry no scenario increment");
}

class GameFactory {
   public:
    static Game make(std::vector<Player> players, std::vector<Rational> worths,
                     std::optional<ScenarioMeta> meta) {
        Game g;
        g.players_ = std::move(players);
        g.worths_ = std::move(worths);
        g.meta_ = std::move(meta);
        return g;
    }
};

namespace {

void check_player_count(std::size_t n, std::size_t max_players) {
    if (max_players > kHardMaxPlayers) {
        throw ValidationError("player cap " + std::to_string(max_players) + " exceeds hard limit " +
                              std::to_string(kHardMaxPlayers));
    }
    if (n == 0) {
        throw ValidationError("a game needs at least the seller");
    }
    if (n > max_players) {
        throw CapacityError("game has " + std::to_string(n) + " players; limit is " +
                            std::to_string(max_players));
    }
}

void validate_players(const std::vector<Player> &players) {
    std::set<std::string> seen;
    std::size_t sellers = 0;
    for (std::size_t i = 0; i < players.size(); ++i) {
        const Player &pl = players[i];
        if (pl.id.empty()) {
            throw ValidationError("empty player id");
        }
        if (!seen.insert(pl.id).second) {
            throw ValidationError("duplicate player id '" + pl.id + "'");
        }
        if (pl.kind == PlayerKind::seller) {
            ++sellers;
            if (i != 0) {
                throw ValidationError("the seller must be the first player");
            }
        }
    }
    if (sellers != 1) {
        throw ValidationError("a game needs exactly one seller, got " + std::to_string(sellers));
    }
}

std::vector<Player> make_players(std::size_t n, const GameOptions &options) {
    std::vector<Player> players;
    if (options.ids.empty()) {
        players.push_back({"s", PlayerKind::seller});
        for (std::size_t i = 1; i <= n; ++i) {
            players.push_back({"r" + std::to_string(i), PlayerKind::recommender});
        }
    } else {
        if (options.ids.size() != n + 1) {
            throw ValidationError("expected " + std::to_string(n + 1) + " player ids, got " +
                                  std::to_string(options.ids.size()));
        }
        for (std::size_t i = 0; i < options.ids.size(); ++i) {
            players.push_back({options.ids[i], i == 0 ? PlayerKind::seller : PlayerKind::recommender});
        }
    }
    check_player_count(players.size(), options.max_players);
    validate_players(players);
    return players;
}

void check_probability(const Rational &p) {
    if (p < 0 || p > 1) {
        throw ValidationError("probability p = " + to_exact_string(p) + " outside [0,1]");
    }
}

void check_margin(const Rational &delta) {
    if (delta < 0) {
        throw ValidationError("margin delta = " + to_exact_string(delta) + " is negative");
    }
}

Game assemble(std::vector<Player> players, ScenarioMeta meta) {
    const std::size_t n = players.size();
    std::vector<Rational> worths(std::size_t{1} << n);
    for (Coalition::Mask m = 0; m < worths.size(); ++m) {
        Coalition s(m);
        if (s.contains(0)) {
            worths[m] = (meta.p + meta.increment(s, n)) * meta.delta;
        }
    }
    return GameFactory::make(std::move(players), std::move(worths), std::move(meta));
}

}  // namespace

Game Game::from_worths(std::vector<Player> players, std::vector<Rational> worths,
                       std::size_t max_players) {
    check_player_count(players.size(), max_players);
    validate_players(players);
    if (worths.size() != (std::size_t{1} << players.size())) {
        throw ValidationError("worth table needs 2^n entries");
    }
    for (Coalition::Mask m = 0; m < worths.size(); ++m) {
        if (worths[m] < 0) {
            throw ValidationError("negative worth for coalition mask " + std::to_string(m));
        }
        if (!Coalition(m).contains(0) && worths[m] != 0) {
            throw ValidationError("coalitions without the seller must have worth 0");
        }
    }
    return GameFactory::make(std::move(players), std::move(worths), std::nullopt);
}

const Rational &Game::worth(Coalition s) const {
    if (!s.subset_of(grand())) {
        throw ValidationError("coalition references players outside the game");
    }
    return worths_[s.mask()];
}

Rational Game::worth(std::span<const std::string> ids) const {
    Coalition s;
    for (const auto &id : ids) {
        s = s.with(index_of(id));
    }
    return worths_[s.mask()];
}

std::size_t Game::index_of(std::string_view id) const {
    for (std::size_t i = 0; i < players_.size(); ++i) {
        if (players_[i].id == id) {
            return i;
        }
    }
    throw ValidationError("unknown player id '" + std::string(id) + "'");
}

std::vector<std::string> Game::ids() const {
    std::vector<std::string> out;
    out.reserve(players_.size());
    for (const auto &pl : players_) {
        out.push_back(pl.id);
    }
    return out;
}

Rational Game::sale_probability() const {
    if (!meta_) {
        throw ValidationError("sale probability needs a scenario game (p and f are unknown)");
    }
    return meta_->p + meta_->increment(grand(), size());
}

Game build_linear(const Rational &p, const Rational &delta, std::span<const Rational> q,
                  const GameOptions &options) {
    check_probability(p);
    check_margin(delta);
    Rational total = p;
    for (const auto &qi : q) {
        if (qi < 0) {
            throw ValidationError("negative increment q_i = " + to_exact_string(qi));
        }
        total += qi;
    }
    if (total > 1) {
        throw ValidationError("p + sum(q) = " + to_exact_string(total) + " exceeds 1");
    }
    ScenarioMeta meta;
    meta.kind = Scenario::linear;
    meta.p = p;
    meta.delta = delta;
    meta.q.assign(q.begin(), q.end());
    return assemble(make_players(q.size(), options), std::move(meta));
}

Game build_threshold(const Rational &p, const Rational &delta, std::size_t n, std::size_t k,
                     const Rational &q, const GameOptions &options) {
    check_probability(p);
    check_margin(delta);
    if (k < 1 || k > n) {
        throw ValidationError("threshold k = " + std::to_string(k) + " outside [1, n = " +
                              std::to_string(n) + "]");
    }
    if (q < 0 || p + q > 1) {
        throw ValidationError("threshold increment q = " + to_exact_string(q) + " outside [0, 1 - p]");
    }
    ScenarioMeta meta;
    meta.kind = Scenario::threshold;
    meta.p = p;
    meta.delta = delta;
    meta.k = k;
    meta.threshold_q = q;
    return assemble(make_players(n, options), std::move(meta));
}

Game build_general(const Rational &p, const Rational &delta, std::size_t n,
                   const std::map<Coalition, Rational> &f, const GameOptions &options) {
    check_probability(p);
    check_margin(delta);
    auto players = make_players(n, options);
    const Coalition all = Coalition::grand(players.size());
    ScenarioMeta meta;
    meta.kind = Scenario::general;
    meta.p = p;
    meta.delta = delta;
    for (const auto &[s, value] : f) {
        if (!s.subset_of(all)) {
            throw ValidationError("f entry references players outside the game");
        }
        if (!s.contains(0)) {
            throw ValidationError("f entries must contain the seller");
        }
        if (s == Coalition::of({0}) && value != 0) {
            throw ValidationError("f({s}) must be 0");
        }
        if (value < 0 || p + value > 1) {
            throw ValidationError("f value " + to_exact_string(value) + " outside [0, 1 - p]");
        }
        if (value != 0) {
            meta.f.emplace(s, value);
        }
    }
    return assemble(std::move(players), std::move(meta));
}

Game build_from_meta(const ScenarioMeta &meta, const GameOptions &options) {
    const std::size_t n = options.ids.empty() ? 0 : options.ids.size() - 1;
    switch (meta.kind) {
        case Scenario::linear:
            return build_linear(meta.p, meta.delta, meta.q, options);
        case Scenario::threshold:
            return build_threshold(meta.p, meta.delta, n, meta.k, meta.threshold_q, options);
        case Scenario::general:
            return build_general(meta.p, meta.delta, n, meta.f, options);
        case Scenario::custom:
            break;
    }
    throw ValidationError("cannot rebuild a custom game from metadata");
}

const Rational &PayoffVector::at(std::string_view id) const {
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] == id) {
            return values[i];
        }
    }
    throw ValidationError("payoff vector has no entry for '" + std::string(id) + "'");
}

Rational PayoffVector::total() const {
    return std::accumulate(values.begin(), values.end(), Rational(0));
}

bool is_feasible(const PayoffVector &x, const Game &game) {
    return x.ids == game.ids() && x.total() == game.worth(game.grand());
}

}  // namespace fairprice
