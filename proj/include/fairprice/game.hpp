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

// Coalitional games with transferable payoff for the one-seller, many-recommender
// pricing setting, plus the three scenario builders (linear, threshold, general).

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairprice/rational.hpp"

namespace fairprice {

inline constexpr std::size_t kDefaultMaxPlayers = 16;
/// Upper limit for any override of the player cap; 2^20 exact worths is the most we store.
inline constexpr std::size_t kHardMaxPlayers = 20;

enum class PlayerKind { seller, recommender };

struct Player {
    std::string id;
    PlayerKind kind = PlayerKind::recommender;
};

/// Subset of a game's players as a bitmask over player indices. Bit 0 is the seller.
class Coalition {
   public:
    using Mask = std::uint32_t;

    constexpr Coalition() = default;
    constexpr explicit Coalition(Mask mask) : mask_(mask) {}
    static Coalition of(std::initializer_list<std::size_t> members);
    static constexpr Coalition grand(std::size_t n) { return Coalition((Mask{1} << n) - 1); }

    constexpr Mask mask() const { return mask_; }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr bool contains(std::size_t i) const { return (mask_ >> i) & 1U; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
    constexpr Coalition with(std::size_t i) const { return Coalition(mask_ | (Mask{1} << i)); }
    constexpr Coalition without(std::size_t i) const { return Coalition(mask_ & ~(Mask{1} << i)); }
    constexpr bool subset_of(Coalition other) const { return (mask_ & ~other.mask_) == 0; }
    std::vector<std::size_t> members() const;

    constexpr auto operator<=>(const Coalition &) const = default;

   private:
    Mask mask_ = 0;
};

/// Orders coalitions by their ascending member-index sequences, e.g. {0,1} < {0,2} < {1}.
bool lexicographically_less(Coalition a, Coalition b);

enum class Scenario { linear, threshold, general, custom };

std::string_view scenario_name(Scenario s);

/// Parameters a scenario game was built from.
struct ScenarioMeta {
    Scenario kind = Scenario::custom;
    Rational p;
    Rational delta;
    std::vector<Rational> q;  // linear: one increment per recommender
    std::size_t k = 0;        // threshold
    Rational threshold_q;     // threshold
    std::map<Coalition, Rational> f;  // general: sparse, seller-containing coalitions only

    /// f(S) for a seller-containing coalition S under this scenario.
    Rational increment(Coalition s, std::size_t num_players) const;
};

struct GameOptions {
    /// Player ids, seller first. Empty means "s", "r1", ..., "rn".
    std::vector<std::string> ids;
    std::size_t max_players = kDefaultMaxPlayers;
};

class Game {
   public:
    /// A game from an explicit worth table indexed by coalition mask. Player 0 must be
    /// the seller; the table must have 2^n entries satisfying the seller/zero invariants.
    static Game from_worths(std::vector<Player> players, std::vector<Rational> worths,
                            std::size_t max_players = kDefaultMaxPlayers);

    const std::vector<Player> &players() const { return players_; }
    std::size_t size() const { return players_.size(); }
    std::size_t num_recommenders() const { return players_.size() - 1; }
    Coalition grand() const { return Coalition::grand(players_.size()); }

    const Rational &worth(Coalition s) const;
    Rational worth(std::span<const std::string> ids) const;
    std::span<const Rational> worth_table() const { return worths_; }

    /// Index of a player id; throws ValidationError for unknown ids.
    std::size_t index_of(std::string_view id) const;
    std::vector<std::string> ids() const;

    const std::optional<ScenarioMeta> &scenario() const { return meta_; }
    /// p + f(N), the sale probability when everybody recommends. Needs scenario metadata.
    Rational sale_probability() const;

   private:
    friend class GameFactory;
    Game() = default;

    std::vector<Player> players_;
    std::vector<Rational> worths_;
    std::optional<ScenarioMeta> meta_;
};

/// Linear scenario: sale probability p + sum of q_i over recommending r_i.
Game build_linear(const Rational &p, const Rational &delta, std::span<const Rational> q,
                  const GameOptions &options = {});

/// Threshold scenario: p + q once at least k of the n recommenders recommend, p otherwise.
Game build_threshold(const Rational &p, const Rational &delta, std::size_t n, std::size_t k,
                     const Rational &q, const GameOptions &options = {});

/// General scenario with a sparse f table; unlisted seller-containing coalitions have f = 0.
Game build_general(const Rational &p, const Rational &delta, std::size_t n,
                   const std::map<Coalition, Rational> &f, const GameOptions &options = {});

/// Rebuilds a scenario game from (possibly misreported) metadata using the same players.
Game build_from_meta(const ScenarioMeta &meta, const GameOptions &options);

/// Expected payoff per player, aligned with the owning game's player order.
struct PayoffVector {
    std::vector<std::string> ids;
    std::vector<Rational> values;

    std::size_t size() const { return values.size(); }
    const Rational &at(std::string_view id) const;
    Rational total() const;
};

/// sum_i x_i == v(N), with ids matching the game.
bool is_feasible(const PayoffVector &x, const Game &game);

}  // namespace fairprice
