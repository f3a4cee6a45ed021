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

// JSON game specifications.
//
// Scenario games:
//   {"players": ["s", "r1", "r2"], "scenario": "linear", "p": 0.5, "delta": 1, "q": [0.2, 0.1]}
//   {"players": [...], "scenario": "threshold", "p": "1/10", "delta": 10, "k": 2, "q": 0.4}
//   {"players": [...], "scenario": "general", "p": 0.5, "delta": 2, "f": {"r1": 0.3, "r1,r2": 0.4}}
// The first player is the seller; f is keyed by comma-joined sorted recommender ids.
// An optional "payoff" object (id -> number) names a vector for Core checks.
//
// Argument games:
//   {"arguments": ["a", "b", "c"], "worths": {"a,b": 1, "a,b,c": 1},
//    "ownership": {"r1": ["a"], "r2": ["b", "c"]}}
//
// Numbers may be JSON numbers or strings holding "a/b" or a decimal; decimals are read
// exactly from their source text.

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "fairprice/fair_division.hpp"
#include "fairprice/game.hpp"

namespace fairprice {

/// Parses JSON keeping every non-integer number as its source text (a JSON string).
nlohmann::json parse_json_exact(std::string_view text);

/// Reads an exact rational from a JSON integer or a numeric string; `field` names it in errors.
Rational rational_from_json(const nlohmann::json &value, std::string_view field);

struct ScenarioSpec {
    Game game;
    std::optional<PayoffVector> payoff;
};

ScenarioSpec scenario_from_json(const nlohmann::json &doc, std::size_t max_players = kDefaultMaxPlayers);
ArgumentGame argument_game_from_json(const nlohmann::json &doc, std::size_t max_arguments = kDefaultMaxPlayers);

using LoadedSpec = std::variant<ScenarioSpec, ArgumentGame>;

/// Dispatches on the presence of "arguments".
LoadedSpec load_spec(std::string_view text, std::size_t max_players = kDefaultMaxPlayers);
LoadedSpec load_spec_file(const std::string &path, std::size_t max_players = kDefaultMaxPlayers);

}  // namespace fairprice
