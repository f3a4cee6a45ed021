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

#include "fairprice/spec_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "fairprice/errors.hpp"

namespace fairprice {

using nlohmann::json;

namespace {

/// DOM builder that stores floating-point literals as their raw text.
class ExactSax : public nlohmann::json_sax<json> {
   public:
    json result;

    bool null() override { return put(json(nullptr)); }
    bool boolean(bool v) override { return put(json(v)); }
    bool number_integer(number_integer_t v) override { return put(json(v)); }
    bool number_unsigned(number_unsigned_t v) override { return put(json(v)); }
    bool number_float(number_float_t, const string_t &raw) override { return put(json(raw)); }
    bool string(string_t &v) override { return put(json(v)); }
    bool binary(binary_t &) override { return put(json(nullptr)); }

    bool start_object(std::size_t) override {
        put(json::object());
        stack_.push_back(last_);
        return true;
    }
    bool key(string_t &k) override {
        key_ = k;
        return true;
    }
    bool end_object() override {
        stack_.pop_back();
        return true;
    }
    bool start_array(std::size_t) override {
        put(json::array());
        stack_.push_back(last_);
        return true;
    }
    bool end_array() override {
        stack_.pop_back();
        return true;
    }
    bool parse_error(std::size_t, const std::string &, const nlohmann::detail::exception &ex) override {
        throw ValidationError(std::string("malformed JSON: ") + ex.what());
    }

   private:
    bool put(json v) {
        if (stack_.empty()) {
            result = std::move(v);
            last_ = &result;
        } else if (stack_.back()->is_array()) {
            stack_.back()->push_back(std::move(v));
            last_ = &stack_.back()->back();
        } else {
            auto &slot = (*stack_.back())[key_];
            slot = std::move(v);
            last_ = &slot;
        }
        return true;
    }

    std::vector<json *> stack_;
    json *last_ = nullptr;
    std::string key_;
};

const json &require(const json &doc, std::string_view field) {
    auto it = doc.find(std::string(field));
    if (it == doc.end()) {
        throw ValidationError("field '" + std::string(field) + "': missing");
    }
    return *it;
}

std::vector<std::string> string_array(const json &value, std::string_view field) {
    if (!value.is_array()) {
        throw ValidationError("field '" + std::string(field) + "': expected an array of strings");
    }
    std::vector<std::string> out;
    for (const auto &item : value) {
        if (!item.is_string()) {
            throw ValidationError("field '" + std::string(field) + "': expected an array of strings");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::vector<std::string> split_key(const std::string &key) {
    std::vector<std::string> out;
    if (key.empty()) {
        return out;
    }
    std::string part;
    std::istringstream ss(key);
    while (std::getline(ss, part, ',')) {
        out.push_back(part);
    }
    if (key.back() == ',') {
        out.emplace_back();
    }
    return out;
}

std::size_t index_in(const std::vector<std::string> &ids, const std::string &id, std::string_view field) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] == id) {
            return i;
        }
    }
    throw ValidationError("field '" + std::string(field) + "': unknown id '" + id + "'");
}

std::size_t count_from_json(const json &value, std::string_view field) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw ValidationError("field '" + std::string(field) + "': expected a nonnegative integer");
    }
    return static_cast<std::size_t>(value.get<long long>());
}

}  // namespace

json parse_json_exact(std::string_view text) {
    ExactSax sax;
    json::sax_parse(text.begin(), text.end(), &sax);
    return std::move(sax.result);
}

Rational rational_from_json(const json &value, std::string_view field) {
    try {
        if (value.is_number_integer()) {
            return value.is_number_unsigned() ? Rational(value.get<unsigned long long>())
                                              : Rational(value.get<long long>());
        }
        if (value.is_string()) {
            return parse_rational(value.get<std::string>());
        }
    } catch (const ValidationError &e) {
        throw ValidationError("field '" + std::string(field) + "': " + e.what());
    }
    throw ValidationError("field '" + std::string(field) + "': expected a number");
}

ScenarioSpec scenario_from_json(const json &doc, std::size_t max_players) {
    if (!doc.is_object()) {
        throw ValidationError("game specification must be a JSON object");
    }
    GameOptions options;
    options.ids = string_array(require(doc, "players"), "players");
    options.max_players = max_players;
    if (options.ids.empty()) {
        throw ValidationError("field 'players': needs at least the seller");
    }
    const std::size_t n = options.ids.size() - 1;
    const auto &scenario = require(doc, "scenario");
    if (!scenario.is_string()) {
        throw ValidationError("field 'scenario': expected a string");
    }
    const std::string kind = scenario.get<std::string>();
    const Rational p = rational_from_json(require(doc, "p"), "p");
    const Rational delta = rational_from_json(require(doc, "delta"), "delta");

    std::optional<Game> game;
    if (kind == "linear") {
        const auto &q = require(doc, "q");
        if (!q.is_array() || q.size() != n) {
            throw ValidationError("field 'q': expected an array with one entry per recommender");
        }
        std::vector<Rational> qs;
        for (std::size_t i = 0; i < q.size(); ++i) {
            qs.push_back(rational_from_json(q[i], "q[" + std::to_string(i) + "]"));
        }
        game = build_linear(p, delta, qs, options);
    } else if (kind == "threshold") {
        const std::size_t k = count_from_json(require(doc, "k"), "k");
        game = build_threshold(p, delta, n, k, rational_from_json(require(doc, "q"), "q"), options);
    } else if (kind == "general") {
        std::map<Coalition, Rational> f;
        auto it = doc.find("f");
        if (it != doc.end()) {
            if (!it->is_object()) {
                throw ValidationError("field 'f': expected an object");
            }
            for (const auto &[key, value] : it->items()) {
                const std::string field = "f[\"" + key + "\"]";
                Coalition s = Coalition::of({0});
                for (const auto &id : split_key(key)) {
                    const std::size_t i = index_in(options.ids, id, field);
                    if (i == 0) {
                        throw ValidationError("field '" + field + "': keys list recommenders only");
                    }
                    s = s.with(i);
                }
                if (!f.emplace(s, rational_from_json(value, field)).second) {
                    throw ValidationError("field '" + field + "': coalition listed twice");
                }
            }
        }
        game = build_general(p, delta, n, f, options);
    } else {
        throw ValidationError("field 'scenario': expected linear, threshold or general, got '" + kind + "'");
    }

    ScenarioSpec out{std::move(*game), std::nullopt};
    if (auto it = doc.find("payoff"); it != doc.end()) {
        if (!it->is_object()) {
            throw ValidationError("field 'payoff': expected an object");
        }
        PayoffVector x{options.ids, std::vector<Rational>(options.ids.size(), Rational(0))};
        for (const auto &[id, value] : it->items()) {
            x.values[index_in(options.ids, id, "payoff")] = rational_from_json(value, "payoff." + id);
        }
        out.payoff = std::move(x);
    }
    return out;
}

ArgumentGame argument_game_from_json(const json &doc, std::size_t max_arguments) {
    if (!doc.is_object()) {
        throw ValidationError("argument specification must be a JSON object");
    }
    auto arguments = string_array(require(doc, "arguments"), "arguments");
    std::vector<ArgumentGame::WorthEntry> worths;
    const auto &w = require(doc, "worths");
    if (!w.is_object()) {
        throw ValidationError("field 'worths': expected an object");
    }
    for (const auto &[key, value] : w.items()) {
        const std::string field = "worths[\"" + key + "\"]";
        auto members = split_key(key);
        for (const auto &a : members) {
            index_in(arguments, a, field);
        }
        worths.push_back({std::move(members), rational_from_json(value, field)});
    }
    std::vector<ArgumentGame::Ownership> ownership;
    const auto &own = require(doc, "ownership");
    if (!own.is_object()) {
        throw ValidationError("field 'ownership': expected an object");
    }
    for (const auto &[id, value] : own.items()) {
        ownership.push_back({id, string_array(value, "ownership." + id)});
    }
    return ArgumentGame(std::move(arguments), worths, std::move(ownership), max_arguments);
}

LoadedSpec load_spec(std::string_view text, std::size_t max_players) {
    const json doc = parse_json_exact(text);
    if (doc.is_object() && doc.contains("arguments")) {
        return argument_game_from_json(doc, max_players);
    }
    return scenario_from_json(doc, max_players);
}

LoadedSpec load_spec_file(const std::string &path, std::size_t max_players) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_spec(buffer.str(), max_players);
}

}  // namespace fairprice
