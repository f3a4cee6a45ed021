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

#include "fairprice/core_lp.hpp"
#include "fairprice/errors.hpp"

namespace fairprice {

namespace {

std::string coalition_label(const Game &game, Coalition s) {
    std::string out = "{";
    for (std::size_t i : s.members()) {
        if (out.size() > 1) {
            out += ",";
        }
        out += game.players()[i].id;
    }
    return out + "}";
}

}  // namespace

LinearSystem core_system(const Game &game) {
    LinearSystem sys(game.ids());
    const std::size_t n = game.size();
    const Coalition all = game.grand();

    LinearConstraint efficiency;
    efficiency.relation = Relation::equal;
    efficiency.rhs = game.worth(all);
    efficiency.label = "efficiency";
    for (std::size_t i = 0; i < n; ++i) {
        efficiency.terms.push_back({i, Rational(1)});
    }
    sys.add_constraint(std::move(efficiency));

    for (Coalition::Mask m = 1; m < all.mask(); ++m) {
        const Coalition s(m);
        LinearConstraint c;
        c.relation = Relation::greater_equal;
        c.rhs = game.worth(s);
        c.label = coalition_label(game, s);
        for (std::size_t i : s.members()) {
            c.terms.push_back({i, Rational(1)});
        }
        sys.add_constraint(std::move(c));
    }
    return sys;
}

CoreMembership core_contains(const Game &game, const PayoffVector &x) {
    if (x.ids != game.ids()) {
        throw ValidationError("payoff vector players do not match the game");
    }
    CoreMembership out;
    const Coalition all = game.grand();
    out.efficient = x.total() == game.worth(all);
    for (Coalition::Mask m = 1; m <= all.mask(); ++m) {
        const Coalition s(m);
        Rational share = 0;
        for (std::size_t i : s.members()) {
            share += x.values[i];
        }
        if (game.worth(s) > share && (!out.witness || lexicographically_less(s, *out.witness))) {
            out.witness = s;
        }
    }
    out.in_core = out.efficient && !out.witness;
    return out;
}

CoreNonemptiness core_is_nonempty(const Game &game) {
    if (game.size() > kHardMaxPlayers) {
        throw CapacityError("too many players for the Core linear system");
    }
    const auto sys = core_system(game);
    auto result = lp_feasible(sys);
    CoreNonemptiness out;
    out.nonempty = result.feasible;
    if (result.feasible) {
        out.point = PayoffVector{game.ids(), std::move(result.point)};
    } else {
        out.farkas = std::move(result.farkas);
    }
    return out;
}

}  // namespace fairprice
