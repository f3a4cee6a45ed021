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

#include "fairprice/random_games.hpp"

#include <boost/multiprecision/integer.hpp>

namespace fairprice {

Rational GameSampler::fraction(const Rational &hi, long den) {
    if (hi <= 0) {
        return 0;
    }
    const BigInt steps = numerator(hi) * den / denominator(hi);
    const auto count = steps.convert_to<std::uint64_t>() + 1;
    return Rational(static_cast<long>(below(count)), den);
}

Rational GameSampler::margin() {
    return Rational(static_cast<long>(below(40) + 1), static_cast<long>(below(4) + 1));
}

Game GameSampler::general(std::size_t recommenders) {
    const Rational p = fraction(Rational(1, 2));
    const Rational delta = margin();
    std::map<Coalition, Rational> f;
    const Coalition::Mask limit = Coalition::Mask{1} << (recommenders + 1);
    for (Coalition::Mask m = 3; m < limit; m += 2) {
        f.emplace(Coalition(m), fraction(1 - p));
    }
    return build_general(p, delta, recommenders, f);
}

Game GameSampler::linear(std::size_t recommenders) {
    const Rational p = fraction(Rational(1, 2));
    Rational room = 1 - p;
    std::vector<Rational> q;
    for (std::size_t i = 0; i < recommenders; ++i) {
        q.push_back(fraction(room / static_cast<long>(recommenders - i)));
        room -= q.back();
    }
    return build_linear(p, margin(), q);
}

Game GameSampler::threshold(std::size_t recommenders) {
    const Rational p = fraction(Rational(1, 2));
    const std::size_t k = 1 + static_cast<std::size_t>(below(recommenders));
    return build_threshold(p, margin(), recommenders, k, fraction(1 - p));
}

Game GameSampler::any(std::size_t recommenders) {
    switch (below(3)) {
        case 0:
            return general(recommenders);
        case 1:
            return linear(recommenders);
        default:
            return threshold(recommenders);
    }
}

}  // namespace fairprice
