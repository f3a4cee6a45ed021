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

// Seeded generators of random scenario games with small-denominator rational parameters.
// Used by the verify suites and by property tests.

#include <cstdint>
#include <random>

#include "fairprice/game.hpp"

namespace fairprice {

class GameSampler {
   public:
    explicit GameSampler(std::uint64_t seed) : gen_(seed) {}

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return gen_() % bound; }
    /// Uniform in {0, 1/den, ..., hi} (hi rounded down to the grid).
    Rational fraction(const Rational &hi, long den = 20);
    Rational margin();

    Game general(std::size_t recommenders);
    Game linear(std::size_t recommenders);
    Game threshold(std::size_t recommenders);
    /// One of the three scenarios, uniformly.
    Game any(std::size_t recommenders);

   private:
    std::mt19937_64 gen_;
};

}  // namespace fairprice
