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

#include "fairprice/shapley_kernels.hpp"

#include <cstdint>

#include "fairprice/errors.hpp"

namespace fairprice::kernels {

namespace {

void check_table(std::span<const Rational> worths, std::size_t n) {
    if (n >= 32 || worths.size() != (std::size_t{1} << n)) {
        throw ValidationError("worth table size does not match 2^n");
    }
}

std::vector<Rational> size_weights(std::size_t n) {
    std::vector<Rational> w(n);
    const Rational n_fact = factorial(static_cast<unsigned>(n));
    for (std::size_t s = 0; s < n; ++s) {
        w[s] = factorial(static_cast<unsigned>(s)) * factorial(static_cast<unsigned>(n - 1 - s)) / n_fact;
    }
    return w;
}

Rational value_of(std::span<const Rational> worths, std::size_t n, std::size_t player,
                  const std::vector<Rational> &weights) {
    // Marginal contributions are summed per coalition size first so each weight is applied once.
    std::vector<Rational> by_size(n);
    const std::uint32_t bit = std::uint32_t{1} << player;
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t m = 0; m < limit; ++m) {
        if (m & bit) {
            continue;
        }
        const Rational &with = worths[m | bit];
        const Rational &without = worths[m];
        if (with != without) {
            by_size[static_cast<std::size_t>(__builtin_popcount(m))] += with - without;
        }
    }
    Rational phi = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (by_size[s] != 0) {
            phi += weights[s] * by_size[s];
        }
    }
    return phi;
}

}  // namespace

std::vector<Rational> shapley_serial(std::span<const Rational> worths, std::size_t n) {
    check_table(worths, n);
    const auto weights = size_weights(n);
    std::vector<Rational> phi(n);
    for (std::size_t i = 0; i < n; ++i) {
        phi[i] = value_of(worths, n, i, weights);
    }
    return phi;
}

std::vector<Rational> shapley_parallel(std::span<const Rational> worths, std::size_t n) {
    check_table(worths, n);
    const auto weights = size_weights(n);
    std::vector<Rational> phi(n);
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
        phi[static_cast<std::size_t>(i)] = value_of(worths, n, static_cast<std::size_t>(i), weights);
    }
    return phi;
}

}  // namespace fairprice::kernels
