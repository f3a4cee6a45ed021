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

#include <algorithm>

#include "fairprice/errors.hpp"
#include "fairprice/policy.hpp"

namespace fairprice {

namespace {

// Probability mass over states (a, b) for one value of a, stored for the contiguous range of
// b that has been touched. Heuristics keep one or two live cells per row.
struct MassRow {
    std::uint32_t first = 0;
    std::vector<double> cells;

    void add(std::uint32_t b, double m) {
        if (cells.empty()) {
            first = b;
            cells.assign(1, m);
        } else if (b < first) {
            cells.insert(cells.begin(), first - b, 0.0);
            first = b;
            cells.front() += m;
        } else {
            if (b - first >= cells.size()) {
                cells.resize(b - first + 1, 0.0);
            }
            cells[b - first] += m;
        }
    }
};

}  // namespace

RewardCurve evaluate_policy(const TrustParams &params, const Policy &policy, std::size_t n) {
    if (n < 1) {
        throw ValidationError("horizon n must be >= 1");
    }
    const TrustModel model(params, static_cast<std::uint32_t>(n));
    std::vector<MassRow> mass(1);
    mass[0].add(0, 1.0);
    std::vector<MassRow> next;
    const auto put = [&next](TrustState s, double m) {
        if (next.size() <= s.a) {
            next.resize(s.a + 1);
        }
        next[s.a].add(s.b, m);
    };

    RewardCurve curve;
    curve.values.reserve(n);
    double cumulative = 0.0;
    for (std::size_t step = 1; step <= n; ++step) {
        for (auto &row : next) {
            row.cells.clear();
        }
        double gained = 0.0;
        for (std::uint32_t a = 0; a < mass.size(); ++a) {
            const auto &row = mass[a];
            for (std::uint32_t i = 0; i < row.cells.size(); ++i) {
                const double m = row.cells[i];
                if (m == 0.0) {
                    continue;
                }
                const TrustState s{a, row.first + i};
                if (!policy.recommend(step, s)) {
                    put(model.skip(s), m);
                    continue;
                }
                const double p = model.probability(s);
                gained += m * p;
                put(model.success(s), m * p);
                put(model.fail(s), m * (1.0 - p));
            }
        }
        cumulative += gained * model.reward();
        curve.values.push_back(cumulative);
        std::swap(mass, next);
    }
    return curve;
}

RewardCurve heuristic_reward(const TrustParams &params, std::size_t k, std::size_t n) {
    return evaluate_policy(params, Policy::every_k(k), n);
}

Rational heuristic_closed_form(const TrustParams &params, std::size_t k, std::size_t n) {
    params.validate();
    const auto bound = psi(params.loss, params.recovery);
    if (!bound || k <= *bound) {
        throw ValidationError("the linear closed form needs k > psi(l, g)");
    }
    return Rational(static_cast<long>(n / k)) * params.p0 * params.reward;
}

}  // namespace fairprice
