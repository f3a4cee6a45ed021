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

StateIndex::StateIndex(const TrustModel &model, std::uint32_t max_a, std::uint32_t max_b) {
    if (max_a > model.max_failures()) {
        throw ValidationError("state index exceeds the model's failure horizon");
    }
    offsets_.reserve(std::size_t{max_a} + 2);
    offsets_.push_back(0);
    for (std::uint32_t a = 0; a <= max_a; ++a) {
        std::uint64_t width = std::uint64_t{max_b} + 1;
        if (a == 0) {
            width = 1;
        } else if (const auto clamp = model.clamp_exponent(a)) {
            width = std::min(width, *clamp);
        }
        offsets_.push_back(offsets_.back() + static_cast<std::size_t>(width));
    }
}

DecisionTable::DecisionTable(StateIndex index, std::size_t horizon)
    : index_(std::move(index)), horizon_(horizon), bits_(horizon * index_.size(), false) {}

bool DecisionTable::recommend(std::size_t remaining, TrustState s) const {
    if (remaining < 1 || remaining > horizon_ || !index_.contains(s)) {
        throw ValidationError("decision table lookup outside its horizon or state range");
    }
    return bits_[(remaining - 1) * index_.size() + index_(s)];
}

void DecisionTable::set(std::size_t remaining, TrustState s, bool recommend) {
    bits_[(remaining - 1) * index_.size() + index_(s)] = recommend;
}

Policy Policy::all() {
    return Policy(PolicyKind::all, 1, nullptr);
}

Policy Policy::every_k(std::size_t k) {
    if (k < 1) {
        throw ValidationError("every-k policy needs k >= 1");
    }
    return Policy(PolicyKind::every_k, k, nullptr);
}

Policy Policy::optimal(std::shared_ptr<const DecisionTable> table) {
    if (!table) {
        throw ValidationError("optimal policy needs a decision table");
    }
    return Policy(PolicyKind::optimal, 0, std::move(table));
}

std::string Policy::name() const {
    switch (kind_) {
        case PolicyKind::all:
            return "all";
        case PolicyKind::every_k:
            return "every-k:" + std::to_string(k_);
        case PolicyKind::optimal:
            return "optimal";
    }
    return "unknown";
}

bool Policy::recommend(std::size_t step, TrustState s) const {
    switch (kind_) {
        case PolicyKind::all:
            return true;
        case PolicyKind::every_k:
            return step % k_ == 0;
        case PolicyKind::optimal:
            if (step < 1 || step > table_->horizon()) {
                throw ValidationError("step outside the optimal policy's horizon");
            }
            return table_->recommend(table_->horizon() - step + 1, s);
    }
    return false;
}

OptimalPlan dp_optimal(const TrustParams &params, std::size_t n, std::size_t cap) {
    if (n < 1) {
        throw ValidationError("horizon n must be >= 1");
    }
    if (n > cap) {
        throw CapacityError("horizon n = " + std::to_string(n) + " exceeds the DP cap of " +
                            std::to_string(cap));
    }
    const auto horizon = static_cast<std::uint32_t>(n);
    const TrustModel model(params, horizon);
    StateIndex index(model, horizon, horizon);
    auto table = std::make_shared<DecisionTable>(index, n);

    std::vector<double> previous(index.size(), 0.0);
    std::vector<double> current(index.size(), 0.0);
    RewardCurve values;
    values.values.reserve(n);
    const double r = model.reward();

    // With t items left the process has consumed n - t steps, so only states with
    // a + b <= n - t are reachable from p0.
    for (std::size_t t = 1; t <= n; ++t) {
        const auto depth = static_cast<std::uint32_t>(n - t);
        for (std::uint32_t a = 0; a <= depth; ++a) {
            const std::uint32_t b_end = std::min(index.width(a), depth - a + 1);
            for (std::uint32_t b = 0; b < b_end; ++b) {
                const TrustState s{a, b};
                const double p = model.probability(s);
                const double skip_value = previous[index(model.skip(s))];
                const double recommend_value =
                    p * (r + previous[index(model.success(s))]) + (1.0 - p) * previous[index(model.fail(s))];
                const bool recommend = recommend_value > skip_value;
                current[index(s)] = recommend ? recommend_value : skip_value;
                table->set(t, s, recommend);
            }
        }
        values.values.push_back(current[index(TrustState{})]);
        std::swap(previous, current);
    }
    return OptimalPlan{std::move(values), Policy::optimal(std::move(table))};
}

}  // namespace fairprice
