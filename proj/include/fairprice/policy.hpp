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

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fairprice/trust.hpp"

namespace fairprice {

/// Cumulative expected reward after steps 1..n; values[s - 1] belongs to step s.
struct RewardCurve {
    std::vector<double> values;

    std::size_t steps() const { return values.size(); }
    double at(std::size_t step) const { return values.at(step - 1); }
    double final_value() const { return values.empty() ? 0.0 : values.back(); }
};

/// Dense index over trust states (a, b) with a <= max_a and b below the clamp exponent of a
/// (capped at max_b + 1 entries per a).
class StateIndex {
   public:
    StateIndex(const TrustModel &model, std::uint32_t max_a, std::uint32_t max_b);

    std::size_t size() const { return offsets_.back(); }
    std::uint32_t width(std::uint32_t a) const {
        return static_cast<std::uint32_t>(offsets_[a + 1] - offsets_[a]);
    }
    bool contains(TrustState s) const { return s.a < offsets_.size() - 1 && s.b < width(s.a); }
    std::size_t operator()(TrustState s) const { return offsets_[s.a] + s.b; }
    std::uint32_t max_a() const { return static_cast<std::uint32_t>(offsets_.size() - 2); }

   private:
    std::vector<std::size_t> offsets_;
};

/// Optimal recommend/skip decisions keyed by (remaining steps, state).
class DecisionTable {
   public:
    DecisionTable(StateIndex index, std::size_t horizon);

    std::size_t horizon() const { return horizon_; }
    const StateIndex &index() const { return index_; }
    bool recommend(std::size_t remaining, TrustState s) const;
    void set(std::size_t remaining, TrustState s, bool recommend);

   private:
    StateIndex index_;
    std::size_t horizon_;
    std::vector<bool> bits_;
};

enum class PolicyKind { all, every_k, optimal };

/// Per-step recommend/skip rule; steps are 1-based.
class Policy {
   public:
    static Policy all();
    /// Recommends the last item of each block of k (steps k, 2k, ...), so n steps hold
    /// exactly floor(n/k) recommendations. Skips from p0 leave the state unchanged.
    static Policy every_k(std::size_t k);
    static Policy optimal(std::shared_ptr<const DecisionTable> table);

    PolicyKind kind() const { return kind_; }
    std::size_t k() const { return k_; }
    const DecisionTable *table() const { return table_.get(); }
    /// "all", "every-k:<k>", or "optimal".
    std::string name() const;

    bool recommend(std::size_t step, TrustState s) const;

   private:
    Policy(PolicyKind kind, std::size_t k, std::shared_ptr<const DecisionTable> table)
        : kind_(kind), k_(k), table_(std::move(table)) {}

    PolicyKind kind_;
    std::size_t k_;
    std::shared_ptr<const DecisionTable> table_;
};

inline constexpr std::size_t kDefaultDpCap = 500;

struct OptimalPlan {
    /// M_t = V(t, p0) for horizons t = 1..n: the optimal expected reward with t items.
    RewardCurve optimal_values;
    /// Decisions for horizon n (the table also answers every shorter horizon).
    Policy policy;
};

/// Finite-horizon dynamic program
///   V(t, s) = max( V(t-1, skip(s)), p(s) (r + V(t-1, success(s))) + (1 - p(s)) V(t-1, fail(s)) )
/// with V(0, .) = 0. Ties go to skipping. Throws CapacityError when n > cap.
OptimalPlan dp_optimal(const TrustParams &params, std::size_t n, std::size_t cap = kDefaultDpCap);

/// Exact expected cumulative reward of a policy over n steps, by propagating the state
/// distribution forward from p0.
RewardCurve evaluate_policy(const TrustParams &params, const Policy &policy, std::size_t n);

/// Expected reward curve of the every-k heuristic.
RewardCurve heuristic_reward(const TrustParams &params, std::size_t k, std::size_t n);

/// floor(n/k) * p0 * r, the heuristic's reward when k > psi(l, g) (trust is fully restored
/// between recommendations). Throws ValidationError when k <= psi.
Rational heuristic_closed_form(const TrustParams &params, std::size_t k, std::size_t n);

}  // namespace fairprice
