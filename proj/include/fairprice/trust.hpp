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

// Trust process of a strategic recommender: success probability p starts at p0,
// drops to l*p after an unsuccessful recommendation, recovers to min(g*p, p0) after a
// skipped item, and (optionally) resets to p0 after a successful recommendation.

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "fairprice/rational.hpp"

namespace fairprice {

struct TrustParams {
    Rational p0{1, 2};
    Rational loss{66, 100};
    Rational recovery{1};
    Rational reward{1};
    bool reset = false;

    /// 0 < p0 < 1, 0 < l < 1, g >= 1, r > 0. Throws ValidationError.
    void validate() const;
};

/// p = p0 * l^a * g^b, with the clamp at p0 applied along the whole history.
struct TrustState {
    std::uint32_t a = 0;  // failed recommendations since the last return to p0
    std::uint32_t b = 0;  // recovering skips since then

    constexpr bool operator==(const TrustState &) const = default;
};

/// Smallest integer psi >= 0 with l * g^psi >= 1; nullopt when g <= 1 (no finite psi).
std::optional<std::uint64_t> psi(const Rational &loss, const Rational &recovery);

/// Whether l^a * g^b >= 1. Decided in extended precision when the log-margin is clear,
/// and by exact big-integer cross-multiplication otherwise.
bool reaches_clamp(const Rational &loss, const Rational &recovery, std::uint64_t a, std::uint64_t b);

/// Transition rules over TrustState for loss exponents up to `max_failures`.
class TrustModel {
   public:
    TrustModel(const TrustParams &params, std::uint32_t max_failures);

    const TrustParams &params() const { return params_; }
    std::uint32_t max_failures() const { return max_failures_; }

    /// (0,0) if l^a g^(b+1) >= 1, else (a, b+1).
    TrustState skip(TrustState s) const;
    TrustState fail(TrustState s) const;
    TrustState success(TrustState s) const { return params_.reset ? TrustState{} : s; }

    double probability(TrustState s) const;
    double reward() const { return reward_; }

    /// Smallest b with l^a g^b >= 1, or nullopt when recovery never reaches p0.
    std::optional<std::uint64_t> clamp_exponent(std::uint32_t a) const { return clamp_[a]; }

   private:
    TrustParams params_;
    std::uint32_t max_failures_;
    std::vector<std::optional<std::uint64_t>> clamp_;
    double p0_, log_l_, log_g_, reward_;
};

/// Value with an analytic bound on the truncation error.
struct TruncatedValue {
    double value = 0.0;
    double error_bound = 0.0;
    std::size_t terms = 0;
};

inline constexpr double kDefaultTolerance = 1e-12;

/// p0/(1-p0) * 1/(1-l) * r: the geometric-sum closed form for g = 1 without reset.
/// It treats 1 - p as constant across trust levels and so over-estimates the reward.
double closed_form_no_reset(const TrustParams &params);

/// sum_{i>=0} l^i p0 / (1 - l^i p0) * r, stopped after the first term below tol.
/// Requires g = 1 and no reset.
TruncatedValue exact_series_no_reset(const TrustParams &params, double tol = kDefaultTolerance);

/// q = prod_{k>=0} (1 - l^k p0), the probability that no recommendation ever succeeds.
/// `value` is the truncated product (an upper bound); the true q lies within error_bound
/// below it. Requires g = 1 and reset.
TruncatedValue failure_probability_q(const TrustParams &params, double tol = kDefaultTolerance);

/// Fixed point R = (1 - q)/q * r of the with-reset recurrence. Requires g = 1 and reset.
TruncatedValue with_reset_total(const TrustParams &params, double tol = kDefaultTolerance);

/// delta(c) = (1-c) exp(dilog(1-c)/ln c) with c = max(p0, l); a lower bound on q.
double q_lower_bound(const TrustParams &params);
double q_lower_bound_at(double c);

/// (1 - delta(c))/delta(c) * r; an upper bound on the with-reset total reward.
double reward_upper_bound(const TrustParams &params);

}  // namespace fairprice
