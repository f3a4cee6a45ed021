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

#include <cmath>

#include "fairprice/errors.hpp"
#include "fairprice/special_functions.hpp"
#include "fairprice/trust.hpp"

namespace fairprice {

namespace {

void require_no_recovery(const TrustParams &params, bool reset, const char *what) {
    params.validate();
    if (params.recovery != 1) {
        throw ValidationError(std::string(what) + " requires g = 1");
    }
    if (params.reset != reset) {
        throw ValidationError(std::string(what) + (reset ? " requires reset" : " requires no reset"));
    }
}

void require_tolerance(double tol) {
    if (!(tol > 0.0)) {
        throw ValidationError("tolerance must be positive");
    }
}

}  // namespace

double closed_form_no_reset(const TrustParams &params) {
    require_no_recovery(params, false, "the no-reset closed form");
    const double p0 = to_double(params.p0);
    const double l = to_double(params.loss);
    return p0 / (1.0 - p0) / (1.0 - l) * to_double(params.reward);
}

TruncatedValue exact_series_no_reset(const TrustParams &params, double tol) {
    require_no_recovery(params, false, "the no-reset series");
    require_tolerance(tol);
    const double l = to_double(params.loss);
    const double r = to_double(params.reward);
    TruncatedValue out;
    double p = to_double(params.p0);
    for (;;) {
        // At trust level p the recommender collects p/(1-p) successes (times r) before
        // the first failure moves it to l*p.
        const double term = p / (1.0 - p) * r;
        out.value += term;
        ++out.terms;
        if (term < tol) {
            // Successive terms shrink by at least a factor l.
            out.error_bound = term * l / (1.0 - l);
            return out;
        }
        p *= l;
    }
}

TruncatedValue failure_probability_q(const TrustParams &params, double tol) {
    require_no_recovery(params, true, "the failure probability");
    require_tolerance(tol);
    const double l = to_double(params.loss);
    double x = to_double(params.p0);
    double log_q = 0.0;
    TruncatedValue out;
    while (x >= tol) {
        log_q += std::log1p(-x);
        ++out.terms;
        x *= l;
    }
    // Remaining factors prod (1 - x_k) with sum x_k = x/(1-l) =: s and x_k <= x obey
    // 1 >= prod >= exp(-s/(1-x)).
    const double tail = x / (1.0 - l);
    out.value = std::exp(log_q);
    out.error_bound = out.value * -std::expm1(-tail / (1.0 - x));
    return out;
}

TruncatedValue with_reset_total(const TrustParams &params, double tol) {
    const auto q = failure_probability_q(params, tol);
    const double q_low = q.value - q.error_bound;
    if (!(q_low > 0.0)) {
        throw ValidationError("failure probability is numerically zero");
    }
    const double r = to_double(params.reward);
    TruncatedValue out;
    out.value = (1.0 - q.value) / q.value * r;
    out.error_bound = (1.0 - q_low) / q_low * r - out.value;
    out.terms = q.terms;
    return out;
}

double q_lower_bound_at(double c) {
    if (!(c > 0.0 && c < 1.0)) {
        throw ValidationError("c = max(p0, l) must lie in (0,1)");
    }
    return (1.0 - c) * std::exp(dilog(1.0 - c) / std::log(c));
}

double q_lower_bound(const TrustParams &params) {
    params.validate();
    return q_lower_bound_at(std::max(to_double(params.p0), to_double(params.loss)));
}

double reward_upper_bound(const TrustParams &params) {
    require_no_recovery(params, true, "the reward bound");
    const double delta = q_lower_bound(params);
    return (1.0 - delta) / delta * to_double(params.reward);
}

}  // namespace fairprice
