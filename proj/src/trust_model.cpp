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
#include "fairprice/trust.hpp"

namespace fairprice {

void TrustParams::validate() const {
    if (!(p0 > 0 && p0 < 1)) {
        throw ValidationError("p0 = " + to_exact_string(p0) + " must lie in (0,1)");
    }
    if (!(loss > 0 && loss < 1)) {
        throw ValidationError("loss rate l = " + to_exact_string(loss) + " must lie in (0,1)");
    }
    if (recovery < 1) {
        throw ValidationError("recovery factor g = " + to_exact_string(recovery) + " must be >= 1");
    }
    if (reward <= 0) {
        throw ValidationError("reward r = " + to_exact_string(reward) + " must be positive");
    }
}

namespace {

BigInt power(const BigInt &base, std::uint64_t exponent) {
    BigInt out = 1;
    BigInt b = base;
    while (exponent > 0) {
        if (exponent & 1U) {
            out *= b;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            b *= b;
        }
    }
    return out;
}

// Exponents beyond this make exact powers too large to be worth computing; the log test
// is then used unconditionally (its relative margin is still many orders above rounding).
constexpr std::uint64_t kExactExponentLimit = 1U << 16;

}  // namespace

bool reaches_clamp(const Rational &loss, const Rational &recovery, std::uint64_t a, std::uint64_t b) {
    const long double log_l = std::log(static_cast<long double>(to_double(loss)));
    const long double log_g = std::log(static_cast<long double>(to_double(recovery)));
    const long double lhs = static_cast<long double>(a) * log_l + static_cast<long double>(b) * log_g;
    const long double scale = static_cast<long double>(a) * std::fabs(log_l) +
                              static_cast<long double>(b) * std::fabs(log_g);
    if (std::fabs(lhs) > 1e-9L * scale + 1e-300L || a + b > kExactExponentLimit) {
        return lhs >= 0;
    }
    // l^a g^b >= 1  <=>  ln^a gn^b >= ld^a gd^b for l = ln/ld, g = gn/gd.
    const BigInt left = power(numerator(loss), a) * power(numerator(recovery), b);
    const BigInt right = power(denominator(loss), a) * power(denominator(recovery), b);
    return left >= right;
}

std::optional<std::uint64_t> psi(const Rational &loss, const Rational &recovery) {
    if (!(loss > 0 && loss < 1)) {
        throw ValidationError("psi needs 0 < l < 1");
    }
    if (recovery <= 1) {
        return std::nullopt;
    }
    const double estimate = -std::log(to_double(loss)) / std::log(to_double(recovery));
    std::uint64_t k = estimate > 1.0 ? static_cast<std::uint64_t>(std::floor(estimate)) : 1;
    while (k > 0 && reaches_clamp(loss, recovery, 1, k - 1)) {
        --k;
    }
    while (!reaches_clamp(loss, recovery, 1, k)) {
        ++k;
    }
    return k;
}

TrustModel::TrustModel(const TrustParams &params, std::uint32_t max_failures)
    : params_(params), max_failures_(max_failures) {
    params_.validate();
    p0_ = to_double(params_.p0);
    log_l_ = std::log(to_double(params_.loss));
    log_g_ = std::log(to_double(params_.recovery));
    reward_ = to_double(params_.reward);

    clamp_.resize(std::size_t{max_failures} + 1);
    clamp_[0] = 0;
    if (params_.recovery == 1) {
        return;
    }
    // The clamp exponent is nondecreasing in a; start each search from the previous answer.
    std::uint64_t b = 0;
    for (std::uint32_t a = 1; a <= max_failures; ++a) {
        const double estimate = static_cast<double>(a) * -log_l_ / log_g_;
        if (estimate > static_cast<double>(b) + 2.0) {
            b = static_cast<std::uint64_t>(estimate) - 1;
        }
        while (!reaches_clamp(params_.loss, params_.recovery, a, b)) {
            ++b;
        }
        clamp_[a] = b;
    }
}

TrustState TrustModel::skip(TrustState s) const {
    const auto &threshold = clamp_[s.a];
    if (threshold && std::uint64_t{s.b} + 1 >= *threshold) {
        return TrustState{};
    }
    return TrustState{s.a, s.b + 1};
}

TrustState TrustModel::fail(TrustState s) const {
    if (s.a >= max_failures_) {
        throw CapacityError("trust state exceeds the model's failure horizon");
    }
    return TrustState{s.a + 1, s.b};
}

double TrustModel::probability(TrustState s) const {
    if (s.a == 0 && s.b == 0) {
        return p0_;
    }
    const double exponent = static_cast<double>(s.a) * log_l_ + static_cast<double>(s.b) * log_g_;
    return p0_ * std::exp(std::min(exponent, 0.0));
}

}  // namespace fairprice
