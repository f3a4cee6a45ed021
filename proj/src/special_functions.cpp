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

#include "fairprice/special_functions.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "fairprice/errors.hpp"

namespace fairprice {

namespace {

constexpr double kPiSquaredOver6 = boost::math::constants::pi_sqr<double>() / 6.0;

void check_domain(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw ValidationError("dilog argument outside [0,1]");
    }
}

/// sum_{k>=1} y^k / k^2 for 0 <= y <= 1/2.
double li2_power_series(double y) {
    double sum = 0.0;
    double power = y;
    for (int k = 1; k < 200; ++k) {
        const double term = power / (static_cast<double>(k) * k);
        sum += term;
        if (term < 1e-18 * sum) {
            break;
        }
        power *= y;
    }
    return sum;
}

double li2(double y) {
    if (y == 0.0) {
        return 0.0;
    }
    if (y == 1.0) {
        return kPiSquaredOver6;
    }
    if (y <= 0.5) {
        return li2_power_series(y);
    }
    return kPiSquaredOver6 - std::log(y) * std::log1p(-y) - li2_power_series(1.0 - y);
}

}  // namespace

double dilog(double x) {
    check_domain(x);
    if (x == 1.0) {
        return 0.0;
    }
    // The log singularity at t = 0 is integrable and tanh-sinh never evaluates endpoints.
    // For t in [1/2, 1), 1 - t is exact and log(t) keeps full relative accuracy.
    thread_local boost::math::quadrature::tanh_sinh<double> integrator;
    auto integrand = [](double t) { return t == 1.0 ? 1.0 : -std::log(t) / (1.0 - t); };
    return integrator.integrate(integrand, x, 1.0);
}

double dilog_series(double x) {
    check_domain(x);
    return li2(1.0 - x);
}

}  // namespace fairprice
