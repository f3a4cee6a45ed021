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

namespace fairprice {

/// dilog(x) = integral_x^1 -ln(t)/(1-t) dt = Li2(1-x), for x in [0,1].
/// Nonnegative and decreasing; dilog(1) = 0, dilog(0) = pi^2/6.
/// Evaluated by tanh-sinh quadrature.
double dilog(double x);

/// The same function via the power series of Li2, using the reflection
/// Li2(y) = pi^2/6 - ln(y) ln(1-y) - Li2(1-y) to keep the series argument <= 1/2.
double dilog_series(double x);

}  // namespace fairprice
