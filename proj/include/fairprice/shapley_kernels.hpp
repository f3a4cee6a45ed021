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

#include <span>
#include <vector>

#include "fairprice/rational.hpp"

namespace fairprice::kernels {

/// Exact Shapley values of the n-player game whose worths are indexed by coalition mask:
///   phi_i = sum_{S not containing i} |S|!(n-1-|S|)!/n! * (v(S + i) - v(S)).
/// Reference implementation, single-threaded.
std::vector<Rational> shapley_serial(std::span<const Rational> worths, std::size_t n);

/// Same values as shapley_serial; players are distributed over OpenMP threads.
/// Exact arithmetic makes the result independent of scheduling.
std::vector<Rational> shapley_parallel(std::span<const Rational> worths, std::size_t n);

}  // namespace fairprice::kernels
