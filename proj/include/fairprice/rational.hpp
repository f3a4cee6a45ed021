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

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace fairprice {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses "a/b", an integer, or a decimal literal ("0.66", "-1.5e-3").
/// Decimals are converted exactly by base-10 scaling; no floating point is involved.
Rational parse_rational(std::string_view text);

/// Exact rendering: "3/5", "-2", "0".
std::string to_exact_string(const Rational &x);

/// Decimal rendering with `significant` significant digits (printf %g style).
std::string to_decimal_string(const Rational &x, int significant = 12);
std::string to_decimal_string(double x, int significant = 12);

double to_double(const Rational &x);

Rational factorial(unsigned n);

}  // namespace fairprice
