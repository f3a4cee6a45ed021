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

// Reward-curve CSV: header "step,policy,expected_cumulative_reward,stderr", optionally
// followed by "mc_mean,mc_stderr". Decimals carry 12 significant digits.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fairprice {

struct CurveRow {
    std::size_t step = 0;
    std::string policy;
    double expected = 0.0;
    double std_error = 0.0;
    std::optional<double> mc_mean;
    std::optional<double> mc_std_error;
};

struct CurveTable {
    bool has_mc = false;
    std::vector<CurveRow> rows;
};

void write_curve_csv(std::ostream &out, const CurveTable &table);

/// Parses what write_curve_csv emits. Throws ValidationError with a line number on bad input.
CurveTable read_curve_csv(std::istream &in);

}  // namespace fairprice
