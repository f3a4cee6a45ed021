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

// Self-checks bundled with the CLI. Each suite evaluates a family of claims with the
// library itself and reports the measured values.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fairprice {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const;
};

struct VerifyOptions {
    std::uint64_t seed = 20260101;
    double tol = 1e-12;  // truncation tolerance for series and products
};

/// figure2, heuristics, optimal, bounds, two-player, core-laws, truthfulness, shapley-axioms.
const std::vector<std::string> &suite_names();

/// Runs one suite, or every suite for "all". Throws ValidationError for an unknown name.
std::vector<SuiteReport> run_suite(std::string_view name, const VerifyOptions &options = {});

}  // namespace fairprice
