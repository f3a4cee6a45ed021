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

#include <iosfwd>
#include <string>
#include <vector>

namespace fairprice {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedChecks = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCapacity = 3;

/// Runs the command line `args` (without the program name). Results go to `out` unless
/// --out names a file; diagnostics go to `err`. Returns the process exit code:
/// 0 success, 1 verify found failing checks, 2 invalid input, 3 resource cap exceeded.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace fairprice
