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

#include <stdexcept>
#include <string>

namespace fairprice {

/// Malformed or out-of-range input. The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
   public:
    explicit ValidationError(const std::string &what) : std::invalid_argument(what) {}
};

/// A configured resource cap (player count, DP horizon) was exceeded. Exit code 3.
class CapacityError : public std::length_error {
   public:
    explicit CapacityError(const std::string &what) : std::length_error(what) {}
};

}  // namespace fairprice
