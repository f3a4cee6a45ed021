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

// Price CSV: header "id,method,value,price". Numeric cells are decimals with 12 significant
// digits; status rows (core checks) carry words such as "true" in the value column.
// Fields containing commas or quotes are quoted as in RFC 4180.

#include <iosfwd>
#include <string>
#include <vector>

namespace fairprice {

struct PriceRow {
    std::string id;
    std::string method;
    std::string value;
    std::string price;  // empty for the seller and for status rows

    bool operator==(const PriceRow &) const = default;
};

void write_price_csv(std::ostream &out, const std::vector<PriceRow> &rows);

/// Parses what write_price_csv emits. Throws ValidationError with a line number on bad input.
std::vector<PriceRow> read_price_csv(std::istream &in);

}  // namespace fairprice
