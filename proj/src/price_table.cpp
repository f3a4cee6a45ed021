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

#include "fairprice/price_table.hpp"

#include <istream>
#include <ostream>

#include "fairprice/errors.hpp"

namespace fairprice {

namespace {

constexpr const char *kHeader = "id,method,value,price";

std::string quote(const std::string &field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split_quoted(const std::string &line, std::size_t line_no) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"' && fields.back().empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    if (quoted) {
        throw ValidationError("line " + std::to_string(line_no) + ": unterminated quote");
    }
    return fields;
}

}  // namespace

void write_price_csv(std::ostream &out, const std::vector<PriceRow> &rows) {
    out << kHeader << '\n';
    for (const auto &row : rows) {
        out << quote(row.id) << ',' << quote(row.method) << ',' << quote(row.value) << ',' << quote(row.price)
            << '\n';
    }
}

std::vector<PriceRow> read_price_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ValidationError("line 1: missing CSV header");
    }
    if (line != kHeader) {
        throw ValidationError("line 1: unexpected CSV header '" + line + "'");
    }
    std::vector<PriceRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        auto fields = split_quoted(line, line_no);
        if (fields.size() != 4) {
            throw ValidationError("line " + std::to_string(line_no) + ": expected 4 fields, got " +
                                  std::to_string(fields.size()));
        }
        rows.push_back({std::move(fields[0]), std::move(fields[1]), std::move(fields[2]), std::move(fields[3])});
    }
    return rows;
}

}  // namespace fairprice
