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

#include "fairprice/reward_csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "fairprice/errors.hpp"
#include "fairprice/rational.hpp"

namespace fairprice {

namespace {

constexpr const char *kHeader = "step,policy,expected_cumulative_reward,stderr";
constexpr const char *kMcHeader = ",mc_mean,mc_stderr";

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

double parse_double(const std::string &text, std::size_t line_no) {
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used == text.size()) {
            return v;
        }
    } catch (const std::exception &) {
    }
    throw ValidationError("line " + std::to_string(line_no) + ": bad number '" + text + "'");
}

}  // namespace

void write_curve_csv(std::ostream &out, const CurveTable &table) {
    out << kHeader << (table.has_mc ? kMcHeader : "") << '\n';
    for (const auto &row : table.rows) {
        out << row.step << ',' << row.policy << ',' << to_decimal_string(row.expected) << ','
            << to_decimal_string(row.std_error);
        if (table.has_mc) {
            out << ',' << to_decimal_string(row.mc_mean.value_or(0.0)) << ','
                << to_decimal_string(row.mc_std_error.value_or(0.0));
        }
        out << '\n';
    }
}

CurveTable read_curve_csv(std::istream &in) {
    CurveTable table;
    std::string line;
    if (!std::getline(in, line)) {
        throw ValidationError("line 1: missing CSV header");
    }
    if (line == std::string(kHeader) + kMcHeader) {
        table.has_mc = true;
    } else if (line != kHeader) {
        throw ValidationError("line 1: unexpected CSV header '" + line + "'");
    }
    const std::size_t columns = table.has_mc ? 6 : 4;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto fields = split(line);
        if (fields.size() != columns) {
            throw ValidationError("line " + std::to_string(line_no) + ": expected " + std::to_string(columns) +
                                  " fields");
        }
        CurveRow row;
        const auto &s = fields[0];
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), row.step);
        if (ec != std::errc() || ptr != s.data() + s.size()) {
            throw ValidationError("line " + std::to_string(line_no) + ": bad step '" + s + "'");
        }
        row.policy = fields[1];
        row.expected = parse_double(fields[2], line_no);
        row.std_error = parse_double(fields[3], line_no);
        if (table.has_mc) {
            row.mc_mean = parse_double(fields[4], line_no);
            row.mc_std_error = parse_double(fields[5], line_no);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace fairprice
