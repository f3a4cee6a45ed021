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

#include "fairprice/rational.hpp"

#include <cctype>
#include <cstdio>
#include <regex>

#include "fairprice/errors.hpp"

namespace fairprice {

namespace {

BigInt parse_integer(std::string_view digits) {
    BigInt out = 0;
    for (char c : digits) {
        out *= 10;
        out += c - '0';
    }
    return out;
}

BigInt pow10(long exponent) {
    BigInt out = 1;
    for (long i = 0; i < exponent; ++i) {
        out *= 10;
    }
    return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    static const std::regex kFraction(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
    static const std::regex kDecimal(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
    std::string s(text);
    std::smatch m;
    if (std::regex_match(s, m, kFraction)) {
        std::string num = m[1].str();
        bool negative = !num.empty() && num[0] == '-';
        if (num[0] == '+' || num[0] == '-') {
            num.erase(0, 1);
        }
        BigInt den = parse_integer(m[2].str());
        if (den == 0) {
            throw ValidationError("zero denominator in rational '" + s + "'");
        }
        Rational out(parse_integer(num), den);
        return negative ? Rational(-out) : out;
    }
    if (std::regex_match(s, m, kDecimal)) {
        std::string int_part = m[2].str();
        std::string frac_part = m[3].str();
        if (int_part.empty() && frac_part.empty()) {
            throw ValidationError("not a number: '" + s + "'");
        }
        long exponent = m[4].matched ? std::stol(m[4].str()) : 0;
        if (exponent > 4000 || exponent < -4000) {
            throw ValidationError("exponent out of range in '" + s + "'");
        }
        BigInt mantissa = parse_integer(int_part + frac_part);
        long scale = static_cast<long>(frac_part.size()) - exponent;
        Rational out = scale >= 0 ? Rational(mantissa, pow10(scale)) : Rational(mantissa * pow10(-scale));
        return m[1].str() == "-" ? Rational(-out) : out;
    }
    throw ValidationError("not a number: '" + s + "'");
}

std::string to_exact_string(const Rational &x) {
    return x.str();
}

double to_double(const Rational &x) {
    return x.convert_to<double>();
}

std::string to_decimal_string(double x, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, x);
    std::string out(buf);
    return out == "-0" ? "0" : out;
}

std::string to_decimal_string(const Rational &x, int significant) {
    return to_decimal_string(to_double(x), significant);
}

Rational factorial(unsigned n) {
    BigInt out = 1;
    for (unsigned i = 2; i <= n; ++i) {
        out *= i;
    }
    return Rational(out);
}

}  // namespace fairprice
