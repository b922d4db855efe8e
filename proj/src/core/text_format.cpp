/* Copyright 2026 the chowcal authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "text_format.hpp"

#include <cctype>
#include <map>
#include <utility>

namespace chowcal {

namespace {

constexpr long kMaxExponent = 1000000;

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos;
    }

    bool consume(char c) {
        if (!eof() && peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorCode::Parse,
             what + " at position " + std::to_string(pos + 1) + " in '" +
                 std::string(text) + "'");
    }
};

bool at_digit(const Cursor& c) {
    return !c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()));
}

BigInt read_digits(Cursor& c) {
    const std::size_t start = c.pos;
    while (at_digit(c))
        ++c.pos;
    if (c.pos == start)
        c.error("expected digits");
    return BigInt(std::string(c.text.substr(start, c.pos - start)), 10);
}

long read_exponent(Cursor& c) {
    BigInt e = read_digits(c);
    if (e > kMaxExponent)
        c.error("exponent too large");
    return e.get_si();
}

// Sign separator handling shared by both parsers: returns the sign of the
// next term, or nullopt at end of input.
std::optional<int> next_term_sign(Cursor& c, bool first) {
    c.skip_ws();
    if (c.eof()) {
        if (first)
            c.error("empty literal");
        return std::nullopt;
    }
    if (c.consume('+'))
        return +1;
    if (c.consume('-'))
        return -1;
    if (first)
        return +1;
    c.error("expected '+' or '-' between terms");
}

}  // namespace

std::string to_text(const ChowClass& a) {
    std::string out;
    for (int i = 0; i <= a.ambient_dim(); ++i) {
        const BigInt& c = a.coeff(i);
        if (c == 0)
            continue;
        const bool negative = c < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += BigInt(abs(c)).get_str();
        if (i == 1)
            out += "H";
        else if (i >= 2)
            out += "H^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

ChowClass parse_class_text(std::string_view text, std::optional<int> ambient) {
    Cursor c{text};
    std::map<long, BigInt> terms;
    long max_exp = 0;
    bool first = true;
    while (auto sign = next_term_sign(c, first)) {
        first = false;
        c.skip_ws();
        BigInt coeff(1);
        bool have_coeff = false;
        if (at_digit(c)) {
            coeff = read_digits(c);
            have_coeff = true;
            c.skip_ws();
            c.consume('*');
            c.skip_ws();
        }
        long exp = 0;
        bool have_h = false;
        if (c.consume('H')) {
            have_h = true;
            exp = 1;
            c.skip_ws();
            if (c.consume('^')) {
                c.skip_ws();
                exp = read_exponent(c);
            }
        }
        if (!have_coeff && !have_h)
            c.error("expected a coefficient or an H term");
        if (ambient && exp > *ambient)
            c.error("exponent " + std::to_string(exp) +
                    " exceeds ambient dimension " + std::to_string(*ambient));
        terms[exp] += (*sign < 0) ? BigInt(-coeff) : coeff;
        max_exp = std::max(max_exp, exp);
    }
    const int n = ambient ? *ambient : static_cast<int>(max_exp);
    ChowClass result(n);
    for (const auto& [exp, value] : terms)
        result.set_coeff(static_cast<int>(exp), result.coeff(static_cast<int>(exp)) + value);
    return result;
}

std::string to_text(const Correspondence& alpha) {
    const int n = alpha.ambient_dim();
    std::string out;
    for (int i = n; i >= 0; --i) {
        for (int j = 0; j <= n; ++j) {
            const BigInt& e = alpha.entry(i, j);
            if (e == 0)
                continue;
            const bool negative = e < 0;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            const BigInt mag = abs(e);
            std::string mono;
            if (i == 1)
                mono = "x";
            else if (i >= 2)
                mono = "x^" + std::to_string(i);
            if (j >= 1) {
                if (!mono.empty())
                    mono += "*";
                mono += (j == 1) ? "y" : "y^" + std::to_string(j);
            }
            if (mono.empty())
                out += mag.get_str();
            else if (mag == 1)
                out += mono;
            else
                out += mag.get_str() + "*" + mono;
        }
    }
    return out.empty() ? "0" : out;
}

Correspondence parse_corr_text(std::string_view text, std::optional<int> ambient) {
    Cursor c{text};
    // exponent pair -> coefficient, accumulated
    std::map<std::pair<long, long>, BigInt> terms;
    long max_exp = 1;
    bool first = true;
    while (auto sign = next_term_sign(c, first)) {
        first = false;
        c.skip_ws();
        BigInt coeff(1);
        bool have_coeff = false;
        if (at_digit(c)) {
            coeff = read_digits(c);
            have_coeff = true;
            c.skip_ws();
            c.consume('*');
            c.skip_ws();
        }
        std::optional<long> x_exp, y_exp;
        while (!c.eof() && (c.peek() == 'x' || c.peek() == 'y')) {
            const char var = c.peek();
            ++c.pos;
            long exp = 1;
            c.skip_ws();
            if (c.consume('^')) {
                c.skip_ws();
                exp = read_exponent(c);
            }
            auto& slot = (var == 'x') ? x_exp : y_exp;
            if (slot)
                c.error(std::string("variable '") + var + "' repeated in term");
            slot = exp;
            c.skip_ws();
            c.consume('*');
            c.skip_ws();
        }
        if (!have_coeff && !x_exp && !y_exp)
            c.error("expected a coefficient, x or y");
        const long xe = x_exp.value_or(0);
        const long ye = y_exp.value_or(0);
        if (ambient && (xe > *ambient || ye > *ambient))
            c.error("exponent exceeds ambient dimension " + std::to_string(*ambient));
        terms[{xe, ye}] += (*sign < 0) ? BigInt(-coeff) : coeff;
        max_exp = std::max({max_exp, xe, ye});
    }
    const int n = ambient ? *ambient : static_cast<int>(max_exp);
    Correspondence result(n);
    for (const auto& [exps, value] : terms) {
        const int i = static_cast<int>(exps.first);
        const int j = static_cast<int>(exps.second);
        result.set_entry(i, j, result.entry(i, j) + value);
    }
    return result;
}

}  // namespace chowcal
