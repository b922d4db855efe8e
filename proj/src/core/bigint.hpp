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

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "error.hpp"

namespace chowcal {

// All coefficients live in Z. Every series we invert has unit leading
// term, so no rational arithmetic appears anywhere in the library.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

// Strict decimal integer: optional leading '-', then digits only.
inline BigInt bigint_from_decimal(std::string_view text) {
    if (text.empty())
        fail(ErrorCode::Parse, "empty integer literal");
    std::size_t i = (text[0] == '-') ? 1 : 0;
    if (i == text.size())
        fail(ErrorCode::Parse, "integer literal '-' has no digits");
    for (std::size_t k = i; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9')
            fail(ErrorCode::Parse,
                 "invalid integer literal '" + std::string(text) + "'");
    return BigInt(std::string(text), 10);
}

inline bool fits_int64(const BigInt& v) { return v.fits_slong_p(); }

inline BigInt int_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

}  // namespace chowcal
