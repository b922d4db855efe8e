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

#include "bigint.hpp"

namespace chowcal {

/// Generalized binomial coefficient C(upper, lower) for arbitrary integer
/// upper index: 0 for lower < 0, otherwise the falling factorial
/// upper*(upper-1)*...*(upper-lower+1) divided by lower!.  Always an exact
/// integer; examples: C(-1,2) = 1, C(3,5) = 0.
inline BigInt binomial(const BigInt& upper, long lower) {
    if (lower < 0)
        return BigInt(0);
    BigInt result(1);
    // C(a,t) = C(a,t-1)*(a-t+1)/t; every intermediate value is itself a
    // binomial coefficient, so the division is exact at each step.
    for (long t = 1; t <= lower; ++t) {
        result *= upper - (t - 1);
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(),
                        static_cast<unsigned long>(t));
    }
    return result;
}

inline BigInt binomial(long upper, long lower) {
    return binomial(BigInt(upper), lower);
}

}  // namespace chowcal
