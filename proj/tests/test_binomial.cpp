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

#include <doctest.h>

#include "core/binomial.hpp"

using chowcal::BigInt;
using chowcal::binomial;

TEST_CASE("binomial anchors") {
    CHECK(binomial(-1, 0) == 1);  // empty product
    CHECK(binomial(-1, 2) == 1);  // (-1)(-2)/2
    CHECK(binomial(3, 5) == 0);   // falling factorial hits zero
    CHECK(binomial(-1, 1) == -1);
    CHECK(binomial(-3, 2) == 6);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(-2, 3) == -4);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(-4, -2) == 0);
}

TEST_CASE("binomial satisfies the Pascal recurrence for any upper index") {
    for (long a = -8; a <= 8; ++a)
        for (long k = 1; k <= 8; ++k)
            CHECK(binomial(a, k) == binomial(a - 1, k - 1) + binomial(a - 1, k));
}

TEST_CASE("binomial reflection for negative upper index") {
    // C(-a, k) = (-1)^k C(a+k-1, k)
    for (long a = 1; a <= 6; ++a)
        for (long k = 0; k <= 6; ++k) {
            const BigInt sign(k % 2 == 0 ? 1 : -1);
            CHECK(binomial(-a, k) == sign * binomial(a + k - 1, k));
        }
}

TEST_CASE("binomial stays exact for large arguments") {
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
    CHECK(binomial(-50, 50) == binomial(99, 50));
}
