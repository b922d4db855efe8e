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

#include <optional>
#include <string>
#include <string_view>

#include "chow_class.hpp"
#include "correspondence.hpp"

namespace chowcal {

/// Canonical text form of a class, codimension exponents of H, explicit
/// integer coefficients: "3H + 1H^2", "-1H - 1H^2", "1", "0".  Printing
/// then parsing with the same ambient dimension is the identity.
std::string to_text(const ChowClass& a);

/// Parse the class text format.  Accepts whitespace between tokens, an
/// optional '*' between coefficient and H, and a bare "H" for coefficient
/// one.  When ambient is absent the dimension is inferred from the largest
/// exponent present.
ChowClass parse_class_text(std::string_view text, std::optional<int> ambient = {});

/// Canonical text form of a correspondence, e.g. "x + x*y - y": terms
/// ordered by descending x exponent then ascending y exponent, unit
/// coefficients omitted, '*' between factors.
std::string to_text(const Correspondence& alpha);

/// Parse the correspondence text format.  When ambient is absent it is
/// inferred as the largest exponent present (at least 1).
Correspondence parse_corr_text(std::string_view text,
                               std::optional<int> ambient = {});

}  // namespace chowcal
