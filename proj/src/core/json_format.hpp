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

#include <json.hpp>

#include "chow_class.hpp"
#include "correspondence.hpp"
#include "hypersurface.hpp"
#include "virtual_bundle.hpp"

namespace chowcal {

// ordered_json keeps insertion order, so emitted documents are
// byte-stable across runs.
using ojson = nlohmann::ordered_json;

/// Wrap nlohmann parsing, converting syntax errors into Error{Parse} with
/// a line/column diagnostic.
ojson parse_json_text(std::string_view text);

/// Integers that fit in 64 bits are emitted as JSON numbers; anything
/// larger becomes a decimal string so values round-trip exactly.  Parsers
/// accept both forms.
ojson bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const ojson& j, const std::string& where);

/// Class <-> JSON array [c0, c1, ..., cN] indexed by codimension.
ojson to_json(const ChowClass& a);
ChowClass class_from_json(const ojson& j, std::optional<int> ambient = {});

/// Bundle <-> {"roots": [[twist, multiplicity], ...]}; the schema carries
/// no ambient dimension, so parsing requires it.
ojson to_json(const VirtualBundle& e);
VirtualBundle bundle_from_json(const ojson& j, int ambient_dim);

/// Hypersurface <-> {"ambient": N, "degree": d, "singular": {...}} with
/// singular one of {"model":"smooth"}, {"model":"points","count":r},
/// {"model":"linear","dim":k}, {"model":"explicit","segre":[s0,...,sN]}.
ojson to_json(const HypersurfaceModel& x);
HypersurfaceModel hypersurface_from_json(const ojson& j);

/// Correspondence <-> {"ambient": N, "grid": [[...], ...]}, row index the
/// x exponent, column index the y exponent.
ojson to_json(const Correspondence& alpha);
Correspondence corr_from_json(const ojson& j);

/// Operator matrix <-> {"ambient": N, "matrix": [[...], ...]}, entry (i,j)
/// the coefficient of H^i in the image of H^j.
ojson to_json(const OperatorMatrix& m);
OperatorMatrix matrix_from_json(const ojson& j);

}  // namespace chowcal
