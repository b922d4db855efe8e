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

#include "json_format.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace chowcal {

namespace {

// Sanity cap on ambient dimensions read from untrusted input.
constexpr long kMaxAmbient = 1024;

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
    fail(ErrorCode::Parse, where + ": " + what);
}

const ojson& require_field(const ojson& j, const std::string& where,
                           const std::string& key) {
    if (!j.is_object())
        parse_fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        parse_fail(where, "missing field '" + key + "'");
    return *it;
}

long small_int_from_json(const ojson& j, const std::string& where) {
    BigInt v = bigint_from_json(j, where);
    if (!v.fits_slong_p())
        parse_fail(where, "value out of range");
    return v.get_si();
}

void reject_unknown_fields(const ojson& j, const std::string& where,
                           std::initializer_list<const char*> known) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k)
                ok = true;
        if (!ok)
            parse_fail(where, "unknown field '" + it.key() + "'");
    }
}

std::vector<BigInt> int_array_from_json(const ojson& j, const std::string& where) {
    if (!j.is_array())
        parse_fail(where, "expected an array of integers");
    std::vector<BigInt> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(bigint_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

ojson parse_json_text(std::string_view text) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Translate the byte offset into a line/column diagnostic.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        fail(ErrorCode::Parse, "line " + std::to_string(line) + ", column " +
                                   std::to_string(col) + ": " + e.what());
    }
}

ojson bigint_to_json(const BigInt& v) {
    if (v.fits_slong_p())
        return ojson(static_cast<std::int64_t>(v.get_si()));
    return ojson(v.get_str());
}

BigInt bigint_from_json(const ojson& j, const std::string& where) {
    if (j.is_number_integer())
        return BigInt(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) {
        // may exceed int64; go through the decimal form
        return bigint_from_decimal(std::to_string(j.get<std::uint64_t>()));
    }
    if (j.is_string()) {
        try {
            return bigint_from_decimal(j.get<std::string>());
        } catch (const Error& e) {
            parse_fail(where, e.what());
        }
    }
    if (j.is_number_float())
        parse_fail(where,
                   "non-integer number; use a decimal string for values "
                   "beyond 64 bits");
    parse_fail(where, "expected an integer");
}

ojson to_json(const ChowClass& a) {
    ojson arr = ojson::array();
    for (const BigInt& c : a.coeffs())
        arr.push_back(bigint_to_json(c));
    return arr;
}

ChowClass class_from_json(const ojson& j, std::optional<int> ambient) {
    std::vector<BigInt> coeffs = int_array_from_json(j, "class");
    if (coeffs.empty())
        parse_fail("class", "a class needs at least one coefficient");
    if (ambient && coeffs.size() != static_cast<std::size_t>(*ambient) + 1)
        parse_fail("class", "expected " + std::to_string(*ambient + 1) +
                                " coefficients for P^" + std::to_string(*ambient) +
                                ", got " + std::to_string(coeffs.size()));
    const int n = static_cast<int>(coeffs.size()) - 1;
    return ChowClass(n, std::move(coeffs));
}

ojson to_json(const VirtualBundle& e) {
    ojson roots = ojson::array();
    for (const BundleRoot& r : e.roots())
        roots.push_back(ojson::array({r.twist, r.multiplicity}));
    return ojson{{"roots", std::move(roots)}};
}

VirtualBundle bundle_from_json(const ojson& j, int ambient_dim) {
    const ojson& roots_json = require_field(j, "bundle", "roots");
    reject_unknown_fields(j, "bundle", {"roots"});
    if (!roots_json.is_array())
        parse_fail("bundle.roots", "expected an array of [twist, multiplicity] pairs");
    std::vector<BundleRoot> roots;
    roots.reserve(roots_json.size());
    for (std::size_t i = 0; i < roots_json.size(); ++i) {
        const ojson& pair = roots_json[i];
        const std::string where = "bundle.roots[" + std::to_string(i) + "]";
        if (!pair.is_array() || pair.size() != 2)
            parse_fail(where, "expected a [twist, multiplicity] pair");
        roots.push_back(BundleRoot{small_int_from_json(pair[0], where + "[0]"),
                                   small_int_from_json(pair[1], where + "[1]")});
    }
    return VirtualBundle(ambient_dim, std::move(roots));
}

ojson to_json(const HypersurfaceModel& x) {
    ojson singular;
    switch (x.kind()) {
        case SingularModelKind::Smooth:
            singular = ojson{{"model", "smooth"}};
            break;
        case SingularModelKind::Points:
            singular = ojson{{"model", "points"}, {"count", x.points_count()}};
            break;
        case SingularModelKind::Linear:
            singular = ojson{{"model", "linear"}, {"dim", x.linear_dim()}};
            break;
        case SingularModelKind::Explicit:
            singular = ojson{{"model", "explicit"},
                             {"segre", to_json(x.segre_singular())}};
            break;
    }
    return ojson{{"ambient", x.ambient_dim()},
                 {"degree", x.degree()},
                 {"singular", std::move(singular)}};
}

HypersurfaceModel hypersurface_from_json(const ojson& j) {
    reject_unknown_fields(j, "hypersurface", {"ambient", "degree", "singular"});
    const long ambient = small_int_from_json(
        require_field(j, "hypersurface", "ambient"), "ambient");
    const long degree =
        small_int_from_json(require_field(j, "hypersurface", "degree"), "degree");
    if (ambient < 1 || ambient > kMaxAmbient)
        parse_fail("ambient", "expected an integer in [1, " +
                                  std::to_string(kMaxAmbient) + "]");
    if (degree < 1)
        parse_fail("degree", "expected an integer >= 1, got " +
                                 std::to_string(degree));
    const ojson& singular = require_field(j, "hypersurface", "singular");
    const ojson& model_json = require_field(singular, "singular", "model");
    if (!model_json.is_string())
        parse_fail("singular.model", "expected a string");
    const std::string model = model_json.get<std::string>();
    try {
        if (model == "smooth") {
            reject_unknown_fields(singular, "singular", {"model"});
            return HypersurfaceModel::smooth(static_cast<int>(ambient), degree);
        }
        if (model == "points") {
            reject_unknown_fields(singular, "singular", {"model", "count"});
            const long count = small_int_from_json(
                require_field(singular, "singular", "count"), "singular.count");
            return HypersurfaceModel::points(static_cast<int>(ambient), degree, count);
        }
        if (model == "linear") {
            reject_unknown_fields(singular, "singular", {"model", "dim"});
            const long dim = small_int_from_json(
                require_field(singular, "singular", "dim"), "singular.dim");
            return HypersurfaceModel::linear(static_cast<int>(ambient), degree,
                                             static_cast<int>(dim));
        }
        if (model == "explicit") {
            reject_unknown_fields(singular, "singular", {"model", "segre"});
            ChowClass segre =
                class_from_json(require_field(singular, "singular", "segre"),
                                static_cast<int>(ambient));
            return HypersurfaceModel::with_segre(static_cast<int>(ambient), degree,
                                                 std::move(segre));
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Parse)
            throw;
        parse_fail("singular", e.what());
    }
    parse_fail("singular.model", "unknown model '" + model +
                                     "'; expected smooth, points, linear or explicit");
}

ojson to_json(const Correspondence& alpha) {
    const int n = alpha.ambient_dim();
    ojson grid = ojson::array();
    for (int i = 0; i <= n; ++i) {
        ojson row = ojson::array();
        for (int j = 0; j <= n; ++j)
            row.push_back(bigint_to_json(alpha.entry(i, j)));
        grid.push_back(std::move(row));
    }
    return ojson{{"ambient", n}, {"grid", std::move(grid)}};
}

namespace {

// Shared reader for the {"ambient": N, <key>: [[...], ...]} grid documents.
template <typename T>
T square_grid_from_json(const ojson& j, const char* key, const char* what) {
    reject_unknown_fields(j, what, {"ambient", key});
    const long ambient =
        small_int_from_json(require_field(j, what, "ambient"), "ambient");
    if (ambient < 1 || ambient > kMaxAmbient)
        parse_fail("ambient", "expected an integer in [1, " +
                                  std::to_string(kMaxAmbient) + "]");
    const int n = static_cast<int>(ambient);
    const ojson& grid = require_field(j, what, key);
    if (!grid.is_array() || grid.size() != static_cast<std::size_t>(n) + 1)
        parse_fail(key, "expected " + std::to_string(n + 1) + " rows");
    T out(n);
    for (int i = 0; i <= n; ++i) {
        const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
        std::vector<BigInt> row = int_array_from_json(grid[i], where);
        if (row.size() != static_cast<std::size_t>(n) + 1)
            parse_fail(where, "expected " + std::to_string(n + 1) + " entries");
        for (int k = 0; k <= n; ++k)
            out.set_entry(i, k, std::move(row[static_cast<std::size_t>(k)]));
    }
    return out;
}

}  // namespace

Correspondence corr_from_json(const ojson& j) {
    return square_grid_from_json<Correspondence>(j, "grid", "correspondence");
}

ojson to_json(const OperatorMatrix& m) {
    const int n = m.ambient_dim();
    ojson rows = ojson::array();
    for (int i = 0; i <= n; ++i) {
        ojson row = ojson::array();
        for (int j = 0; j <= n; ++j)
            row.push_back(bigint_to_json(m.entry(i, j)));
        rows.push_back(std::move(row));
    }
    return ojson{{"ambient", n}, {"matrix", std::move(rows)}};
}

OperatorMatrix matrix_from_json(const ojson& j) {
    return square_grid_from_json<OperatorMatrix>(j, "matrix", "matrix");
}

}  // namespace chowcal
