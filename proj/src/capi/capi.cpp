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

#include "chowcal.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/binomial.hpp"
#include "core/chow_class.hpp"
#include "core/correspondence.hpp"
#include "core/hypersurface.hpp"
#include "core/json_format.hpp"
#include "core/text_format.hpp"
#include "core/verify.hpp"
#include "core/virtual_bundle.hpp"

struct chow_class {
    chowcal::ChowClass v;
};
struct chow_bundle {
    chowcal::VirtualBundle v;
};
struct chow_hypersurface {
    chowcal::HypersurfaceModel v;
};
struct chow_corr {
    chowcal::Correspondence v;
};

namespace {

thread_local std::string g_last_error;

chow_status map_code(chowcal::ErrorCode code) {
    switch (code) {
        case chowcal::ErrorCode::Argument:
            return CHOW_ERR_ARGUMENT;
        case chowcal::ErrorCode::Dimension:
            return CHOW_ERR_DIMENSION;
        case chowcal::ErrorCode::Unit:
            return CHOW_ERR_UNIT;
        case chowcal::ErrorCode::Parse:
            return CHOW_ERR_PARSE;
    }
    return CHOW_ERR_ARGUMENT;
}

template <typename F>
chow_status guarded(F&& fn) noexcept {
    try {
        g_last_error.clear();
        fn();
        return CHOW_OK;
    } catch (const chowcal::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CHOW_ERR_ARGUMENT;
    }
}

chow_status null_error(const char* what) {
    g_last_error = std::string("null ") + what;
    return CHOW_ERR_NULL;
}

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p != nullptr)
        std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

std::optional<int> optional_ambient(int ambient_dim) {
    if (ambient_dim < 0)
        return std::nullopt;
    return ambient_dim;
}

}  // namespace

extern "C" {

const char* chow_version(void) { return "0.1.0"; }

const char* chow_status_name(chow_status status) {
    switch (status) {
        case CHOW_OK:
            return "ok";
        case CHOW_ERR_ARGUMENT:
            return "argument";
        case CHOW_ERR_DIMENSION:
            return "dimension";
        case CHOW_ERR_UNIT:
            return "unit";
        case CHOW_ERR_PARSE:
            return "parse";
        case CHOW_ERR_NULL:
            return "null";
    }
    return "unknown";
}

const char* chow_last_error(void) { return g_last_error.c_str(); }

void chow_string_free(char* s) { std::free(s); }

/* ---- classes ---- */

chow_status chow_class_new(int ambient_dim, chow_class** out) {
    if (out == nullptr)
        return null_error("output pointer");
    return guarded([&] { *out = new chow_class{chowcal::ChowClass(ambient_dim)}; });
}

chow_status chow_class_from_int64(int ambient_dim, const int64_t* coeffs,
                                  size_t len, chow_class** out) {
    if (out == nullptr || coeffs == nullptr)
        return null_error("argument");
    return guarded([&] {
        std::vector<chowcal::BigInt> v;
        v.reserve(len);
        for (size_t i = 0; i < len; ++i)
            v.emplace_back(static_cast<long>(coeffs[i]));
        *out = new chow_class{chowcal::ChowClass(ambient_dim, std::move(v))};
    });
}

chow_status chow_class_parse_text(const char* text, int ambient_dim,
                                  chow_class** out) {
    if (out == nullptr || text == nullptr)
        return null_error("argument");
    return guarded([&] {
        *out = new chow_class{
            chowcal::parse_class_text(text, optional_ambient(ambient_dim))};
    });
}

chow_status chow_class_parse_json(const char* json, chow_class** out) {
    if (out == nullptr || json == nullptr)
        return null_error("argument");
    return guarded([&] {
        *out = new chow_class{
            chowcal::class_from_json(chowcal::parse_json_text(json))};
    });
}

chow_status chow_class_clone(const chow_class* a, chow_class** out) {
    if (a == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] { *out = new chow_class{a->v}; });
}

void chow_class_free(chow_class* a) { delete a; }

int chow_class_ambient(const chow_class* a) {
    return a == nullptr ? -1 : a->v.ambient_dim();
}

chow_status chow_class_coeff(const chow_class* a, int codim, char** out) {
    if (a == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] { *out = dup_string(chowcal::to_decimal(a->v.coeff(codim))); });
}

chow_status chow_class_set_coeff(chow_class* a, int codim, const char* decimal) {
    if (a == nullptr || decimal == nullptr)
        return null_error("argument");
    return guarded([&] { a->v.set_coeff(codim, chowcal::bigint_from_decimal(decimal)); });
}

int chow_class_equal(const chow_class* a, const chow_class* b) {
    if (a == nullptr || b == nullptr)
        return -1;
    return a->v == b->v ? 1 : 0;
}

chow_status chow_class_to_text(const chow_class* a, char** out) {
    if (a == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] { *out = dup_string(chowcal::to_text(a->v)); });
}

chow_status chow_class_to_json(const chow_class* a, char** out) {
    if (a == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] { *out = dup_string(chowcal::to_json(a->v).dump()); });
}

chow_status chow_class_add(const chow_class* a, const chow_class* b,
                           chow_class** out) {
    if (a == nullptr || b == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] { *out = new chow_class{a->v + b->v}; });
}

chow_status chow_class_negate(const chow_class* a, chow_class** out) {
    if (a == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] { *out = new chow_class{-a->v}; });
}

chow_status chow_ring_product(const chow_class* a, const chow_class* b,
                              chow_class** out) {
    if (a == nullptr || b == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] { *out = new chow_class{chowcal::ring_product(a->v, b->v)}; });
}

chow_status chow_unit_inverse(const chow_class* a, chow_class** out) {
    if (a == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] { *out = new chow_class{chowcal::unit_inverse(a->v)}; });
}

chow_status chow_dual(const chow_class* a, chow_class** out) {
    if (a == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] { *out = new chow_class{chowcal::dual(a->v)}; });
}

chow_status chow_tensor_line(const chow_class* a, long twist, chow_class** out) {
    if (a == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] {
        *out = new chow_class{chowcal::tensor_line(a->v, chowcal::LineBundle{twist})};
    });
}

chow_status chow_involution(const chow_class* a, long n, long twist,
                            chow_class** out) {
    if (a == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] {
        *out = new chow_class{
            chowcal::involution(a->v, n, chowcal::LineBundle{twist})};
    });
}

chow_status chow_degree(const chow_class* a, char** out) {
    if (a == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] { *out = dup_string(chowcal::to_decimal(chowcal::degree(a->v))); });
}

chow_status chow_chern_power(int ambient_dim, long twist, long exponent,
                             chow_class** out) {
    if (out == nullptr)
        return null_error("output pointer");
    return guarded([&] {
        *out = new chow_class{
            chowcal::chern_power(ambient_dim, chowcal::LineBundle{twist}, exponent)};
    });
}

chow_status chow_binomial(long upper, long lower, char** out) {
    if (out == nullptr)
        return null_error("output pointer");
    return guarded(
        [&] { *out = dup_string(chowcal::to_decimal(chowcal::binomial(upper, lower))); });
}

/* ---- bundles ---- */

chow_status chow_bundle_new(int ambient_dim, const long* twists,
                            const long* multiplicities, size_t count,
                            chow_bundle** out) {
    if (out == nullptr || (count > 0 && (twists == nullptr || multiplicities == nullptr)))
        return null_error("argument");
    return guarded([&] {
        std::vector<chowcal::BundleRoot> roots;
        roots.reserve(count);
        for (size_t i = 0; i < count; ++i)
            roots.push_back(chowcal::BundleRoot{twists[i], multiplicities[i]});
        *out = new chow_bundle{chowcal::VirtualBundle(ambient_dim, std::move(roots))};
    });
}

chow_status chow_bundle_parse_json(const char* json, int ambient_dim,
                                   chow_bundle** out) {
    if (out == nullptr || json == nullptr)
        return null_error("argument");
    return guarded([&] {
        *out = new chow_bundle{
            chowcal::bundle_from_json(chowcal::parse_json_text(json), ambient_dim)};
    });
}

chow_status chow_bundle_tangent(int ambient_dim, chow_bundle** out) {
    if (out == nullptr)
        return null_error("output pointer");
    return guarded(
        [&] { *out = new chow_bundle{chowcal::VirtualBundle::tangent(ambient_dim)}; });
}

chow_status chow_bundle_cotangent(int ambient_dim, chow_bundle** out) {
    if (out == nullptr)
        return null_error("output pointer");
    return guarded(
        [&] { *out = new chow_bundle{chowcal::VirtualBundle::cotangent(ambient_dim)}; });
}

void chow_bundle_free(chow_bundle* e) { delete e; }

int chow_bundle_ambient(const chow_bundle* e) {
    return e == nullptr ? -1 : e->v.ambient_dim();
}

chow_status chow_bundle_rank(const chow_bundle* e, long long* out) {
    if (e == nullptr || out == nullptr)
        return null_error("argument");
    *out = e->v.rank();
    return CHOW_OK;
}

int chow_bundle_equal(const chow_bundle* a, const chow_bundle* b) {
    if (a == nullptr || b == nullptr)
        return -1;
    return a->v == b->v ? 1 : 0;
}

chow_status chow_bundle_dual(const chow_bundle* e, chow_bundle** out) {
    if (e == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] { *out = new chow_bundle{chowcal::dual_bundle(e->v)}; });
}

chow_status chow_bundle_tensor_line(const chow_bundle* e, long twist,
                                    chow_bundle** out) {
    if (e == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] {
        *out = new chow_bundle{
            chowcal::tensor_by_line(e->v, chowcal::LineBundle{twist})};
    });
}

chow_status chow_bundle_chern_total(const chow_bundle* e, chow_class** out) {
    if (e == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] { *out = new chow_class{chowcal::chern_total(e->v)}; });
}

chow_status chow_bundle_to_json(const chow_bundle* e, char** out) {
    if (e == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] { *out = dup_string(chowcal::to_json(e->v).dump()); });
}

/* ---- hypersurfaces ---- */

chow_status chow_hypersurface_smooth(int ambient_dim, long degree,
                                     chow_hypersurface** out) {
    if (out == nullptr)
        return null_error("output pointer");
    return guarded([&] {
        *out = new chow_hypersurface{
            chowcal::HypersurfaceModel::smooth(ambient_dim, degree)};
    });
}

chow_status chow_hypersurface_points(int ambient_dim, long degree, long count,
                                     chow_hypersurface** out) {
    if (out == nullptr)
        return null_error("output pointer");
    return guarded([&] {
        *out = new chow_hypersurface{
            chowcal::HypersurfaceModel::points(ambient_dim, degree, count)};
    });
}

chow_status chow_hypersurface_linear(int ambient_dim, long degree, int dim,
                                     chow_hypersurface** out) {
    if (out == nullptr)
        return null_error("output pointer");
    return guarded([&] {
        *out = new chow_hypersurface{
            chowcal::HypersurfaceModel::linear(ambient_dim, degree, dim)};
    });
}

chow_status chow_hypersurface_explicit(int ambient_dim, long degree,
                                       const chow_class* segre,
                                       chow_hypersurface** out) {
    if (out == nullptr || segre == nullptr)
        return null_error("argument");
    return guarded([&] {
        *out = new chow_hypersurface{
            chowcal::HypersurfaceModel::with_segre(ambient_dim, degree, segre->v)};
    });
}

chow_status chow_hypersurface_parse_json(const char* json,
                                         chow_hypersurface** out) {
    if (out == nullptr || json == nullptr)
        return null_error("argument");
    return guarded([&] {
        *out = new chow_hypersurface{
            chowcal::hypersurface_from_json(chowcal::parse_json_text(json))};
    });
}

chow_status chow_hypersurface_to_json(const chow_hypersurface* x, char** out) {
    if (x == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] { *out = dup_string(chowcal::to_json(x->v).dump()); });
}

void chow_hypersurface_free(chow_hypersurface* x) { delete x; }

int chow_hypersurface_ambient(const chow_hypersurface* x) {
    return x == nullptr ? -1 : x->v.ambient_dim();
}

long chow_hypersurface_degree(const chow_hypersurface* x) {
    return x == nullptr ? 0 : x->v.degree();
}

chow_status chow_hypersurface_segre(const chow_hypersurface* x, chow_class** out) {
    if (x == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] { *out = new chow_class{x->v.segre_singular()}; });
}

chow_status chow_hypersurface_fundamental(const chow_hypersurface* x,
                                          chow_class** out) {
    if (x == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] { *out = new chow_class{x->v.fundamental_class()}; });
}

#define CHOWCAL_HS_CLASS_OP(cname, corefn)                            \
    chow_status cname(const chow_hypersurface* x, chow_class** out) { \
        if (x == nullptr || out == nullptr)                           \
            return null_error("argument");                            \
        return guarded([&] { *out = new chow_class{corefn(x->v)}; }); \
    }

CHOWCAL_HS_CLASS_OP(chow_fulton, chowcal::fulton)
CHOWCAL_HS_CLASS_OP(chow_csm, chowcal::csm)
CHOWCAL_HS_CLASS_OP(chow_milnor, chowcal::milnor)
CHOWCAL_HS_CLASS_OP(chow_le_class, chowcal::le_class)
CHOWCAL_HS_CLASS_OP(chow_mu_class, chowcal::mu_class)
CHOWCAL_HS_CLASS_OP(chow_aluffi, chowcal::aluffi_class)

#undef CHOWCAL_HS_CLASS_OP

chow_status chow_alpha_n(const chow_hypersurface* x, long n, chow_class** out) {
    if (x == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] { *out = new chow_class{chowcal::alpha_n(x->v, n)}; });
}

chow_status chow_nu_n(const chow_hypersurface* x, long n, chow_class** out) {
    if (x == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] { *out = new chow_class{chowcal::nu_n(x->v, n)}; });
}

chow_status chow_milnor_from_le(const chow_hypersurface* x, int paper_sign,
                                chow_class** out) {
    if (x == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] {
        *out = new chow_class{chowcal::milnor_components_from_le(
            x->v, paper_sign != 0 ? chowcal::SignConvention::Paper
                                  : chowcal::SignConvention::Derived)};
    });
}

chow_status chow_le_from_milnor(const chow_hypersurface* x, int paper_sign,
                                chow_class** out) {
    if (x == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] {
        *out = new chow_class{chowcal::le_components_from_milnor(
            x->v, paper_sign != 0 ? chowcal::SignConvention::Paper
                                  : chowcal::SignConvention::Derived)};
    });
}

chow_status chow_euler(const chow_hypersurface* x, char** out) {
    if (x == nullptr || out == nullptr)
        return null_error("argument");
    return guarded(
        [&] { *out = dup_string(chowcal::to_decimal(chowcal::euler_char(x->v))); });
}

/* ---- correspondences ---- */

chow_status chow_corr_new(int ambient_dim, chow_corr** out) {
    if (out == nullptr)
        return null_error("output pointer");
    return guarded([&] { *out = new chow_corr{chowcal::Correspondence(ambient_dim)}; });
}

chow_status chow_corr_diagonal(int ambient_dim, chow_corr** out) {
    if (out == nullptr)
        return null_error("output pointer");
    return guarded(
        [&] { *out = new chow_corr{chowcal::Correspondence::diagonal(ambient_dim)}; });
}

chow_status chow_corr_involutive(int ambient_dim, long n, long m,
                                 chow_corr** out) {
    if (out == nullptr)
        return null_error("output pointer");
    return guarded([&] {
        *out = new chow_corr{chowcal::involutive_correspondence(ambient_dim, n, m)};
    });
}

chow_status chow_corr_parse_text(const char* text, int ambient_dim,
                                 chow_corr** out) {
    if (out == nullptr || text == nullptr)
        return null_error("argument");
    return guarded([&] {
        *out = new chow_corr{
            chowcal::parse_corr_text(text, optional_ambient(ambient_dim))};
    });
}

chow_status chow_corr_parse_json(const char* json, chow_corr** out) {
    if (out == nullptr || json == nullptr)
        return null_error("argument");
    return guarded([&] {
        *out = new chow_corr{chowcal::corr_from_json(chowcal::parse_json_text(json))};
    });
}

chow_status chow_corr_to_text(const chow_corr* alpha, char** out) {
    if (alpha == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] { *out = dup_string(chowcal::to_text(alpha->v)); });
}

chow_status chow_corr_to_json(const chow_corr* alpha, char** out) {
    if (alpha == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] { *out = dup_string(chowcal::to_json(alpha->v).dump()); });
}

void chow_corr_free(chow_corr* alpha) { delete alpha; }

int chow_corr_ambient(const chow_corr* alpha) {
    return alpha == nullptr ? -1 : alpha->v.ambient_dim();
}

int chow_corr_equal(const chow_corr* a, const chow_corr* b) {
    if (a == nullptr || b == nullptr)
        return -1;
    return a->v == b->v ? 1 : 0;
}

chow_status chow_corr_entry(const chow_corr* alpha, int x_exp, int y_exp,
                            char** out) {
    if (alpha == nullptr || out == nullptr)
        return null_error("argument");
    return guarded(
        [&] { *out = dup_string(chowcal::to_decimal(alpha->v.entry(x_exp, y_exp))); });
}

chow_status chow_corr_set_entry(chow_corr* alpha, int x_exp, int y_exp,
                                const char* decimal) {
    if (alpha == nullptr || decimal == nullptr)
        return null_error("argument");
    return guarded(
        [&] { alpha->v.set_entry(x_exp, y_exp, chowcal::bigint_from_decimal(decimal)); });
}

chow_status chow_corr_pushforward(const chow_corr* alpha, const chow_class* beta,
                                  chow_class** out) {
    if (alpha == nullptr || beta == nullptr || out == nullptr)
        return null_error("argument");
    return guarded(
        [&] { *out = new chow_class{chowcal::pushforward(alpha->v, beta->v)}; });
}

chow_status chow_corr_pullback(const chow_corr* alpha, const chow_class* gamma,
                               chow_class** out) {
    if (alpha == nullptr || gamma == nullptr || out == nullptr)
        return null_error("argument");
    return guarded(
        [&] { *out = new chow_class{chowcal::pullback(alpha->v, gamma->v)}; });
}

chow_status chow_corr_compose(const chow_corr* outer, const chow_corr* inner,
                              chow_corr** out) {
    if (outer == nullptr || inner == nullptr || out == nullptr)
        return null_error("argument");
    return guarded(
        [&] { *out = new chow_corr{chowcal::compose(outer->v, inner->v)}; });
}

chow_status chow_corr_to_matrix_json(const chow_corr* alpha, char** out) {
    if (alpha == nullptr || out == nullptr)
        return null_error("argument");
    return guarded([&] {
        *out = dup_string(chowcal::to_json(chowcal::to_matrix(alpha->v)).dump());
    });
}

chow_status chow_corr_from_matrix_json(const char* json, chow_corr** out) {
    if (out == nullptr || json == nullptr)
        return null_error("argument");
    return guarded([&] {
        *out = new chow_corr{chowcal::from_matrix(
            chowcal::matrix_from_json(chowcal::parse_json_text(json)))};
    });
}

/* ---- verify ---- */

chow_status chow_verify_run(const chow_verify_options* options,
                            char** report_out, int* all_passed) {
    if (options == nullptr || report_out == nullptr || all_passed == nullptr)
        return null_error("argument");
    return guarded([&] {
        chowcal::verify::Options o;
        o.seed = options->seed;
        if (options->max_dim < 0)
            chowcal::fail(chowcal::ErrorCode::Argument,
                          "max_dim must be non-negative");
        o.max_dim = options->max_dim;
        const char* mutant = options->mutant != nullptr ? options->mutant : "none";
        auto parsed = chowcal::verify::mutant_from_name(mutant);
        if (!parsed)
            chowcal::fail(chowcal::ErrorCode::Argument,
                          std::string("unknown mutant '") + mutant + "'");
        o.mutant = *parsed;
        const chowcal::verify::Report report = chowcal::verify::run(o);
        *report_out =
            dup_string(options->json_format != 0 ? chowcal::verify::render_json(report)
                                                 : chowcal::verify::render_text(report));
        *all_passed = report.all_passed() ? 1 : 0;
    });
}

} /* extern "C" */
