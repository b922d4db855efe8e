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

#include <chowcal.h>

#include <cstdint>
#include <string>

namespace {

std::string take(char* s) {
    std::string out = s != nullptr ? s : "";
    chow_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("version and status names") {
    CHECK(std::string(chow_version()) == "0.1.0");
    CHECK(std::string(chow_status_name(CHOW_OK)) == "ok");
    CHECK(std::string(chow_status_name(CHOW_ERR_PARSE)) == "parse");
}

TEST_CASE("class lifecycle through the C interface") {
    chow_class* a = nullptr;
    const int64_t coeffs[3] = {0, 3, 1};
    REQUIRE(chow_class_from_int64(2, coeffs, 3, &a) == CHOW_OK);
    CHECK(chow_class_ambient(a) == 2);

    char* text = nullptr;
    REQUIRE(chow_class_to_text(a, &text) == CHOW_OK);
    CHECK(take(text) == "3H + 1H^2");

    char* json = nullptr;
    REQUIRE(chow_class_to_json(a, &json) == CHOW_OK);
    CHECK(take(json) == "[0,3,1]");

    chow_class* b = nullptr;
    REQUIRE(chow_class_parse_text("3H + 1H^2", -1, &b) == CHOW_OK);
    CHECK(chow_class_equal(a, b) == 1);

    chow_class* c = nullptr;
    REQUIRE(chow_class_parse_json("[0,3,1]", &c) == CHOW_OK);
    CHECK(chow_class_equal(a, c) == 1);

    char* coeff = nullptr;
    REQUIRE(chow_class_coeff(a, 1, &coeff) == CHOW_OK);
    CHECK(take(coeff) == "3");
    REQUIRE(chow_class_set_coeff(a, 0, "123456789012345678901234567890") ==
            CHOW_OK);
    REQUIRE(chow_class_coeff(a, 0, &coeff) == CHOW_OK);
    CHECK(take(coeff) == "123456789012345678901234567890");

    chow_class_free(a);
    chow_class_free(b);
    chow_class_free(c);
}

TEST_CASE("ring operations and the involution") {
    chow_class* h = nullptr;
    REQUIRE(chow_class_parse_text("1H", 2, &h) == CHOW_OK);

    chow_class* image = nullptr;
    REQUIRE(chow_involution(h, 2, 1, &image) == CHOW_OK);
    char* text = nullptr;
    REQUIRE(chow_class_to_text(image, &text) == CHOW_OK);
    CHECK(take(text) == "-1H - 1H^2");

    chow_class* back = nullptr;
    REQUIRE(chow_involution(image, 2, 1, &back) == CHOW_OK);
    CHECK(chow_class_equal(back, h) == 1);

    chow_class* d = nullptr;
    REQUIRE(chow_dual(h, &d) == CHOW_OK);
    chow_class* dd = nullptr;
    REQUIRE(chow_dual(d, &dd) == CHOW_OK);
    CHECK(chow_class_equal(dd, h) == 1);

    chow_class* p = nullptr;
    REQUIRE(chow_chern_power(2, 3, -1, &p) == CHOW_OK);
    REQUIRE(chow_class_to_text(p, &text) == CHOW_OK);
    CHECK(take(text) == "1 - 3H + 9H^2");

    char* deg = nullptr;
    REQUIRE(chow_degree(image, &deg) == CHOW_OK);
    CHECK(take(deg) == "-1");

    char* binom = nullptr;
    REQUIRE(chow_binomial(-1, 2, &binom) == CHOW_OK);
    CHECK(take(binom) == "1");

    chow_class_free(h);
    chow_class_free(image);
    chow_class_free(back);
    chow_class_free(d);
    chow_class_free(dd);
    chow_class_free(p);
}

TEST_CASE("error codes and messages") {
    chow_class* out = nullptr;
    CHECK(chow_class_parse_text("gibberish", -1, &out) == CHOW_ERR_PARSE);
    CHECK(std::string(chow_last_error()).find("position") != std::string::npos);

    chow_class* a = nullptr;
    chow_class* b = nullptr;
    REQUIRE(chow_class_parse_text("1H", 1, &a) == CHOW_OK);
    REQUIRE(chow_class_parse_text("1H", 2, &b) == CHOW_OK);
    CHECK(chow_ring_product(a, b, &out) == CHOW_ERR_DIMENSION);

    chow_class* two = nullptr;
    REQUIRE(chow_class_parse_text("2 + 1H", 1, &two) == CHOW_OK);
    CHECK(chow_unit_inverse(two, &out) == CHOW_ERR_UNIT);

    CHECK(chow_dual(nullptr, &out) == CHOW_ERR_NULL);
    CHECK(chow_class_equal(a, nullptr) == -1);
    CHECK(chow_class_new(-3, &out) == CHOW_ERR_ARGUMENT);

    chow_class_free(a);
    chow_class_free(b);
    chow_class_free(two);
}

TEST_CASE("bundles through the C interface") {
    chow_bundle* tangent = nullptr;
    REQUIRE(chow_bundle_tangent(2, &tangent) == CHOW_OK);
    long long rank = 0;
    REQUIRE(chow_bundle_rank(tangent, &rank) == CHOW_OK);
    CHECK(rank == 2);

    chow_class* c = nullptr;
    REQUIRE(chow_bundle_chern_total(tangent, &c) == CHOW_OK);
    char* text = nullptr;
    REQUIRE(chow_class_to_text(c, &text) == CHOW_OK);
    CHECK(take(text) == "1 + 3H + 3H^2");

    chow_bundle* twisted = nullptr;
    REQUIRE(chow_bundle_tensor_line(tangent, 2, &twisted) == CHOW_OK);
    char* json = nullptr;
    REQUIRE(chow_bundle_to_json(twisted, &json) == CHOW_OK);
    CHECK(take(json) == R"({"roots":[[2,-1],[3,3]]})");

    chow_bundle* parsed = nullptr;
    REQUIRE(chow_bundle_parse_json(R"({"roots":[[3,3],[2,-1]]})", 2, &parsed) ==
            CHOW_OK);
    CHECK(chow_bundle_equal(parsed, twisted) == 1);

    chow_bundle_free(tangent);
    chow_bundle_free(twisted);
    chow_bundle_free(parsed);
    chow_class_free(c);
}

TEST_CASE("hypersurfaces through the C interface") {
    chow_hypersurface* nodal = nullptr;
    REQUIRE(chow_hypersurface_parse_json(
                R"({"ambient":2,"degree":3,"singular":{"model":"points","count":1}})",
                &nodal) == CHOW_OK);
    CHECK(chow_hypersurface_ambient(nodal) == 2);
    CHECK(chow_hypersurface_degree(nodal) == 3);

    chow_class* c = nullptr;
    char* text = nullptr;
    REQUIRE(chow_csm(nodal, &c) == CHOW_OK);
    REQUIRE(chow_class_to_text(c, &text) == CHOW_OK);
    CHECK(take(text) == "3H + 1H^2");
    chow_class_free(c);

    REQUIRE(chow_milnor(nodal, &c) == CHOW_OK);
    REQUIRE(chow_class_to_text(c, &text) == CHOW_OK);
    CHECK(take(text) == "1H^2");
    chow_class_free(c);

    char* euler = nullptr;
    REQUIRE(chow_euler(nodal, &euler) == CHOW_OK);
    CHECK(take(euler) == "1");

    // alpha_n duality at n = 0 through the C surface
    chow_class* alpha = nullptr;
    chow_class* milnor_cls = nullptr;
    chow_class* image = nullptr;
    REQUIRE(chow_alpha_n(nodal, 0, &alpha) == CHOW_OK);
    REQUIRE(chow_milnor(nodal, &milnor_cls) == CHOW_OK);
    REQUIRE(chow_involution(alpha, 0, 3, &image) == CHOW_OK);
    CHECK(chow_class_equal(image, milnor_cls) == 1);
    chow_class_free(alpha);
    chow_class_free(milnor_cls);
    chow_class_free(image);

    chow_class* bad_segre = nullptr;
    const int64_t coeffs[3] = {1, 0, 0};
    REQUIRE(chow_class_from_int64(2, coeffs, 3, &bad_segre) == CHOW_OK);
    chow_hypersurface* bad = nullptr;
    CHECK(chow_hypersurface_explicit(2, 2, bad_segre, &bad) == CHOW_ERR_ARGUMENT);
    chow_class_free(bad_segre);

    chow_hypersurface_free(nodal);
}

TEST_CASE("correspondences through the C interface") {
    chow_corr* alpha = nullptr;
    REQUIRE(chow_corr_involutive(1, 0, 0, &alpha) == CHOW_OK);
    char* text = nullptr;
    REQUIRE(chow_corr_to_text(alpha, &text) == CHOW_OK);
    CHECK(take(text) == "x - y");

    chow_class* beta = nullptr;
    REQUIRE(chow_class_parse_text("3 + 5H", 1, &beta) == CHOW_OK);
    chow_class* pushed = nullptr;
    REQUIRE(chow_corr_pushforward(alpha, beta, &pushed) == CHOW_OK);
    chow_class* dualled = nullptr;
    REQUIRE(chow_dual(beta, &dualled) == CHOW_OK);
    CHECK(chow_class_equal(pushed, dualled) == 1);

    chow_corr* square = nullptr;
    REQUIRE(chow_corr_compose(alpha, alpha, &square) == CHOW_OK);
    chow_corr* diagonal = nullptr;
    REQUIRE(chow_corr_diagonal(1, &diagonal) == CHOW_OK);
    CHECK(chow_corr_equal(square, diagonal) == 1);

    char* matrix = nullptr;
    REQUIRE(chow_corr_to_matrix_json(alpha, &matrix) == CHOW_OK);
    const std::string matrix_json = take(matrix);
    CHECK(matrix_json == R"({"ambient":1,"matrix":[[1,0],[0,-1]]})");
    chow_corr* rebuilt = nullptr;
    REQUIRE(chow_corr_from_matrix_json(matrix_json.c_str(), &rebuilt) == CHOW_OK);
    CHECK(chow_corr_equal(rebuilt, alpha) == 1);

    chow_corr* parsed = nullptr;
    REQUIRE(chow_corr_parse_text("x - y", -1, &parsed) == CHOW_OK);
    CHECK(chow_corr_equal(parsed, alpha) == 1);

    CHECK(chow_corr_new(0, &parsed) == CHOW_ERR_ARGUMENT);

    chow_corr_free(alpha);
    chow_corr_free(square);
    chow_corr_free(diagonal);
    chow_corr_free(rebuilt);
    chow_corr_free(parsed);
    chow_class_free(beta);
    chow_class_free(pushed);
    chow_class_free(dualled);
}

TEST_CASE("the verification suite through the C interface") {
    chow_verify_options options{};
    options.seed = 7;
    options.max_dim = 1;
    options.json_format = 0;
    options.mutant = nullptr;

    char* report = nullptr;
    int all_passed = 0;
    REQUIRE(chow_verify_run(&options, &report, &all_passed) == CHOW_OK);
    CHECK(all_passed == 1);
    CHECK(take(report).find("result: PASS") != std::string::npos);

    options.mutant = "dual-sign";
    options.max_dim = 2;
    REQUIRE(chow_verify_run(&options, &report, &all_passed) == CHOW_OK);
    CHECK(all_passed == 0);
    CHECK(take(report).find("counterexample") != std::string::npos);

    options.mutant = "not-a-mutant";
    CHECK(chow_verify_run(&options, &report, &all_passed) == CHOW_ERR_ARGUMENT);

    options.mutant = nullptr;
    options.max_dim = -1;
    CHECK(chow_verify_run(&options, &report, &all_passed) == CHOW_ERR_ARGUMENT);
}
