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

/* chowcal -- exact intersection-theory calculator for projective space.
 *
 * C interface of libchowcal.  All objects are opaque handles created and
 * destroyed through these functions; every operation is a pure function
 * of its inputs, so handles may be shared freely across threads as long
 * as each handle is destroyed exactly once.
 *
 * Conventions:
 *   - Classes on P^N are integer vectors indexed by CODIMENSION:
 *     coefficient i is the coefficient of H^i.
 *   - Functions return chow_status; results come back through out
 *     parameters, which are written only on CHOW_OK.
 *   - Integer values cross the boundary as decimal strings, so nothing is
 *     truncated.  Strings returned through char** out parameters are
 *     heap-allocated; release them with chow_string_free().
 *   - On failure, chow_last_error() returns a thread-local description of
 *     what went wrong, valid until the next chowcal call on that thread.
 */

#ifndef CHOWCAL_H
#define CHOWCAL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chow_status {
    CHOW_OK = 0,
    CHOW_ERR_ARGUMENT = 1,  /* invalid argument / violated precondition */
    CHOW_ERR_DIMENSION = 2, /* ambient dimensions of operands disagree */
    CHOW_ERR_UNIT = 3,      /* leading coefficient not a unit */
    CHOW_ERR_PARSE = 4,     /* malformed text or JSON input */
    CHOW_ERR_NULL = 5       /* null handle or output pointer */
} chow_status;

/* Library version, a static string such as "0.1.0". */
const char* chow_version(void);

/* Stable name of a status code ("ok", "argument", ...). */
const char* chow_status_name(chow_status status);

/* Thread-local message describing the most recent failure on this
 * thread; empty string if none. */
const char* chow_last_error(void);

/* Release a string returned through a char** out parameter. */
void chow_string_free(char* s);

/* ---------------------------------------------------------------- *
 *  Chow classes on P^N                                             *
 * ---------------------------------------------------------------- */

typedef struct chow_class chow_class;

/* The zero class on P^ambient_dim. */
chow_status chow_class_new(int ambient_dim, chow_class** out);

/* Build a class from len = ambient_dim+1 coefficients by codimension. */
chow_status chow_class_from_int64(int ambient_dim, const int64_t* coeffs,
                                  size_t len, chow_class** out);

/* Parse the text form, e.g. "3H + 1H^2" or "-1H - 1H^2".  Pass
 * ambient_dim = -1 to infer the dimension from the largest exponent. */
chow_status chow_class_parse_text(const char* text, int ambient_dim,
                                  chow_class** out);

/* Parse the JSON array form [c0, c1, ..., cN] (integers or decimal
 * strings). */
chow_status chow_class_parse_json(const char* json, chow_class** out);

chow_status chow_class_clone(const chow_class* a, chow_class** out);
void chow_class_free(chow_class* a);

/* Ambient dimension N, or -1 on a null handle. */
int chow_class_ambient(const chow_class* a);

/* Coefficient of H^codim as a decimal string. */
chow_status chow_class_coeff(const chow_class* a, int codim, char** out);

chow_status chow_class_set_coeff(chow_class* a, int codim,
                                 const char* decimal);

/* 1 if equal, 0 if not, -1 on null handles. */
int chow_class_equal(const chow_class* a, const chow_class* b);

/* Canonical text form; re-parses to an identical class. */
chow_status chow_class_to_text(const chow_class* a, char** out);

/* JSON array form, codimension-indexed. */
chow_status chow_class_to_json(const chow_class* a, char** out);

/* Ring and module structure. */
chow_status chow_class_add(const chow_class* a, const chow_class* b,
                           chow_class** out);
chow_status chow_class_negate(const chow_class* a, chow_class** out);
chow_status chow_ring_product(const chow_class* a, const chow_class* b,
                              chow_class** out);

/* Inverse of a class whose leading coefficient is +1 or -1. */
chow_status chow_unit_inverse(const chow_class* a, chow_class** out);

/* Sign flip on odd-codimension components; an involution. */
chow_status chow_dual(const chow_class* a, chow_class** out);

/* The Pic-action of O(twist): codimension-i parts divided by c(O(twist))^i. */
chow_status chow_tensor_line(const chow_class* a, long twist, chow_class** out);

/* The involution a |-> c(O(twist))^n cap (dual(a) tensor O(twist));
 * applying it twice gives back the argument exactly. */
chow_status chow_involution(const chow_class* a, long n, long twist,
                            chow_class** out);

/* Pushforward to a point: coefficient of H^N, as a decimal string. */
chow_status chow_degree(const chow_class* a, char** out);

/* (1 + twist*H)^exponent on P^ambient_dim, any integer exponent. */
chow_status chow_chern_power(int ambient_dim, long twist, long exponent,
                             chow_class** out);

/* Generalized binomial coefficient C(upper, lower), integer upper index
 * of either sign, 0 whenever lower < 0; decimal string result. */
chow_status chow_binomial(long upper, long lower, char** out);

/* ---------------------------------------------------------------- *
 *  Virtual bundles (formal multisets of line-bundle roots)         *
 * ---------------------------------------------------------------- */

typedef struct chow_bundle chow_bundle;

/* Build a bundle from parallel arrays of twists and multiplicities; the
 * root list is normalized (merged, zero multiplicities dropped). */
chow_status chow_bundle_new(int ambient_dim, const long* twists,
                            const long* multiplicities, size_t count,
                            chow_bundle** out);

/* Parse {"roots": [[twist, multiplicity], ...]}. */
chow_status chow_bundle_parse_json(const char* json, int ambient_dim,
                                   chow_bundle** out);

/* Tangent bundle of P^ambient_dim: roots {(1, N+1), (0, -1)}. */
chow_status chow_bundle_tangent(int ambient_dim, chow_bundle** out);

/* Cotangent bundle, the dual of the tangent bundle. */
chow_status chow_bundle_cotangent(int ambient_dim, chow_bundle** out);

void chow_bundle_free(chow_bundle* e);

int chow_bundle_ambient(const chow_bundle* e);

/* Sum of multiplicities (may be negative). */
chow_status chow_bundle_rank(const chow_bundle* e, long long* out);

int chow_bundle_equal(const chow_bundle* a, const chow_bundle* b);

chow_status chow_bundle_dual(const chow_bundle* e, chow_bundle** out);
chow_status chow_bundle_tensor_line(const chow_bundle* e, long twist,
                                    chow_bundle** out);

/* Total Chern class prod (1 + a_i H)^{mu_i}, truncated at H^N. */
chow_status chow_bundle_chern_total(const chow_bundle* e, chow_class** out);

chow_status chow_bundle_to_json(const chow_bundle* e, char** out);

/* ---------------------------------------------------------------- *
 *  Hypersurfaces in P^N with a Segre-class model of the singular   *
 *  scheme                                                          *
 * ---------------------------------------------------------------- */

typedef struct chow_hypersurface chow_hypersurface;

chow_status chow_hypersurface_smooth(int ambient_dim, long degree,
                                     chow_hypersurface** out);
chow_status chow_hypersurface_points(int ambient_dim, long degree, long count,
                                     chow_hypersurface** out);
chow_status chow_hypersurface_linear(int ambient_dim, long degree, int dim,
                                     chow_hypersurface** out);

/* Explicitly supplied Segre class of the singular scheme; its
 * codimension-0 coefficient must be zero. */
chow_status chow_hypersurface_explicit(int ambient_dim, long degree,
                                       const chow_class* segre,
                                       chow_hypersurface** out);

/* Parse {"ambient": N, "degree": d, "singular": {...}}. */
chow_status chow_hypersurface_parse_json(const char* json,
                                         chow_hypersurface** out);
chow_status chow_hypersurface_to_json(const chow_hypersurface* x, char** out);

void chow_hypersurface_free(chow_hypersurface* x);

int chow_hypersurface_ambient(const chow_hypersurface* x);
long chow_hypersurface_degree(const chow_hypersurface* x);

/* The Segre class s(X_s, P^N) of the singular scheme. */
chow_status chow_hypersurface_segre(const chow_hypersurface* x,
                                    chow_class** out);

/* The fundamental class [X] = degree * H. */
chow_status chow_hypersurface_fundamental(const chow_hypersurface* x,
                                          chow_class** out);

/* Characteristic classes, all pushed forward to A_*P^N. */
chow_status chow_fulton(const chow_hypersurface* x, chow_class** out);
chow_status chow_csm(const chow_hypersurface* x, chow_class** out);
chow_status chow_milnor(const chow_hypersurface* x, chow_class** out);
chow_status chow_le_class(const chow_hypersurface* x, chow_class** out);
chow_status chow_mu_class(const chow_hypersurface* x, chow_class** out);
chow_status chow_aluffi(const chow_hypersurface* x, chow_class** out);

/* The level-n dual partners of the Milnor and Fulton classes. */
chow_status chow_alpha_n(const chow_hypersurface* x, long n, chow_class** out);
chow_status chow_nu_n(const chow_hypersurface* x, long n, chow_class** out);

/* Component-by-component binomial assemblies; paper_sign = 0 selects the
 * involution-consistent sign (-1)^{N-k-j}, nonzero the printed (-1)^{j+k}
 * form, which differs by the global factor (-1)^N. */
chow_status chow_milnor_from_le(const chow_hypersurface* x, int paper_sign,
                                chow_class** out);
chow_status chow_le_from_milnor(const chow_hypersurface* x, int paper_sign,
                                chow_class** out);

/* Euler characteristic (degree of the CSM class), decimal string. */
chow_status chow_euler(const chow_hypersurface* x, char** out);

/* ---------------------------------------------------------------- *
 *  Correspondences on P^N x P^N                                    *
 * ---------------------------------------------------------------- */

typedef struct chow_corr chow_corr;

/* Zero correspondence; ambient_dim >= 1. */
chow_status chow_corr_new(int ambient_dim, chow_corr** out);

/* The diagonal class sum_j x^{N-j} y^j (the identity correspondence). */
chow_status chow_corr_diagonal(int ambient_dim, chow_corr** out);

/* The unique correspondence realizing the involution i_{n,O(m)}. */
chow_status chow_corr_involutive(int ambient_dim, long n, long m,
                                 chow_corr** out);

/* Parse the text form "x + x*y - y"; ambient_dim = -1 infers the
 * dimension from the largest exponent (at least 1). */
chow_status chow_corr_parse_text(const char* text, int ambient_dim,
                                 chow_corr** out);

/* Parse {"ambient": N, "grid": [[...], ...]} (rows = x exponent). */
chow_status chow_corr_parse_json(const char* json, chow_corr** out);

chow_status chow_corr_to_text(const chow_corr* alpha, char** out);
chow_status chow_corr_to_json(const chow_corr* alpha, char** out);

void chow_corr_free(chow_corr* alpha);

int chow_corr_ambient(const chow_corr* alpha);
int chow_corr_equal(const chow_corr* a, const chow_corr* b);

/* Coefficient of x^i y^j as a decimal string. */
chow_status chow_corr_entry(const chow_corr* alpha, int x_exp, int y_exp,
                            char** out);
chow_status chow_corr_set_entry(chow_corr* alpha, int x_exp, int y_exp,
                                const char* decimal);

/* q_*(alpha . p^* beta): the action on classes in the first factor. */
chow_status chow_corr_pushforward(const chow_corr* alpha, const chow_class* beta,
                                  chow_class** out);

/* p_*(alpha . q^* gamma): the action in the other direction. */
chow_status chow_corr_pullback(const chow_corr* alpha, const chow_class* gamma,
                               chow_class** out);

/* The correspondence acting as outer_* o inner_*. */
chow_status chow_corr_compose(const chow_corr* outer, const chow_corr* inner,
                              chow_corr** out);

/* The pushforward operator in the monomial basis, as
 * {"ambient": N, "matrix": [[...], ...]}; entry (i,j) is the H^i
 * coefficient of the image of H^j. */
chow_status chow_corr_to_matrix_json(const chow_corr* alpha, char** out);

/* Inverse of the above: the unique correspondence with the given
 * operator matrix. */
chow_status chow_corr_from_matrix_json(const char* json, chow_corr** out);

/* ---------------------------------------------------------------- *
 *  Identity verification suite                                     *
 * ---------------------------------------------------------------- */

typedef struct chow_verify_options {
    uint64_t seed;      /* RNG seed; same seed => byte-identical report */
    int max_dim;        /* largest ambient dimension swept, >= 0 */
    int json_format;    /* 0 = text report, nonzero = JSON report */
    const char* mutant; /* NULL or "none", or an injected defect such as
                         * "dual-sign" for harness self-tests */
} chow_verify_options;

/* Run the full identity suite.  all_passed is set to 1 when every check
 * holds and 0 otherwise (the report then contains a counterexample);
 * the status reports only operational errors such as a bad mutant name. */
chow_status chow_verify_run(const chow_verify_options* options,
                            char** report_out, int* all_passed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CHOWCAL_H */
