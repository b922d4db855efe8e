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

#include "hypersurface.hpp"

#include <string>
#include <utility>

#include "binomial.hpp"

namespace chowcal {

namespace {

void check_model(int ambient_dim, long degree) {
    if (ambient_dim < 1)
        fail(ErrorCode::Argument,
             "a hypersurface needs ambient dimension >= 1, got " +
                 std::to_string(ambient_dim));
    if (degree < 1)
        fail(ErrorCode::Argument,
             "hypersurface degree must be >= 1, got " + std::to_string(degree));
}

/// c(T*M tensor O(X)) for M = P^N, X of degree d: the cotangent roots
/// {(-1, N+1), (0, -1)} shifted by d.
ChowClass twisted_cotangent_chern(const HypersurfaceModel& x) {
    return chern_total(
        tensor_by_line(VirtualBundle::cotangent(x.ambient_dim()), x.bundle()));
}

}  // namespace

HypersurfaceModel::HypersurfaceModel(int ambient_dim, long degree,
                                     SingularModelKind kind, ChowClass segre)
    : ambient_(ambient_dim), degree_(degree), kind_(kind), segre_(std::move(segre)) {}

HypersurfaceModel HypersurfaceModel::smooth(int ambient_dim, long degree) {
    check_model(ambient_dim, degree);
    return HypersurfaceModel(ambient_dim, degree, SingularModelKind::Smooth,
                             ChowClass(ambient_dim));
}

HypersurfaceModel HypersurfaceModel::points(int ambient_dim, long degree,
                                            long count) {
    check_model(ambient_dim, degree);
    if (count < 1)
        fail(ErrorCode::Argument,
             "points model needs count >= 1, got " + std::to_string(count));
    ChowClass segre(ambient_dim);
    segre.set_coeff(ambient_dim, BigInt(count));
    HypersurfaceModel m(ambient_dim, degree, SingularModelKind::Points,
                        std::move(segre));
    m.points_count_ = count;
    return m;
}

HypersurfaceModel HypersurfaceModel::linear(int ambient_dim, long degree,
                                            int dim) {
    check_model(ambient_dim, degree);
    if (dim < 0 || dim > ambient_dim - 1)
        fail(ErrorCode::Argument, "linear singular locus dimension " +
                                      std::to_string(dim) +
                                      " out of range [0, " +
                                      std::to_string(ambient_dim - 1) + "]");
    // s(P^dim, P^N) = c(O(1)^{N-dim})^{-1} cap [P^dim].
    const int codim = ambient_dim - dim;
    ChowClass segre =
        ring_product(chern_power(ambient_dim, LineBundle{1}, -static_cast<long>(codim)),
                     ChowClass::hyperplane_power(ambient_dim, codim));
    HypersurfaceModel m(ambient_dim, degree, SingularModelKind::Linear,
                        std::move(segre));
    m.linear_dim_ = dim;
    return m;
}

HypersurfaceModel HypersurfaceModel::with_segre(int ambient_dim, long degree,
                                                ChowClass segre_singular) {
    check_model(ambient_dim, degree);
    if (segre_singular.ambient_dim() != ambient_dim)
        fail(ErrorCode::Dimension,
             "Segre class lives on P^" +
                 std::to_string(segre_singular.ambient_dim()) + ", expected P^" +
                 std::to_string(ambient_dim));
    if (segre_singular.coeff(0) != 0)
        fail(ErrorCode::Argument,
             "the singular scheme is a proper subscheme; its Segre class "
             "cannot have a codimension-0 component");
    return HypersurfaceModel(ambient_dim, degree, SingularModelKind::Explicit,
                             std::move(segre_singular));
}

ChowClass HypersurfaceModel::fundamental_class() const {
    ChowClass x(ambient_);
    x.set_coeff(1, BigInt(degree_));
    return x;
}

ChowClass fulton(const HypersurfaceModel& x) {
    const int n = x.ambient_dim();
    ChowClass tm_over_line =
        ring_product(chern_total(VirtualBundle::tangent(n)),
                     chern_power(n, x.bundle(), -1));
    return ring_product(tm_over_line, x.fundamental_class());
}

ChowClass csm(const HypersurfaceModel& x) {
    const int n = x.ambient_dim();
    ChowClass tm_over_line =
        ring_product(chern_total(VirtualBundle::tangent(n)),
                     chern_power(n, x.bundle(), -1));
    ChowClass inner = x.fundamental_class() +
                      tensor_line(dual(x.segre_singular()), x.bundle());
    return ring_product(tm_over_line, inner);
}

ChowClass milnor(const HypersurfaceModel& x) {
    const int n = x.ambient_dim();
    ChowClass tm_over_line =
        ring_product(chern_total(VirtualBundle::tangent(n)),
                     chern_power(n, x.bundle(), -1));
    return ring_product(tm_over_line,
                        tensor_line(dual(x.segre_singular()), x.bundle()));
}

ChowClass le_class(const HypersurfaceModel& x) {
    ChowClass factor = ring_product(chern_power(x.ambient_dim(), x.bundle(), 1),
                                    twisted_cotangent_chern(x));
    return ring_product(factor, x.segre_singular());
}

ChowClass mu_class(const HypersurfaceModel& x) {
    return ring_product(twisted_cotangent_chern(x), x.segre_singular());
}

ChowClass alpha_n(const HypersurfaceModel& x, long n) {
    const long exponent = n + 1 - x.ambient_dim();
    ChowClass factor = ring_product(twisted_cotangent_chern(x),
                                    chern_power(x.ambient_dim(), x.bundle(), exponent));
    return ring_product(factor, x.segre_singular());
}

ChowClass nu_n(const HypersurfaceModel& x, long n) {
    const long exponent = n - x.ambient_dim();
    ChowClass factor = ring_product(twisted_cotangent_chern(x),
                                    chern_power(x.ambient_dim(), x.bundle(), exponent));
    return ring_product(factor, -x.fundamental_class());
}

ChowClass aluffi_class(const HypersurfaceModel& x) {
    return ring_product(chern_power(x.ambient_dim(), x.bundle(), 1), milnor(x));
}

ChowClass assemble_dual_components(const ChowClass& source, long degree,
                                   SignConvention convention) {
    const int n = source.ambient_dim();
    const BigInt d(degree);
    ChowClass result(n);
    for (int k = 0; k <= n; ++k) {
        // dimension-k output component, codimension n-k
        BigInt acc(0);
        BigInt dj(1);  // d^j
        for (int j = 0; k + j <= n; ++j) {
            const BigInt& src = source.coeff_dim(k + j);
            if (src != 0) {
                const bool negative = (convention == SignConvention::Derived)
                                          ? ((n - k - j) % 2 != 0)
                                          : ((j + k) % 2 != 0);
                BigInt term = binomial(static_cast<long>(j) + k, j) * dj * src;
                acc += negative ? -term : term;
            }
            dj *= d;
        }
        result.set_coeff(n - k, acc);
    }
    return result;
}

ChowClass milnor_components_from_le(const HypersurfaceModel& x,
                                    SignConvention convention) {
    return assemble_dual_components(le_class(x), x.degree(), convention);
}

ChowClass le_components_from_milnor(const HypersurfaceModel& x,
                                    SignConvention convention) {
    return assemble_dual_components(milnor(x), x.degree(), convention);
}

BigInt euler_char(const HypersurfaceModel& x) { return degree(csm(x)); }

}  // namespace chowcal
